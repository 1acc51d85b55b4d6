#pragma once

#include <gmpxx.h>

#include <string>

namespace qice {

// Exact rational scalar. All arithmetic in the library is over Q; nothing is
// ever rounded.
using Rat = mpq_class;

// Parses "p", "-p", or "p/q" (q != 0). Throws Errc::invalid_input.
Rat parse_rational(const std::string& s);

std::string rat_to_string(const Rat& x);

}  // namespace qice
