#pragma once

// Univariate polynomials over Q: just enough for minimal polynomials and
// coprime splitting (Yun squarefree decomposition, rational roots, Bezout).

#include <optional>
#include <utility>
#include <vector>

#include "qice/rational.hpp"

namespace qice::detail {

using Poly = std::vector<Rat>;  // coefficients, constant term first; empty == 0

inline int deg(const Poly& p) { return int(p.size()) - 1; }

Poly trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_derivative(const Poly& a);
Poly poly_monic(Poly a);
Rat poly_eval(const Poly& a, const Rat& x);
Poly poly_pow(const Poly& a, int e);

struct Egcd {
  Poly g, u, v;  // g = u*a + v*b, g monic
};
Egcd poly_egcd(const Poly& a, const Poly& b);

// Yun: f = prod a_i^i with a_i squarefree, pairwise coprime, monic. Entry i
// (1-based) may be the constant 1.
std::vector<Poly> squarefree_factors(Poly f);

// Rational roots of f (each listed once). May miss roots whose numerator or
// denominator has a divisor past the trial-division cap; callers treat the
// list as best effort.
std::vector<Rat> rational_roots(const Poly& f);

// Splits f into a coprime pair (g, h) with f = g*h, both nonconstant, if one
// is reachable via squarefree structure or a rational root.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f);

}  // namespace qice::detail
