#pragma once

// Iterates coefficient vectors in {-radius..radius}^d, skipping zero. With
// canonical_sign the first nonzero entry is positive, halving the sweep
// (a global sign never changes kernels, images, or middle terms).

#include <vector>

#include "qice/error.hpp"
#include "qice/rational.hpp"

namespace qice::detail {

template <class F>
void for_each_grid(int d, int radius, bool canonical_sign, F&& fn) {
  if (d == 0) return;
  require(d <= 16, Errc::indeterminate, "coefficient grid dimension too large");
  double total = 1;
  for (int i = 0; i < d; ++i) total *= 2 * radius + 1;
  require(total <= 4e6, Errc::indeterminate, "coefficient grid too large");
  std::vector<int> digits(d, 0);  // entry value = digit - radius
  std::vector<Rat> coeffs(d, Rat(-radius));
  while (true) {
    bool zero = true, lead_pos = false;
    for (int i = 0; i < d; ++i) {
      if (digits[i] != radius) {
        zero = false;
        lead_pos = digits[i] > radius;
        break;
      }
    }
    if (!zero && (!canonical_sign || lead_pos)) fn(const_cast<const std::vector<Rat>&>(coeffs));
    int k = 0;
    while (k < d && digits[k] == 2 * radius) {
      digits[k] = 0;
      coeffs[k] = -radius;
      ++k;
    }
    if (k == d) break;
    ++digits[k];
    coeffs[k] = digits[k] - radius;
  }
}

}  // namespace qice::detail
