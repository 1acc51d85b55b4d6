#include "poly.hpp"

#include <algorithm>

#include "qice/error.hpp"

namespace qice::detail {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out = a;
  if (b.size() > out.size()) out.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return trim(std::move(out));
}

Poly poly_scale(const Poly& a, const Rat& c) {
  if (c == 0) return {};
  Poly out = a;
  for (Rat& x : out) x *= c;
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require(!b.empty(), Errc::internal, "polynomial division by zero");
  Poly rem = a, quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rat(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rat c = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    // The leading coefficient was cancelled exactly, so rem strictly shrinks.
    rem = trim(std::move(rem));
  }
  return {trim(std::move(quot)), std::move(rem)};
}

Poly poly_monic(Poly a) {
  a = trim(std::move(a));
  if (a.empty()) return a;
  Rat inv = 1 / a.back();
  for (Rat& x : a) x *= inv;
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

Poly poly_derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rat(long(i));
  return trim(std::move(out));
}

Rat poly_eval(const Poly& a, const Rat& x) {
  Rat acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

Poly poly_pow(const Poly& a, int e) {
  Poly out{Rat(1)};
  for (int i = 0; i < e; ++i) out = poly_mul(out, a);
  return out;
}

Egcd poly_egcd(const Poly& a, const Poly& b) {
  Poly r0 = trim(a), r1 = trim(b);
  Poly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty()) {
    Rat inv = 1 / r0.back();
    r0 = poly_scale(r0, inv);
    s0 = poly_scale(s0, inv);
    t0 = poly_scale(t0, inv);
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

std::vector<Poly> squarefree_factors(Poly f) {
  f = poly_monic(std::move(f));
  std::vector<Poly> out;
  if (deg(f) < 1) return out;
  Poly fp = poly_derivative(f);
  Poly a0 = poly_gcd(f, fp);
  Poly b = poly_divmod(f, a0).first;
  Poly c = poly_divmod(fp, a0).first;
  Poly d = poly_sub(c, poly_derivative(b));
  while (deg(b) > 0) {
    Poly a = poly_gcd(b, d);
    out.push_back(a);
    b = poly_divmod(b, a).first;
    c = poly_divmod(d, a).first;
    d = poly_sub(c, poly_derivative(b));
  }
  return out;
}

namespace {

// Divisors of |n| by trial division, capped; empty if n == 0 or too rich.
std::vector<mpz_class> bounded_divisors(mpz_class n) {
  std::vector<mpz_class> out;
  n = abs(n);
  if (n == 0) return out;
  mpz_class d = 1;
  long steps = 0;
  for (; d * d <= n; ++d) {
    if (++steps > 200000) return {};
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
      if (out.size() > 4096) return {};
    }
  }
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& f0) {
  std::vector<Rat> roots;
  Poly f = trim(f0);
  if (deg(f) < 1) return roots;
  while (!f.empty() && f.front() == 0) {  // factor out x
    if (roots.empty() || roots.back() != 0) roots.push_back(0);
    f.erase(f.begin());
  }
  f = trim(std::move(f));
  if (deg(f) < 1) return roots;
  // Clear denominators.
  mpz_class den = 1;
  for (const Rat& c : f) den = lcm(den, c.get_den());
  std::vector<mpz_class> ic;
  for (const Rat& c : f) {
    Rat v = c * Rat(den);
    ic.push_back(v.get_num());
  }
  std::vector<mpz_class> ps = bounded_divisors(ic.front());
  std::vector<mpz_class> qs = bounded_divisors(ic.back());
  for (const mpz_class& p : ps) {
    for (const mpz_class& q : qs) {
      for (int sign : {1, -1}) {
        Rat cand(p * sign, q);
        cand.canonicalize();
        if (poly_eval(f, cand) == 0) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f0) {
  Poly f = poly_monic(f0);
  if (deg(f) < 2) return std::nullopt;
  std::vector<Poly> sq = squarefree_factors(f);
  std::vector<Poly> nontrivial;
  for (size_t i = 0; i < sq.size(); ++i)
    if (deg(sq[i]) > 0) nontrivial.push_back(poly_pow(sq[i], int(i) + 1));
  if (nontrivial.size() >= 2) {
    Poly g = nontrivial[0], h{Rat(1)};
    for (size_t i = 1; i < nontrivial.size(); ++i) h = poly_mul(h, nontrivial[i]);
    return std::make_pair(g, h);
  }
  // f = a^e with a squarefree; a rational root of a gives a coprime split.
  for (size_t i = 0; i < sq.size(); ++i) {
    if (deg(sq[i]) <= 0) continue;
    const Poly& a = sq[i];
    int e = int(i) + 1;
    if (deg(a) < 2) return std::nullopt;  // (x - r)^e: no split
    std::vector<Rat> roots = rational_roots(a);
    if (roots.empty()) return std::nullopt;
    Poly lin{-roots[0], Rat(1)};
    Poly rest = poly_divmod(a, lin).first;
    return std::make_pair(poly_pow(lin, e), poly_pow(rest, e));
  }
  return std::nullopt;
}

}  // namespace qice::detail
