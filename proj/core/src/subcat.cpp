#include "qice/subcat.hpp"

#include <algorithm>
#include <map>

#include "griditer.hpp"
#include "parallel.hpp"
#include "qice/error.hpp"

namespace qice {

namespace {

// Direct sums of at most two census members: singles first, then pairs
// (i <= j), in index order.
struct SumSpecs {
  int n;
  int count() const { return n + n * (n + 1) / 2; }
  std::vector<int> members(int spec) const {
    if (spec < n) return {spec};
    int k = spec - n;
    for (int i = 0; i < n; ++i) {
      int row = n - i;
      if (k < row) return {i, i + k};
      k -= row;
    }
    fail(Errc::internal, "sum spec out of range");
  }
};

uint64_t mask_of_ids(const std::vector<int>& ids) {
  uint64_t m = 0;
  for (int id : ids) m |= uint64_t(1) << id;
  return m;
}

}  // namespace

SubcatSet make_subcat(CensusPtr census, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids)
    require(id >= 0 && id < census->size(), Errc::invalid_input, "census id out of range");
  return SubcatSet{std::move(census), std::move(ids)};
}

std::string subcat_to_string(const SubcatSet& c) {
  if (c.ids.empty()) return "add{0}";
  std::string s = "add{";
  for (size_t k = 0; k < c.ids.size(); ++k) {
    if (k) s += ", ";
    s += c.census->name(c.ids[k]);
  }
  return s + "}";
}

bool subcat_contains(const SubcatSet& c, const Representation& m) {
  require(&m.algebra() == c.census->algebra_ptr().get(), Errc::algebra_mismatch,
          "module over a different algebra");
  if (m.is_zero()) return true;
  std::vector<int> parts = c.census->identify_parts(m);
  for (int p : parts)
    if (!std::binary_search(c.ids.begin(), c.ids.end(), p)) return false;
  return true;
}

uint64_t ClosureTables::mask_of(const std::vector<int>& ids) const { return mask_of_ids(ids); }

std::vector<int> ClosureTables::ids_of(uint64_t mask) const {
  std::vector<int> ids;
  for (int i = 0; i < census_->size(); ++i)
    if (mask & (uint64_t(1) << i)) ids.push_back(i);
  return ids;
}

ClosureTables ClosureTables::build(CensusPtr census, int jobs, int radius) {
  require(census->complete(), Errc::census_incomplete, "closure tables need a complete census");
  const int n = census->size();
  require(n <= 20, Errc::budget_exhausted, "census too large for powerset machinery");
  ClosureTables t;
  t.census_ = census;
  SumSpecs specs{n};
  const int ns = specs.count();

  auto sum_rep = [&](const std::vector<int>& ids) { return census->sum_of(ids); };
  auto parts_mask = [&](const Representation& r) {
    uint64_t m = 0;
    for (int id : census->identify_parts(r)) m |= uint64_t(1) << id;
    return m;
  };

  // Morphism tables: one entry per (source spec, target spec).
  t.morph_.assign(size_t(ns) * ns, {});
  detail::parallel_for(size_t(ns) * ns, jobs, [&](size_t idx) {
    int s = int(idx / ns), d = int(idx % ns);
    std::vector<int> sm = specs.members(s), dm = specs.members(d);
    MorphTuple entry;
    entry.members = mask_of_ids(sm) | mask_of_ids(dm);
    Representation src = sum_rep(sm), dst = sum_rep(dm);
    std::vector<Morphism> homs = hom_basis(src, dst);
    if (!homs.empty()) {
      detail::for_each_grid(int(homs.size()), radius, true, [&](const std::vector<Rat>& c) {
        Morphism f = Morphism::zero(src, dst);
        for (size_t k = 0; k < homs.size(); ++k)
          if (c[k] != 0) f = f + homs[k].scaled(c[k]);
        if (f.is_zero()) return;
        bool inj = f.is_injective(), surj = f.is_surjective();
        if (!inj) entry.ker |= parts_mask(kernel(f).rep);
        if (!surj) entry.cok |= parts_mask(cokernel(f).rep);
        if (inj)
          entry.img |= mask_of_ids(sm);
        else if (surj)
          entry.img |= mask_of_ids(dm);
        else
          entry.img |= parts_mask(image(f).rep);
      });
    }
    t.morph_[idx] = entry;
  });

  // Extension tables: Y over all specs with X single, plus Y single with X a
  // pair; middle-term summands over the grid (split class included for free
  // since its parts are the tuple members).
  struct ExtJob {
    int yspec, xspec;
  };
  std::vector<ExtJob> jobs_list;
  for (int y = 0; y < ns; ++y)
    for (int x = 0; x < n; ++x) jobs_list.push_back({y, x});
  for (int y = 0; y < n; ++y)
    for (int x = n; x < ns; ++x) jobs_list.push_back({y, x});
  t.ext_.assign(jobs_list.size(), {});
  detail::parallel_for(jobs_list.size(), jobs, [&](size_t idx) {
    std::vector<int> ym = specs.members(jobs_list[idx].yspec);
    std::vector<int> xm = specs.members(jobs_list[idx].xspec);
    AddTuple entry;
    entry.members = mask_of_ids(ym) | mask_of_ids(xm);
    Representation y = sum_rep(ym), x = sum_rep(xm);
    ExtSpace es(y, x);
    detail::for_each_grid(es.dim(), radius, true, [&](const std::vector<Rat>& coords) {
      entry.add |= parts_mask(middle_term(es, coords).e);
    });
    t.ext_[idx] = entry;
  });

  // One-step simple-socle quotients per spec.
  t.quot_.assign(ns, {});
  detail::parallel_for(size_t(ns), jobs, [&](size_t idx) {
    std::vector<int> m = specs.members(int(idx));
    AddTuple entry;
    entry.members = mask_of_ids(m);
    for (const Representation& q : simple_quotient_steps(sum_rep(m), radius))
      entry.add |= parts_mask(q);
    t.quot_[idx] = entry;
  });

  return t;
}

ClosureFlags ClosureTables::flags_mask(uint64_t c) const {
  ClosureFlags f;
  f.images = f.cokernels = f.kernels = f.extensions = f.quotients = true;
  for (const MorphTuple& m : morph_) {
    if (m.members & ~c) continue;
    if (m.img & ~c) f.images = false;
    if (m.ker & ~c) f.kernels = false;
    if (m.cok & ~c) f.cokernels = false;
  }
  for (const AddTuple& e : ext_) {
    if (e.members & ~c) continue;
    if (e.add & ~c) {
      f.extensions = false;
      break;
    }
  }
  for (const AddTuple& q : quot_) {
    if (q.members & ~c) continue;
    if (q.add & ~c) {
      f.quotients = false;
      break;
    }
  }
  return f;
}

ClosureFlags ClosureTables::closure_report(const SubcatSet& c) const {
  return flags_mask(mask_of(c.ids));
}

bool ClosureTables::is_ice_mask(uint64_t c) const {
  ClosureFlags f = flags_mask(c);
  return f.images && f.cokernels && f.extensions;
}

bool ClosureTables::is_torsion_mask(uint64_t c) const {
  ClosureFlags f = flags_mask(c);
  return f.quotients && f.extensions;
}

bool ClosureTables::is_wide_mask(uint64_t c) const {
  ClosureFlags f = flags_mask(c);
  return f.kernels && f.cokernels && f.extensions;
}

bool ClosureTables::is_ice(const SubcatSet& c) const { return is_ice_mask(mask_of(c.ids)); }
bool ClosureTables::is_torsion_class(const SubcatSet& c) const {
  return is_torsion_mask(mask_of(c.ids));
}
bool ClosureTables::is_wide(const SubcatSet& c) const { return is_wide_mask(mask_of(c.ids)); }

uint64_t ClosureTables::closure_mask(uint64_t seed) const {
  uint64_t c = seed;
  while (true) {
    uint64_t grown = c;
    for (const MorphTuple& m : morph_) {
      if (m.members & ~c) continue;
      grown |= m.img | m.cok;
    }
    for (const AddTuple& e : ext_) {
      if (e.members & ~c) continue;
      grown |= e.add;
    }
    if (grown == c) return c;
    c = grown;
  }
}

uint64_t ClosureTables::extension_closure_mask(uint64_t seed) const {
  uint64_t c = seed;
  while (true) {
    uint64_t grown = c;
    for (const AddTuple& e : ext_) {
      if (e.members & ~c) continue;
      grown |= e.add;
    }
    if (grown == c) return c;
    c = grown;
  }
}

uint64_t ClosureTables::cokernel_closure_mask(uint64_t seed) const {
  uint64_t c = seed;
  while (true) {
    uint64_t grown = c;
    for (const MorphTuple& m : morph_) {
      if (m.members & ~c) continue;
      grown |= m.cok;
    }
    if (grown == c) return c;
    c = grown;
  }
}

SubcatSet ClosureTables::ice_closure(const SubcatSet& seed) const {
  return make_subcat(census_, ids_of(closure_mask(mask_of(seed.ids))));
}

std::vector<SubcatSet> canonical_subcat_sort(std::vector<SubcatSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const SubcatSet& a, const SubcatSet& b) {
    if (a.ids.size() != b.ids.size()) return a.ids.size() < b.ids.size();
    return a.ids < b.ids;
  });
  return sets;
}

std::vector<SubcatSet> ClosureTables::enumerate_ice(int jobs) const {
  const int n = census_->size();
  const uint64_t total = uint64_t(1) << n;
  std::vector<uint64_t> closure(total, 0);
  // closure(S) = closure(closure(S minus top bit) | top bit): extensive,
  // monotone, idempotent. Subsets of equal popcount are independent.
  std::vector<std::vector<uint64_t>> by_pop(n + 1);
  for (uint64_t s = 1; s < total; ++s) by_pop[__builtin_popcountll(s)].push_back(s);
  for (int pop = 1; pop <= n; ++pop) {
    const std::vector<uint64_t>& level = by_pop[pop];
    detail::parallel_for(level.size(), jobs, [&](size_t k) {
      uint64_t s = level[k];
      uint64_t top = uint64_t(1) << (63 - __builtin_clzll(s));
      closure[s] = closure_mask(closure[s & ~top] | top);
    });
  }
  std::vector<uint64_t> uniq(closure.begin(), closure.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<SubcatSet> out;
  for (uint64_t m : uniq) out.push_back(make_subcat(census_, ids_of(m)));
  return canonical_subcat_sort(std::move(out));
}

}  // namespace qice
