#include "qice/bricks.hpp"

#include <algorithm>

#include "griditer.hpp"
#include "parallel.hpp"
#include "qice/error.hpp"

namespace qice {

BrickSet make_brickset(CensusPtr census, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    require(id >= 0 && id < census->size(), Errc::invalid_input, "census id out of range");
    require(census->is_brick_id(id), Errc::invalid_input,
            "module " + census->name(id) + " is not a brick");
  }
  return BrickSet{std::move(census), std::move(ids)};
}

std::string brickset_to_string(const BrickSet& s) {
  if (s.ids.empty()) return "{0}";
  std::string out = "{";
  for (size_t k = 0; k < s.ids.size(); ++k) {
    if (k) out += ", ";
    out += s.census->name(s.ids[k]);
  }
  return out + "}";
}

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::no_nonzero_maps: return "no-nonzero-maps";
    case PairClass::all_surjective: return "all-surjective";
    case PairClass::all_injective: return "all-injective";
    case PairClass::all_isomorphisms: return "all-isomorphisms";
    case PairClass::mixed: return "mixed";
  }
  return "?";
}

PairReport classify_pair(const Census& census, int x, int y, int radius) {
  require(census.is_brick_id(x) && census.is_brick_id(y), Errc::invalid_input,
          "classify_pair needs bricks");
  const std::vector<Morphism>& homs = census.hom_basis_cached(x, y);
  if (homs.empty()) return {PairClass::no_nonzero_maps, false};
  bool saw_iso = false, saw_surj_only = false, saw_inj_only = false, saw_neither = false;
  auto classify_one = [&](const Morphism& f) {
    bool inj = f.is_injective(), surj = f.is_surjective();
    if (inj && surj)
      saw_iso = true;
    else if (surj)
      saw_surj_only = true;
    else if (inj)
      saw_inj_only = true;
    else
      saw_neither = true;
  };
  if (homs.size() == 1) {
    classify_one(homs[0]);  // scalar multiples share kernel and image
  } else {
    const Representation& xr = census.rep(x);
    const Representation& yr = census.rep(y);
    detail::for_each_grid(int(homs.size()), radius, true, [&](const std::vector<Rat>& c) {
      Morphism f = Morphism::zero(xr, yr);
      for (size_t k = 0; k < homs.size(); ++k)
        if (c[k] != 0) f = f + homs[k].scaled(c[k]);
      if (!f.is_zero()) classify_one(f);
    });
  }
  PairReport out;
  out.beyond_grid = homs.size() >= 2;
  if (saw_neither || (int(saw_iso) + int(saw_surj_only) + int(saw_inj_only)) > 1) {
    out.cls = PairClass::mixed;
    out.beyond_grid = false;  // a mixed witness is definitive
  } else if (saw_iso) {
    out.cls = PairClass::all_isomorphisms;
  } else if (saw_surj_only) {
    out.cls = PairClass::all_surjective;
  } else if (saw_inj_only) {
    out.cls = PairClass::all_injective;
  } else {
    out.cls = PairClass::no_nonzero_maps;  // grid hit only zero combinations
  }
  return out;
}

BrickTables BrickTables::build(CensusPtr census, int jobs, int radius) {
  require(census->complete(), Errc::census_incomplete, "brick tables need a complete census");
  BrickTables t;
  t.census_ = census;
  t.brick_ids_ = census->brick_ids();
  const int n = census->size();
  require(n <= 20, Errc::budget_exhausted, "census too large for powerset machinery");
  t.pairs_.assign(size_t(n) * n, {});
  std::vector<std::pair<int, int>> work;
  for (int i : t.brick_ids_)
    for (int j : t.brick_ids_) work.push_back({i, j});
  detail::parallel_for(work.size(), jobs, [&](size_t k) {
    auto [i, j] = work[k];
    t.pairs_[size_t(i) * n + j] = classify_pair(*census, i, j, radius);
  });
  return t;
}

const PairReport& BrickTables::pair(int x, int y) const {
  return pairs_[size_t(x) * census_->size() + y];
}

bool BrickTables::subset_ok(const std::vector<int>& ids, Kind kind) const {
  for (int x : ids) {
    for (int y : ids) {
      if (x == y) continue;
      const PairReport& pr = pair(x, y);
      bool ok = false;
      switch (kind) {
        case Kind::epi:
          ok = pr.cls == PairClass::no_nonzero_maps || pr.cls == PairClass::all_surjective;
          break;
        case Kind::mono:
          ok = pr.cls == PairClass::no_nonzero_maps || pr.cls == PairClass::all_injective;
          break;
        case Kind::semi:
          // Distinct bricks cannot be isomorphic, so only zero maps qualify.
          ok = pr.cls == PairClass::no_nonzero_maps;
          break;
      }
      if (!ok) return false;
      require(!pr.beyond_grid, Errc::indeterminate,
              "pair (" + census_->name(x) + ", " + census_->name(y) +
                  ") was only classified on the coefficient grid");
    }
  }
  return true;
}

bool BrickTables::is_epibrick(const BrickSet& s) const { return subset_ok(s.ids, Kind::epi); }
bool BrickTables::is_monobrick(const BrickSet& s) const { return subset_ok(s.ids, Kind::mono); }
bool BrickTables::is_semibrick(const BrickSet& s) const { return subset_ok(s.ids, Kind::semi); }

std::vector<BrickSet> BrickTables::enumerate(Kind kind) const {
  const int nb = int(brick_ids_.size());
  std::vector<BrickSet> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << nb); ++mask) {
    std::vector<int> ids;
    for (int k = 0; k < nb; ++k)
      if (mask & (uint64_t(1) << k)) ids.push_back(brick_ids_[k]);
    if (subset_ok(ids, kind)) out.push_back(BrickSet{census_, std::move(ids)});
  }
  return canonical_brickset_sort(std::move(out));
}

std::vector<BrickSet> BrickTables::enumerate_ebricks() const { return enumerate(Kind::epi); }
std::vector<BrickSet> BrickTables::enumerate_mbricks() const { return enumerate(Kind::mono); }
std::vector<BrickSet> BrickTables::enumerate_sbricks() const { return enumerate(Kind::semi); }

std::vector<BrickSet> canonical_brickset_sort(std::vector<BrickSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const BrickSet& a, const BrickSet& b) {
    if (a.ids.size() != b.ids.size()) return a.ids.size() < b.ids.size();
    return a.ids < b.ids;
  });
  return sets;
}

}  // namespace qice
