#pragma once

#include <vector>

#include "qice/census.hpp"

namespace qice {

// A set of pairwise non-isomorphic bricks, by census id. The empty set is
// displayed "{0}".
struct BrickSet {
  CensusPtr census;
  std::vector<int> ids;  // sorted, unique, each a brick
};

BrickSet make_brickset(CensusPtr census, std::vector<int> ids);
std::string brickset_to_string(const BrickSet& s);

enum class PairClass {
  no_nonzero_maps,
  all_surjective,
  all_injective,
  all_isomorphisms,
  mixed,
};

struct PairReport {
  PairClass cls = PairClass::no_nonzero_maps;
  // Set when dim Hom >= 2 and only the coefficient grid was inspected.
  bool beyond_grid = false;
};

const char* pair_class_name(PairClass c);

// Classifies every nonzero morphism X -> Y between two bricks. Exact when
// dim Hom <= 1 (scalar multiples share kernel and image); for larger Hom
// spaces the verdict carries the beyond_grid marker.
PairReport classify_pair(const Census& census, int x, int y, int radius = 1);

// Pairwise classification table plus subset predicates and enumerations.
class BrickTables {
 public:
  static BrickTables build(CensusPtr census, int jobs = 1, int radius = 1);

  const CensusPtr& census() const { return census_; }
  const std::vector<int>& brick_ids() const { return brick_ids_; }
  const PairReport& pair(int x, int y) const;  // census ids, both bricks

  bool is_epibrick(const BrickSet& s) const;
  bool is_monobrick(const BrickSet& s) const;
  bool is_semibrick(const BrickSet& s) const;

  std::vector<BrickSet> enumerate_ebricks() const;
  std::vector<BrickSet> enumerate_mbricks() const;
  std::vector<BrickSet> enumerate_sbricks() const;

 private:
  enum class Kind { epi, mono, semi };
  bool subset_ok(const std::vector<int>& ids, Kind kind) const;
  std::vector<BrickSet> enumerate(Kind kind) const;

  CensusPtr census_;
  std::vector<int> brick_ids_;
  std::vector<PairReport> pairs_;  // indexed over census ids, n*n
};

std::vector<BrickSet> canonical_brickset_sort(std::vector<BrickSet> sets);

}  // namespace qice
