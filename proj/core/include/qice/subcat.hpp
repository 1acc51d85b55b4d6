#pragma once

#include <cstdint>
#include <vector>

#include "qice/census.hpp"

namespace qice {

// An additively closed subcategory, identified by the census ids of its
// indecomposables. The empty set denotes add{0}.
struct SubcatSet {
  CensusPtr census;
  std::vector<int> ids;  // sorted, unique
};

SubcatSet make_subcat(CensusPtr census, std::vector<int> ids);
std::string subcat_to_string(const SubcatSet& c);  // "add{...}" in census order

// True iff every indecomposable summand of m lies in c.
bool subcat_contains(const SubcatSet& c, const Representation& m);

struct ClosureFlags {
  bool images = false;
  bool cokernels = false;
  bool kernels = false;
  bool extensions = false;
  bool quotients = false;
};

// Sampling tables over a complete census: for every source/target pair of
// direct sums of at most two members, the ids of all indecomposable summands
// of images, kernels and cokernels of coefficient-grid morphisms; middle-term
// summands for extension pairs; one-step simple-socle quotient summands.
// Built once, then shared read-only.
class ClosureTables {
 public:
  static ClosureTables build(CensusPtr census, int jobs = 1, int radius = 1);

  const CensusPtr& census() const { return census_; }

  ClosureFlags closure_report(const SubcatSet& c) const;
  bool is_ice(const SubcatSet& c) const;
  bool is_torsion_class(const SubcatSet& c) const;
  bool is_wide(const SubcatSet& c) const;

  // Least superset of seed closed under image, cokernel and middle-term
  // summands; the result passes is_ice.
  SubcatSet ice_closure(const SubcatSet& seed) const;

  // {ice_closure(S) : S subset of the census}, deduplicated, canonical order
  // (size, then lexicographic ids).
  std::vector<SubcatSet> enumerate_ice(int jobs = 1) const;

  // Mask-level interface (bit i = census id i); used by the pipeline modules.
  uint64_t closure_mask(uint64_t seed) const;
  uint64_t extension_closure_mask(uint64_t seed) const;   // Filt
  uint64_t cokernel_closure_mask(uint64_t seed) const;    // cok fixpoint
  bool is_ice_mask(uint64_t c) const;
  bool is_torsion_mask(uint64_t c) const;
  bool is_wide_mask(uint64_t c) const;
  ClosureFlags flags_mask(uint64_t c) const;

  uint64_t mask_of(const std::vector<int>& ids) const;
  std::vector<int> ids_of(uint64_t mask) const;

 private:
  struct MorphTuple {
    uint64_t members = 0;
    uint64_t img = 0, ker = 0, cok = 0;
  };
  struct AddTuple {
    uint64_t members = 0;
    uint64_t add = 0;
  };

  CensusPtr census_;
  std::vector<MorphTuple> morph_;
  std::vector<AddTuple> ext_;
  std::vector<AddTuple> quot_;
};

std::vector<SubcatSet> canonical_subcat_sort(std::vector<SubcatSet> sets);

}  // namespace qice
