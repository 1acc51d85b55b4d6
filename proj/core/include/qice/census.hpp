#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qice/homext.hpp"
#include "qice/rep.hpp"

namespace qice {

// All indecomposables up to isomorphism, in canonical order (total dimension,
// then dimension vector lexicographically, then matrix bytes). Ids are the
// positions in that order. Hom/Ext dimension tables and the part-identification
// fingerprint are precomputed; the structure is immutable and safe to share
// across threads once built.
class Census {
 public:
  // Closed form P_i / rad^t for Nakayama algebras; throws NotNakayama.
  static Census nakayama(const AlgebraPtr& alg);
  // Fixpoint knitting from the simples: extensions of direct sums of known
  // indecomposables by a simple, over the coefficient grid. Throws
  // BudgetExhausted (with a partial, incomplete census attached to the error
  // message) if the work budget runs out.
  static Census knit(const AlgebraPtr& alg, int dim_bound = -1, long budget = 500000,
                     int radius = 1);
  // Nakayama closed form when the shape allows it, knitting otherwise.
  static Census build(const AlgebraPtr& alg);

  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Algebra& algebra() const { return *alg_; }
  int size() const { return int(reps_.size()); }
  const Representation& rep(int id) const { return reps_[id]; }
  const std::string& name(int id) const { return names_[id]; }
  bool complete() const { return complete_; }

  int find(const Representation& r) const;        // -1 if no isomorphic member
  int find_name(const std::string& name) const;   // -1 if absent

  int hom_dim_cached(int i, int j) const { return hom_dims_[size_t(i) * reps_.size() + j]; }
  int ext_dim_cached(int i, int j) const { return ext_dims_[size_t(i) * reps_.size() + j]; }
  const std::vector<Morphism>& hom_basis_cached(int i, int j) const {
    return hom_bases_[size_t(i) * reps_.size() + j];
  }

  // Multiset of ids of the indecomposable summands of r, via the Hom-dimension
  // fingerprint against the census (the census Hom matrix is checked to be
  // invertible at build time). Throws CensusIncomplete if r does not resolve.
  std::vector<int> identify_parts(const Representation& r) const;

  std::vector<int> brick_ids() const;
  bool is_brick_id(int id) const { return hom_dim_cached(id, id) == 1; }

  Representation sum_of(const std::vector<int>& ids) const;
  std::string display_sum(const std::vector<int>& ids) const;  // "a (+) b" or "0"

 private:
  Census() = default;
  void finalize();  // sort, name, cache, certify

  AlgebraPtr alg_;
  std::vector<Representation> reps_;
  std::vector<std::string> names_;
  std::vector<int> hom_dims_, ext_dims_;
  std::vector<std::vector<Morphism>> hom_bases_;
  QMatrix hom_matrix_;
  bool complete_ = false;
};

using CensusPtr = std::shared_ptr<const Census>;

std::vector<int> bricks(const Census& census);

}  // namespace qice
