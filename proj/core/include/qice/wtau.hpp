#pragma once

#include "qice/opext.hpp"

namespace qice {

// cok(M): indecomposable summands of cokernels of sampled morphisms between
// direct sums of at most two members of the growing pool, seeded with the
// summands of M, iterated to a fixpoint. Gated to Nakayama algebras.
SubcatSet cok_subcat(const ClosureTables& tables, const Representation& m, bool force = false);

// Filt(S): least extension-closed subcategory containing S.
SubcatSet filt(const ClosureTables& tables, const BrickSet& s);

// Sim(C): members with no proper nonzero subobject inside C (no injective
// morphism from a non-isomorphic member over the coefficient grid). Requires
// C ICE-closed; the result is verified to consist of bricks.
BrickSet sim(const ClosureTables& tables, const SubcatSet& c);

// P(C): the maximal Ext-projective object, as the ids of all members X with
// Ext^1(X, Y) = 0 for every member Y. Requires C ICE-closed.
std::vector<int> ext_projective_ids(const ClosureTables& tables, const SubcatSet& c);
Representation ext_projectives(const ClosureTables& tables, const SubcatSet& c);

// One row per ICE-closed subcategory of mod A: both construction routes for
// the wide tau-tilting module over B with all intermediate columns.
struct WTauRow {
  std::vector<int> wtau_a;         // P(ice_a), ids over A
  SubcatSet ice_a;
  BrickSet ebrick_a;               // Sim(ice_a)
  SubcatSet ice_b;                 // thm31_T2 image
  BrickSet ebrick_b;               // thm35_Sprime(ebrick_a)
  SubcatSet filt_b;                // Filt(ebrick_b)
  std::vector<int> wtau_b_route1;  // P(ice_b)
  std::vector<int> wtau_b_route2;  // P(filt_b)
};

std::vector<WTauRow> wtau_table(const OpextContext& ctx, bool force = false);

}  // namespace qice
