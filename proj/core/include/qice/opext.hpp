#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qice/bricks.hpp"
#include "qice/subcat.hpp"

namespace qice {

// B = [[A, 0], [M, k]]: the base algebra extended by one vertex whose
// projective has simple top at the new vertex and radical M. The new vertex
// carries one arrow per basis element of top(M); the presentation matrix of M
// translates into the new relations.
struct OnePointExtension {
  AlgebraPtr base;                 // A
  Representation ext_module;       // M over A
  AlgebraPtr result;               // B
  int new_vertex = 0;              // index in B
  std::vector<int> new_arrows;     // B arrow indices, one per top generator

  struct TopGen {
    int vertex;                    // A vertex index
    std::vector<Rat> lift;         // representative in M at that vertex
  };
  std::vector<TopGen> top_gens;

  std::vector<int> vertex_to_b;    // A vertex -> B vertex
  std::vector<int> arrow_to_b;     // A arrow -> B arrow

  std::string arrow_dictionary() const;  // new arrow -> top generator, printable
};

OnePointExtension one_point_extension(const AlgebraPtr& a, const Representation& m);

// A module over B presented as (N_A, k^n, f) with f : M^n -> N.
struct TripleModule {
  Representation n_part;  // N over A
  int omega_dim = 0;      // n
  Morphism f;             // M^n -> N over A
};

TripleModule make_triple(const OnePointExtension& ope, Representation n_part, int omega_dim,
                         std::optional<Morphism> f = std::nullopt);

Representation triple_to_rep(const OnePointExtension& ope, const TripleModule& t);
TripleModule rep_to_triple(const OnePointExtension& ope, const Representation& x);

// A morphism of triples: h on the A-part, g on the omega space.
struct TriplePairMorphism {
  Morphism h;
  QMatrix g;
};

// True iff 0 -> t1 -> t2 -> t3 -> 0 is exact over B. Throws InvalidInput if
// the pairs are not valid triple morphisms.
bool exactness_check(const OnePointExtension& ope, const TripleModule& t1, const TripleModule& t2,
                     const TripleModule& t3, const TriplePairMorphism& m1,
                     const TriplePairMorphism& m2);

// Censuses and sampling tables on both sides of the extension, plus the
// embedding of the A census into the B census.
class OpextContext {
 public:
  OpextContext(OnePointExtension ope, int jobs = 1);

  const OnePointExtension& ope() const { return ope_; }
  const CensusPtr& census_a() const { return census_a_; }
  const CensusPtr& census_b() const { return census_b_; }
  const ClosureTables& tables_a() const { return tables_a_; }
  const ClosureTables& tables_b() const { return tables_b_; }
  const BrickTables& bricks_a() const { return bricks_a_; }
  const BrickTables& bricks_b() const { return bricks_b_; }
  int embed_id(int a_id) const { return embed_id_[a_id]; }
  int omega_simple_id() const { return omega_simple_id_; }
  int jobs() const { return jobs_; }

 private:
  OnePointExtension ope_;
  CensusPtr census_a_, census_b_;
  ClosureTables tables_a_, tables_b_;
  BrickTables bricks_a_, bricks_b_;
  std::vector<int> embed_id_;
  int omega_simple_id_ = -1;
  int jobs_ = 1;
};

// {(N, 0, 0) : N in T_A} as a subcategory of mod B; verified ICE-closed.
SubcatSet thm31_T1(const OpextContext& ctx, const SubcatSet& ice_a);
// {(N, k^n, f)} + {(0, k^n, 0)}: all B-indecomposables whose N-component lies
// in add(T_A); verified ICE-closed.
SubcatSet thm31_T2(const OpextContext& ctx, const SubcatSet& ice_a);

// {(s, 0, 0) : s in S_A} and its extension by the omega simple; both verified
// epibricks over B.
BrickSet thm35_S(const OpextContext& ctx, const BrickSet& ebrick_a);
BrickSet thm35_Sprime(const OpextContext& ctx, const BrickSet& ebrick_a);

// The same constructions for monobricks.
std::pair<BrickSet, BrickSet> remark36_monobrick(const OpextContext& ctx, const BrickSet& mbrick_a);

enum class GrowthKind { ice, ebrick };

struct GrowthReport {
  GrowthKind kind;
  int n = 0;           // enumeration size over A
  int m = 0;           // enumeration size over B
  int images = 0;      // number of pairwise distinct theorem images
  bool images_distinct = false;
  bool bound_holds = false;  // m >= 2n
};

GrowthReport growth_report(const OpextContext& ctx, GrowthKind kind);

}  // namespace qice
