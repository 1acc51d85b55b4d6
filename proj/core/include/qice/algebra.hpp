#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qice/matrix.hpp"

namespace qice {

class Representation;

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
};

// One term of a relation: coeff * (arrow composite), arrows listed in
// composition order (the first arrow is applied first).
struct RelationTerm {
  Rat coeff;
  std::vector<int> arrows;
};
using Relation = std::vector<RelationTerm>;

// A quiver with admissible relations over Q. All bases of e_i A e_j are fixed
// once at construction: paths ordered by (length, lexicographic arrow index),
// the ideal row reduced, and the surviving non-pivot paths taken as the
// canonical basis. Immutable after construction.
class Algebra {
 public:
  static constexpr int kDefaultBudget = 64;
  static constexpr long kPathCap = 200000;

  Algebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
          std::vector<Relation> relations, int budget = kDefaultBudget);

  int num_vertices() const { return int(vertices_.size()); }
  int num_arrows() const { return int(arrows_.size()); }
  const std::string& vertex_label(int v) const { return vertices_[v]; }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  int vertex_index(const std::string& label) const;   // throws UnknownVertex
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_index(const std::string& name) const;     // throws UnknownArrow
  const std::vector<Relation>& relations() const { return relations_; }
  int budget() const { return budget_; }

  // Total dimension = sum over (i, j) of dim e_i A e_j.
  int dim() const { return dim_; }

  // Canonical basis of paths i -> j modulo the ideal (paths as arrow-index
  // sequences; the empty sequence is the trivial path when i == j).
  const std::vector<std::vector<int>>& path_basis(int i, int j) const;

  // Coordinates of an arbitrary path over path_basis(src, dst). Paths beyond
  // the enumeration horizon lie in the ideal and reduce to zero.
  std::vector<Rat> reduce_path(int src, const std::vector<int>& path) const;

  bool same_as(const Algebra& o) const { return this == &o; }
  bool is_nakayama() const { return nakayama_; }
  bool monomial_relations() const { return monomial_; }

 private:
  struct PairSpace {
    std::vector<std::vector<int>> paths;  // all enumerated paths, canonical order
    std::map<std::vector<int>, int> index;
    QMatrix ideal_rref;                   // rows reduce modulo the ideal
    std::vector<int> ideal_pivots;
    std::vector<int> pivot_row_of_path;   // path idx -> rref row, or -1
    std::vector<std::vector<int>> basis;  // surviving paths
    std::vector<int> coord_of_path;       // path idx -> basis coordinate, or -1
  };

  PairSpace& pair(int i, int j) { return pairs_[size_t(i) * vertices_.size() + j]; }
  const PairSpace& pair(int i, int j) const { return pairs_[size_t(i) * vertices_.size() + j]; }

  void build();

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  int budget_;
  bool monomial_ = true;
  bool nakayama_ = false;
  int dim_ = 0;
  std::vector<PairSpace> pairs_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Indecomposable projective P_i: basis at vertex j is path_basis(i, j), arrows
// act by post-composition. Simple S_i is one dimensional at i.
Representation projective(const AlgebraPtr& alg, int i);
Representation simple(const AlgebraPtr& alg, int i);

}  // namespace qice
