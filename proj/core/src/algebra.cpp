#include "qice/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qice/error.hpp"
#include "qice/rep.hpp"

namespace qice {

namespace {

std::string path_to_string(const Algebra& alg, const std::vector<int>& path) {
  if (path.empty()) return "e";
  std::string s;
  for (int a : path) {
    if (!s.empty()) s += "*";
    s += alg.arrow(a).name;
  }
  return s;
}

}  // namespace

Algebra::Algebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                 std::vector<Relation> relations, int budget)
    : vertices_(std::move(vertices)),
      arrows_(std::move(arrows)),
      relations_(std::move(relations)),
      budget_(budget) {
  require(!vertices_.empty(), Errc::invalid_input, "algebra needs at least one vertex");
  require(budget_ >= 2, Errc::invalid_input, "path-length budget must be at least 2");
  std::set<std::string> seen;
  for (const std::string& v : vertices_)
    require(seen.insert(v).second, Errc::invalid_input, "duplicate vertex label '" + v + "'");
  seen.clear();
  for (const Arrow& a : arrows_) {
    require(seen.insert(a.name).second, Errc::invalid_input, "duplicate arrow label '" + a.name + "'");
    require(a.src >= 0 && a.src < num_vertices() && a.dst >= 0 && a.dst < num_vertices(),
            Errc::unknown_vertex, "arrow '" + a.name + "' has an undeclared endpoint");
  }
  for (const Relation& rel : relations_) {
    require(!rel.empty(), Errc::invalid_input, "empty relation");
    if (rel.size() > 1 || rel[0].coeff != 1) monomial_ = false;
    int src = -1, dst = -1;
    for (const RelationTerm& t : rel) {
      require(t.coeff != 0, Errc::invalid_input, "zero coefficient in relation");
      require(t.arrows.size() >= 2, Errc::not_admissible,
              "relation term of length < 2 is not admissible");
      for (size_t k = 0; k < t.arrows.size(); ++k) {
        int a = t.arrows[k];
        require(a >= 0 && a < num_arrows(), Errc::unknown_arrow, "relation uses an undeclared arrow");
        if (k > 0)
          require(arrows_[t.arrows[k - 1]].dst == arrows_[a].src, Errc::invalid_input,
                  "relation term is not a composable path");
      }
      int s = arrows_[t.arrows.front()].src;
      int d = arrows_[t.arrows.back()].dst;
      if (src < 0) {
        src = s;
        dst = d;
      } else {
        require(s == src && d == dst, Errc::non_parallel_relation,
                "relation mixes non-parallel paths");
      }
    }
  }
  build();
}

int Algebra::vertex_index(const std::string& label) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v] == label) return v;
  fail(Errc::unknown_vertex, "unknown vertex '" + label + "'");
}

int Algebra::arrow_index(const std::string& name) const {
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].name == name) return a;
  fail(Errc::unknown_arrow, "unknown arrow '" + name + "'");
}

void Algebra::build() {
  const int n = num_vertices();
  pairs_.assign(size_t(n) * n, {});

  int max_rel_len = 0;
  for (const Relation& rel : relations_)
    for (const RelationTerm& t : rel) max_rel_len = std::max(max_rel_len, int(t.arrows.size()));

  // Monomial ideal membership: a path dies iff it contains a relation word.
  auto monomial_dead = [&](const std::vector<int>& path) {
    for (const Relation& rel : relations_) {
      const std::vector<int>& w = rel[0].arrows;
      if (w.size() > path.size()) continue;
      for (size_t s = 0; s + w.size() <= path.size(); ++s) {
        bool hit = true;
        for (size_t k = 0; k < w.size(); ++k)
          if (path[s + k] != w[k]) {
            hit = false;
            break;
          }
        if (hit) return true;
      }
    }
    return false;
  };

  // Enumerate paths level by level. For monomial ideals we can stop as soon
  // as a level has no surviving path; any longer path contains a dead prefix.
  struct Pending {
    std::vector<int> path;
    int src, dst;
  };
  std::vector<Pending> level;
  for (int v = 0; v < n; ++v) level.push_back({{}, v, v});
  long total_paths = 0;
  std::vector<std::vector<Pending>> by_level;
  bool truncated = true;  // true when enumeration ran out to the budget horizon
  for (int len = 0; len <= budget_; ++len) {
    if (level.empty()) {
      truncated = false;
      break;
    }
    total_paths += long(level.size());
    require(total_paths <= kPathCap, Errc::not_finite_dimensional,
            "path enumeration exceeded " + std::to_string(kPathCap) + " paths");
    by_level.push_back(level);
    if (monomial_) {
      bool any_alive = false;
      for (const Pending& p : level)
        if (!monomial_dead(p.path)) {
          any_alive = true;
          break;
        }
      // Once a whole level is dead, every longer path has a dead prefix.
      if (!any_alive) {
        truncated = false;
        break;
      }
    }
    std::vector<Pending> next;
    if (len < budget_) {
      for (const Pending& p : level)
        for (int a = 0; a < num_arrows(); ++a)
          if (arrows_[a].src == p.dst) {
            Pending q = p;
            q.path.push_back(a);
            q.dst = arrows_[a].dst;
            next.push_back(std::move(q));
          }
    }
    level = std::move(next);
  }

  for (const std::vector<Pending>& lv : by_level)
    for (const Pending& p : lv) {
      PairSpace& ps = pair(p.src, p.dst);
      ps.index.emplace(p.path, int(ps.paths.size()));
      ps.paths.push_back(p.path);
    }
  // Paths arrive sorted by (length, insertion); make the within-length order
  // lexicographic on arrow indices.
  for (PairSpace& ps : pairs_) {
    std::sort(ps.paths.begin(), ps.paths.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    ps.index.clear();
    for (int k = 0; k < int(ps.paths.size()); ++k) ps.index.emplace(ps.paths[k], k);
  }

  // Ideal span per vertex pair: u * r * v products whose every term fits the
  // enumeration horizon.
  dim_ = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PairSpace& ps = pair(i, j);
      const int np = int(ps.paths.size());
      std::vector<std::vector<Rat>> gens;
      for (const Relation& rel : relations_) {
        int rs = arrows_[rel[0].arrows.front()].src;
        int rd = arrows_[rel[0].arrows.back()].dst;
        const PairSpace& left = pair(i, rs);
        const PairSpace& right = pair(rd, j);
        for (const std::vector<int>& u : left.paths) {
          for (const std::vector<int>& v : right.paths) {
            std::vector<Rat> g(np);
            bool fits = true;
            for (const RelationTerm& t : rel) {
              std::vector<int> w = u;
              w.insert(w.end(), t.arrows.begin(), t.arrows.end());
              w.insert(w.end(), v.begin(), v.end());
              auto it = ps.index.find(w);
              if (it == ps.index.end()) {
                fits = false;
                break;
              }
              g[it->second] += t.coeff;
            }
            if (fits) gens.push_back(std::move(g));
          }
        }
      }
      QMatrix gm = QMatrix::from_rows(gens, np);
      Rref rr = rref(gm);
      ps.ideal_rref = rr.mat;
      ps.ideal_pivots = rr.pivots;
      ps.pivot_row_of_path.assign(np, -1);
      for (int t = 0; t < int(rr.pivots.size()); ++t) ps.pivot_row_of_path[rr.pivots[t]] = t;
      ps.coord_of_path.assign(np, -1);
      for (int k = 0; k < np; ++k) {
        if (ps.pivot_row_of_path[k] < 0) {
          ps.coord_of_path[k] = int(ps.basis.size());
          ps.basis.push_back(ps.paths[k]);
        }
      }
      dim_ += int(ps.basis.size());
    }
  }

  // Admissibility: when enumeration was cut off at the budget, no surviving
  // path may sit within max_rel_len of the horizon (a product with a longer
  // term would have been silently dropped there).
  if (truncated) {
    for (const PairSpace& ps : pairs_)
      for (const std::vector<int>& b : ps.basis)
        require(int(b.size()) < budget_ - max_rel_len, Errc::not_admissible,
                "path " + path_to_string(*this, b) + " of length " + std::to_string(b.size()) +
                    " survives at the budget horizon " + std::to_string(budget_));
  }

  // Nakayama shape: in/out degree at most one and monomial relations.
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const Arrow& a : arrows_) {
    ++outdeg[a.src];
    ++indeg[a.dst];
  }
  nakayama_ = monomial_;
  for (int v = 0; v < n; ++v)
    if (indeg[v] > 1 || outdeg[v] > 1) nakayama_ = false;
}

const std::vector<std::vector<int>>& Algebra::path_basis(int i, int j) const {
  require(i >= 0 && i < num_vertices() && j >= 0 && j < num_vertices(), Errc::unknown_vertex,
          "path_basis: vertex out of range");
  return pair(i, j).basis;
}

std::vector<Rat> Algebra::reduce_path(int src, const std::vector<int>& path) const {
  int dst = src;
  for (int a : path) {
    require(a >= 0 && a < num_arrows() && arrows_[a].src == dst, Errc::internal,
            "reduce_path: not a composable path");
    dst = arrows_[a].dst;
  }
  const PairSpace& ps = pair(src, dst);
  std::vector<Rat> out(ps.basis.size());
  auto it = ps.index.find(path);
  if (it == ps.index.end()) return out;  // beyond the horizon: in the ideal
  int idx = it->second;
  if (ps.coord_of_path[idx] >= 0) {
    out[ps.coord_of_path[idx]] = 1;
    return out;
  }
  // Pivot path: its class is minus the free part of the pivot row.
  int row = ps.pivot_row_of_path[idx];
  for (int k = 0; k < int(ps.paths.size()); ++k)
    if (ps.coord_of_path[k] >= 0) out[ps.coord_of_path[k]] = -ps.ideal_rref.at(row, k);
  return out;
}

Representation projective(const AlgebraPtr& alg, int i) {
  const int n = alg->num_vertices();
  require(i >= 0 && i < n, Errc::unknown_vertex, "projective: vertex out of range");
  std::vector<int> dims(n);
  for (int j = 0; j < n; ++j) dims[j] = int(alg->path_basis(i, j).size());
  std::vector<QMatrix> mats;
  mats.reserve(alg->num_arrows());
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->arrow(a);
    QMatrix m(dims[ar.dst], dims[ar.src]);
    const auto& src_basis = alg->path_basis(i, ar.src);
    for (int c = 0; c < int(src_basis.size()); ++c) {
      std::vector<int> ext = src_basis[c];
      ext.push_back(a);
      std::vector<Rat> coords = alg->reduce_path(i, ext);
      for (int r = 0; r < int(coords.size()); ++r) m.at(r, c) = coords[r];
    }
    mats.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(mats));
}

Representation simple(const AlgebraPtr& alg, int i) {
  const int n = alg->num_vertices();
  require(i >= 0 && i < n, Errc::unknown_vertex, "simple: vertex out of range");
  std::vector<int> dims(n, 0);
  dims[i] = 1;
  std::vector<QMatrix> mats;
  for (int a = 0; a < alg->num_arrows(); ++a)
    mats.emplace_back(dims[alg->arrow(a).dst], dims[alg->arrow(a).src]);
  return Representation(alg, std::move(dims), std::move(mats));
}

}  // namespace qice
