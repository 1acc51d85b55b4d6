#include "qice/census.hpp"

#include <algorithm>
#include <map>

#include "griditer.hpp"
#include "qice/error.hpp"

namespace qice {

namespace {

bool canonical_rep_less(const Representation& a, const Representation& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  if (a.dims() != b.dims()) return a.dims() < b.dims();
  return a.bytes() < b.bytes();
}

}  // namespace

void Census::finalize() {
  std::sort(reps_.begin(), reps_.end(), canonical_rep_less);
  const int n = size();
  names_.clear();
  for (const Representation& r : reps_) names_.push_back(module_name(r));
  // Uniserial names can collide only if two entries are isomorphic, which the
  // builders exclude; dimension-vector names may repeat, disambiguate.
  std::map<std::string, int> seen;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = seen.emplace(names_[i], 0);
    if (!fresh) names_[i] += "#" + std::to_string(++it->second);
  }
  hom_dims_.assign(size_t(n) * n, 0);
  ext_dims_.assign(size_t(n) * n, 0);
  hom_bases_.assign(size_t(n) * n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      hom_bases_[size_t(i) * n + j] = hom_basis(reps_[i], reps_[j]);
      hom_dims_[size_t(i) * n + j] = int(hom_bases_[size_t(i) * n + j].size());
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ext_dims_[size_t(i) * n + j] = ext1_dim(reps_[i], reps_[j]);
  hom_matrix_ = QMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hom_matrix_.at(i, j) = hom_dims_[size_t(i) * n + j];
  if (complete_)
    require(rank(hom_matrix_) == n, Errc::internal,
            "census Hom matrix is singular; fingerprint identification unavailable");
}

int Census::find(const Representation& r) const {
  for (int i = 0; i < size(); ++i)
    if (reps_[i].dims() == r.dims() && is_isomorphic(reps_[i], r)) return i;
  return -1;
}

int Census::find_name(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::vector<int> Census::identify_parts(const Representation& r) const {
  require(&r.algebra() == alg_.get(), Errc::algebra_mismatch, "identify_parts: wrong algebra");
  std::vector<int> out;
  if (r.is_zero()) return out;
  require(complete_, Errc::census_incomplete, "identify_parts needs a complete census");
  const int n = size();
  std::vector<Rat> h(n);
  for (int i = 0; i < n; ++i) h[i] = hom_dim(reps_[i], r);
  auto sol = solve(hom_matrix_, h);
  require(sol.has_value(), Errc::census_incomplete, "module does not resolve against the census");
  std::vector<int> dim_check(alg_->num_vertices(), 0);
  for (int i = 0; i < n; ++i) {
    const Rat& m = (*sol)[i];
    require(m.get_den() == 1 && m >= 0, Errc::census_incomplete,
            "module does not resolve against the census");
    long mult = m.get_num().get_si();
    for (long k = 0; k < mult; ++k) out.push_back(i);
    for (int v = 0; v < alg_->num_vertices(); ++v) dim_check[v] += int(mult) * reps_[i].dim(v);
  }
  require(dim_check == r.dims(), Errc::census_incomplete,
          "fingerprint multiplicities do not add up to the module");
  return out;
}

std::vector<int> Census::brick_ids() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_brick_id(i)) out.push_back(i);
  return out;
}

Representation Census::sum_of(const std::vector<int>& ids) const {
  if (ids.empty()) return Representation::zero(alg_);
  std::vector<Representation> parts;
  for (int id : ids) parts.push_back(reps_[id]);
  return Representation::direct_sum(parts);
}

std::string Census::display_sum(const std::vector<int>& ids) const {
  if (ids.empty()) return "0";
  std::string s;
  for (int id : ids) {
    if (!s.empty()) s += " + ";
    s += names_[id];
  }
  return s;
}

std::vector<int> bricks(const Census& census) {
  require(census.complete(), Errc::census_incomplete, "bricks needs a complete census");
  return census.brick_ids();
}

Census Census::nakayama(const AlgebraPtr& alg) {
  require(alg->is_nakayama(), Errc::not_nakayama,
          "algebra is not Nakayama (linear or cyclic quiver with monomial relations)");
  Census out;
  out.alg_ = alg;
  for (int i = 0; i < alg->num_vertices(); ++i) {
    // Follow the unique arrow chain out of i while paths survive the ideal.
    std::vector<int> chain_vertices{i};
    std::vector<int> chain_arrows;
    std::vector<int> path;
    int at = i;
    while (true) {
      int next_arrow = -1;
      for (int a = 0; a < alg->num_arrows(); ++a)
        if (alg->arrow(a).src == at) {
          next_arrow = a;
          break;
        }
      if (next_arrow < 0) break;
      path.push_back(next_arrow);
      std::vector<Rat> coords = alg->reduce_path(i, path);
      bool alive = false;
      for (const Rat& c : coords)
        if (c != 0) alive = true;
      if (!alive) break;
      chain_arrows.push_back(next_arrow);
      at = alg->arrow(next_arrow).dst;
      chain_vertices.push_back(at);
      require(int(chain_arrows.size()) <= alg->budget(), Errc::internal,
              "Nakayama chain exceeded the budget");
    }
    // P_i / rad^t for t = 1..Loewy length: interval along the chain.
    for (int t = 1; t <= int(chain_vertices.size()); ++t) {
      std::vector<int> dims(alg->num_vertices(), 0);
      for (int k = 0; k < t; ++k) ++dims[chain_vertices[k]];
      std::vector<QMatrix> mats;
      for (int a = 0; a < alg->num_arrows(); ++a)
        mats.emplace_back(dims[alg->arrow(a).dst], dims[alg->arrow(a).src]);
      // Basis element k lives at chain_vertices[k]; it is the
      // (number of earlier chain hits of that vertex)-th basis vector there.
      std::vector<int> pos(t);
      {
        std::vector<int> counter(alg->num_vertices(), 0);
        for (int k = 0; k < t; ++k) pos[k] = counter[chain_vertices[k]]++;
      }
      for (int k = 0; k + 1 < t; ++k) mats[chain_arrows[k]].at(pos[k + 1], pos[k]) = 1;
      out.reps_.emplace_back(alg, std::move(dims), std::move(mats));
    }
  }
  out.complete_ = true;
  out.finalize();
  return out;
}

Census Census::build(const AlgebraPtr& alg) {
  return alg->is_nakayama() ? nakayama(alg) : knit(alg);
}

namespace {

struct KnitPool {
  std::vector<Representation> reps;

  int find(const Representation& r) const {
    for (int i = 0; i < int(reps.size()); ++i)
      if (reps[i].dims() == r.dims() && is_isomorphic(reps[i], r)) return i;
    return -1;
  }
};

// Multisets over candidate parts with bounded multiplicity and total
// dimension; calls fn for each nonempty multiset (part indices, repeated).
void for_each_multiset(const std::vector<int>& cands, const std::vector<int>& max_mult,
                       const std::vector<int>& part_dim, int dim_budget,
                       std::vector<int>& acc, size_t from, auto&& fn) {
  if (!acc.empty()) fn(acc);
  for (size_t k = from; k < cands.size(); ++k) {
    int used = 0;
    for (int id : acc)
      if (id == cands[k]) ++used;
    if (used >= max_mult[k] || part_dim[k] > dim_budget) continue;
    acc.push_back(cands[k]);
    for_each_multiset(cands, max_mult, part_dim, dim_budget - part_dim[k], acc, k, fn);
    acc.pop_back();
  }
}

}  // namespace

Census Census::knit(const AlgebraPtr& alg, int dim_bound, long budget, int radius) {
  if (dim_bound < 0) dim_bound = alg->dim() + 2;
  Census out;
  out.alg_ = alg;

  KnitPool pool;
  std::vector<int> birth;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    pool.reps.push_back(simple(alg, v));
    birth.push_back(0);
  }
  // Per-(pool member, simple) Ext dimension, cached across sweeps.
  std::vector<std::vector<int>> ext_to_simple(alg->num_vertices());

  long work = 0;
  for (int sweep = 1;; ++sweep) {
    bool grew = false;
    for (int sv = 0; sv < alg->num_vertices(); ++sv) {
      Representation s = simple(alg, sv);
      const int sdim = s.total_dim();
      std::vector<int>& cache = ext_to_simple[sv];
      while (int(cache.size()) < int(pool.reps.size()))
        cache.push_back(ExtSpace(pool.reps[cache.size()], s).dim());
      std::vector<int> cands, max_mult, part_dim;
      for (int p = 0; p < int(pool.reps.size()); ++p) {
        if (cache[p] == 0) continue;
        cands.push_back(p);
        max_mult.push_back(cache[p]);
        part_dim.push_back(pool.reps[p].total_dim());
      }
      if (cands.empty()) continue;
      std::vector<int> acc;
      bool budget_hit = false;
      for_each_multiset(cands, max_mult, part_dim, dim_bound - sdim, acc, 0,
                        [&](const std::vector<int>& multiset) {
        if (budget_hit) return;
        // Multisets made only of parts known before the previous sweep were
        // already processed.
        int newest = 0;
        int total_ext = 0;
        for (int id : multiset) {
          newest = std::max(newest, birth[id]);
          int k = int(std::find(cands.begin(), cands.end(), id) - cands.begin());
          total_ext += max_mult[k];
        }
        if (newest < sweep - 1) return;
        if (total_ext > 10) return;  // grid guard; never hit in scope
        std::vector<Representation> parts;
        for (int id : multiset) parts.push_back(pool.reps[id]);
        Representation y = Representation::direct_sum(parts);
        ExtSpace es(y, s);
        if (es.dim() == 0) return;
        detail::for_each_grid(es.dim(), radius, true, [&](const std::vector<Rat>& coords) {
          if (budget_hit) return;
          if (++work > budget) {
            budget_hit = true;
            return;
          }
          Representation e = middle_term(es, coords).e;
          for (DecompPart& part : decompose(e)) {
            if (pool.find(part.rep) < 0 && part.rep.total_dim() <= dim_bound) {
              pool.reps.push_back(std::move(part.rep));
              birth.push_back(sweep);
              grew = true;
            }
          }
        });
      });
      require(!budget_hit, Errc::budget_exhausted,
              "knitting stopped after " + std::to_string(budget) +
                  " middle terms with a partial census of " + std::to_string(pool.reps.size()) +
                  " modules");
    }
    if (!grew) break;
  }

  out.reps_ = std::move(pool.reps);
  out.complete_ = true;
  out.finalize();
  return out;
}

}  // namespace qice
