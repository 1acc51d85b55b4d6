#include "qice/rep.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "griditer.hpp"
#include "poly.hpp"
#include "qice/error.hpp"

namespace qice {

namespace {

void require_same_algebra(const Representation& x, const Representation& y) {
  require(&x.algebra() == &y.algebra(), Errc::algebra_mismatch,
          "representations live over different algebras");
}

}  // namespace

Representation::Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<QMatrix> mats,
                               bool validate)
    : alg_(std::move(alg)), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (validate) check();
}

void Representation::check() const {
  require(int(dims_.size()) == alg_->num_vertices(), Errc::invalid_input,
          "dimension vector length mismatch");
  for (int d : dims_) require(d >= 0, Errc::invalid_input, "negative dimension");
  require(int(mats_.size()) == alg_->num_arrows(), Errc::invalid_input, "arrow matrix count mismatch");
  for (int a = 0; a < alg_->num_arrows(); ++a) {
    const Arrow& ar = alg_->arrow(a);
    require(mats_[a].rows() == dims_[ar.dst] && mats_[a].cols() == dims_[ar.src],
            Errc::invalid_input, "arrow matrix '" + ar.name + "' has the wrong shape");
  }
  for (const Relation& rel : alg_->relations()) {
    int src = alg_->arrow(rel[0].arrows.front()).src;
    int dst = alg_->arrow(rel[0].arrows.back()).dst;
    QMatrix acc(dims_[dst], dims_[src]);
    for (const RelationTerm& t : rel) acc.add_scaled(apply_path(src, t.arrows), t.coeff);
    require(acc.is_zero(), Errc::invalid_input, "a relation does not vanish on the module");
  }
}

Representation Representation::zero(AlgebraPtr alg) {
  std::vector<int> dims(alg->num_vertices(), 0);
  std::vector<QMatrix> mats;
  for (int a = 0; a < alg->num_arrows(); ++a) mats.emplace_back(0, 0);
  return Representation(std::move(alg), std::move(dims), std::move(mats), false);
}

Representation Representation::direct_sum(std::span<const Representation> parts) {
  require(!parts.empty(), Errc::internal, "direct_sum of nothing needs an algebra");
  AlgebraPtr alg = parts[0].algebra_ptr();
  for (const Representation& p : parts) require_same_algebra(parts[0], p);
  std::vector<int> dims(alg->num_vertices(), 0);
  for (const Representation& p : parts)
    for (int v = 0; v < alg->num_vertices(); ++v) dims[v] += p.dim(v);
  std::vector<QMatrix> mats;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    std::vector<QMatrix> blocks;
    for (const Representation& p : parts) blocks.push_back(p.arrow_mat(a));
    mats.push_back(QMatrix::block_diag(blocks));
  }
  return Representation(std::move(alg), std::move(dims), std::move(mats), false);
}

Representation Representation::direct_sum(const Representation& a, const Representation& b) {
  Representation parts[2] = {a, b};
  return direct_sum(std::span<const Representation>(parts, 2));
}

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

QMatrix Representation::apply_path(int src, const std::vector<int>& path) const {
  QMatrix cur = QMatrix::identity(dims_[src]);
  int at = src;
  for (int a : path) {
    cur = mats_[a] * cur;
    at = alg_->arrow(a).dst;
  }
  (void)at;
  return cur;
}

std::string Representation::bytes() const {
  std::ostringstream os;
  for (int d : dims_) os << d << ';';
  for (const QMatrix& m : mats_) os << m.bytes() << '|';
  return os.str();
}

Morphism::Morphism(Representation src, Representation dst, std::vector<QMatrix> mats, bool validate)
    : src_(std::move(src)), dst_(std::move(dst)), mats_(std::move(mats)) {
  if (validate) check();
}

void Morphism::check() const {
  require_same_algebra(src_, dst_);
  const Algebra& alg = src_.algebra();
  require(int(mats_.size()) == alg.num_vertices(), Errc::invalid_input, "vertex matrix count mismatch");
  for (int v = 0; v < alg.num_vertices(); ++v)
    require(mats_[v].rows() == dst_.dim(v) && mats_[v].cols() == src_.dim(v), Errc::invalid_input,
            "morphism matrix has the wrong shape at vertex " + alg.vertex_label(v));
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    QMatrix lhs = mats_[ar.dst] * src_.arrow_mat(a);
    QMatrix rhs = dst_.arrow_mat(a) * mats_[ar.src];
    require(lhs == rhs, Errc::invalid_input,
            "square does not commute at arrow '" + ar.name + "'");
  }
}

Morphism Morphism::zero(const Representation& src, const Representation& dst) {
  require_same_algebra(src, dst);
  std::vector<QMatrix> mats;
  for (int v = 0; v < src.algebra().num_vertices(); ++v) mats.emplace_back(dst.dim(v), src.dim(v));
  return Morphism(src, dst, std::move(mats), false);
}

Morphism Morphism::identity(const Representation& x) {
  std::vector<QMatrix> mats;
  for (int v = 0; v < x.algebra().num_vertices(); ++v) mats.push_back(QMatrix::identity(x.dim(v)));
  return Morphism(x, x, std::move(mats), false);
}

bool Morphism::is_zero() const {
  for (const QMatrix& m : mats_)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::is_injective() const {
  for (int v = 0; v < int(mats_.size()); ++v)
    if (rank(mats_[v]) != src_.dim(v)) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (int v = 0; v < int(mats_.size()); ++v)
    if (rank(mats_[v]) != dst_.dim(v)) return false;
  return true;
}

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<QMatrix> mats;
  for (int v = 0; v < int(mats_.size()); ++v) mats.push_back(mats_[v] + o.mats_[v]);
  return Morphism(src_, dst_, std::move(mats), false);
}

Morphism Morphism::scaled(const Rat& c) const {
  std::vector<QMatrix> mats;
  for (const QMatrix& m : mats_) mats.push_back(m.scaled(c));
  return Morphism(src_, dst_, std::move(mats), false);
}

Morphism compose(const Morphism& g, const Morphism& f) {
  std::vector<QMatrix> mats;
  for (int v = 0; v < int(f.mats().size()); ++v) mats.push_back(g.mat(v) * f.mat(v));
  return Morphism(f.source(), g.target(), std::move(mats), false);
}

Morphism direct_sum(const Morphism& a, const Morphism& b) {
  std::vector<QMatrix> mats;
  for (int v = 0; v < int(a.mats().size()); ++v)
    mats.push_back(QMatrix::block_diag({a.mat(v), b.mat(v)}));
  return Morphism(Representation::direct_sum(a.source(), b.source()),
                  Representation::direct_sum(a.target(), b.target()), std::move(mats), false);
}

namespace {

// Unknown layout for Hom(X, Y): one row-major block per vertex, in vertex
// order; entry f_v[r][c] sits at block_offset[v] + r*dimX(v) + c.
struct HomSystem {
  std::vector<int> offset;
  int unknowns = 0;
  QMatrix equations;
};

HomSystem hom_system(const Representation& x, const Representation& y) {
  require_same_algebra(x, y);
  const Algebra& alg = x.algebra();
  HomSystem hs;
  hs.offset.resize(alg.num_vertices());
  for (int v = 0; v < alg.num_vertices(); ++v) {
    hs.offset[v] = hs.unknowns;
    hs.unknowns += x.dim(v) * y.dim(v);
  }
  int rows = 0;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    rows += y.dim(ar.dst) * x.dim(ar.src);
  }
  QMatrix eq(rows, hs.unknowns);
  int row = 0;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    const QMatrix& xa = x.arrow_mat(a);
    const QMatrix& ya = y.arrow_mat(a);
    // f_dst * X_a - Y_a * f_src = 0, entry (r, c).
    for (int r = 0; r < y.dim(ar.dst); ++r) {
      for (int c = 0; c < x.dim(ar.src); ++c) {
        for (int k = 0; k < x.dim(ar.dst); ++k)
          if (xa.at(k, c) != 0) eq.at(row, hs.offset[ar.dst] + r * x.dim(ar.dst) + k) += xa.at(k, c);
        for (int k = 0; k < y.dim(ar.src); ++k)
          if (ya.at(r, k) != 0) eq.at(row, hs.offset[ar.src] + k * x.dim(ar.src) + c) -= ya.at(r, k);
        ++row;
      }
    }
  }
  hs.equations = std::move(eq);
  return hs;
}

Morphism morphism_from_flat(const Representation& x, const Representation& y,
                            const std::vector<int>& offset, const QMatrix& flat, int col) {
  const Algebra& alg = x.algebra();
  std::vector<QMatrix> mats;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    QMatrix m(y.dim(v), x.dim(v));
    for (int r = 0; r < y.dim(v); ++r)
      for (int c = 0; c < x.dim(v); ++c) m.at(r, c) = flat.at(offset[v] + r * x.dim(v) + c, col);
    mats.push_back(std::move(m));
  }
  return Morphism(x, y, std::move(mats), false);
}

}  // namespace

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
  HomSystem hs = hom_system(x, y);
  QMatrix basis = kernel_basis(hs.equations);
  std::vector<Morphism> out;
  out.reserve(basis.cols());
  for (int c = 0; c < basis.cols(); ++c) out.push_back(morphism_from_flat(x, y, hs.offset, basis, c));
  return out;
}

int hom_dim(const Representation& x, const Representation& y) {
  HomSystem hs = hom_system(x, y);
  return hs.unknowns - rank(hs.equations);
}

SubQuotient subrep_from_columns(const Representation& x, const std::vector<QMatrix>& cols) {
  const Algebra& alg = x.algebra();
  std::vector<int> dims(alg.num_vertices());
  for (int v = 0; v < alg.num_vertices(); ++v) dims[v] = cols[v].cols();
  std::vector<QMatrix> mats;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    mats.push_back(solve_matrix(cols[ar.dst], x.arrow_mat(a) * cols[ar.src]));
  }
  Representation sub(x.algebra_ptr(), std::move(dims), std::move(mats));
  Morphism incl(sub, x, cols);
  return {std::move(sub), std::move(incl)};
}

SubQuotient kernel(const Morphism& f) {
  std::vector<QMatrix> cols;
  for (int v = 0; v < int(f.mats().size()); ++v) cols.push_back(kernel_basis(f.mat(v)));
  return subrep_from_columns(f.source(), cols);
}

SubQuotient image(const Morphism& f) {
  std::vector<QMatrix> cols;
  for (int v = 0; v < int(f.mats().size()); ++v) cols.push_back(column_space_basis(f.mat(v)));
  return subrep_from_columns(f.target(), cols);
}

SubQuotient cokernel(const Morphism& f) {
  const Representation& y = f.target();
  const Algebra& alg = y.algebra();
  std::vector<QuotientMap> qm;
  std::vector<int> dims(alg.num_vertices());
  for (int v = 0; v < alg.num_vertices(); ++v) {
    qm.push_back(quotient_map(f.mat(v), y.dim(v)));
    dims[v] = qm.back().proj.rows();
  }
  std::vector<QMatrix> mats;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    mats.push_back(qm[ar.dst].proj * y.arrow_mat(a) * qm[ar.src].lift);
  }
  Representation quot(y.algebra_ptr(), std::move(dims), std::move(mats));
  std::vector<QMatrix> proj;
  for (int v = 0; v < alg.num_vertices(); ++v) proj.push_back(qm[v].proj);
  Morphism p(y, quot, std::move(proj));
  return {std::move(quot), std::move(p)};
}

EndData end_radical(const Representation& x) {
  EndData out;
  out.end_basis = hom_basis(x, x);
  const int s = int(out.end_basis.size());
  QMatrix gram(s, s);
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) {
      Rat tr = 0;
      for (int v = 0; v < x.algebra().num_vertices(); ++v) {
        const QMatrix& a = out.end_basis[i].mat(v);
        const QMatrix& b = out.end_basis[j].mat(v);
        for (int r = 0; r < a.rows(); ++r)
          for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != 0) tr += a.at(r, c) * b.at(c, r);
      }
      gram.at(i, j) = tr;
      gram.at(j, i) = tr;
    }
  }
  out.rad_coords = kernel_basis(gram);
  for (int c = 0; c < out.rad_coords.cols(); ++c) {
    Morphism m = Morphism::zero(x, x);
    for (int k = 0; k < s; ++k)
      if (out.rad_coords.at(k, c) != 0)
        m = m + out.end_basis[k].scaled(out.rad_coords.at(k, c));
    out.rad_basis.push_back(std::move(m));
  }
  return out;
}

bool is_brick(const Representation& x) { return hom_dim(x, x) == 1; }

namespace {

bool grid_finds_iso(const Representation& x, const Representation& y,
                    const std::vector<Morphism>& homs) {
  for (const Morphism& h : homs)
    if (h.is_isomorphism()) return true;
  if (homs.size() <= 1 || homs.size() > 6) return false;
  bool found = false;
  detail::for_each_grid(int(homs.size()), 1, true, [&](const std::vector<Rat>& c) {
    if (found) return;
    Morphism m = Morphism::zero(x, y);
    for (size_t k = 0; k < homs.size(); ++k)
      if (c[k] != 0) m = m + homs[k].scaled(c[k]);
    if (m.is_isomorphism()) found = true;
  });
  return found;
}

}  // namespace

bool is_isomorphic(const Representation& x, const Representation& y) {
  require_same_algebra(x, y);
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  std::vector<Morphism> homs = hom_basis(x, y);
  if (homs.empty()) return false;
  if (grid_finds_iso(x, y, homs)) return true;
  // Krull-Schmidt fallback: match indecomposable summands. For indecomposable
  // X and Y some basis element of Hom is invertible whenever any morphism is,
  // so reaching this point with two indecomposables means "not isomorphic".
  std::vector<DecompPart> dx = decompose(x);
  std::vector<DecompPart> dy = decompose(y);
  if (dx.size() == 1 && dx[0].multiplicity == 1 && dy.size() == 1 && dy[0].multiplicity == 1)
    return false;
  if (dx.size() != dy.size()) return false;
  std::vector<bool> used(dy.size(), false);
  for (const DecompPart& px : dx) {
    bool matched = false;
    for (size_t j = 0; j < dy.size(); ++j) {
      if (used[j] || dy[j].multiplicity != px.multiplicity) continue;
      if (is_isomorphic(px.rep, dy[j].rep)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

using detail::Poly;

// Coordinates of an endomorphism in the given End basis (flattened over all
// vertex matrices).
std::vector<Rat> flatten_endo(const Morphism& f) {
  std::vector<Rat> out;
  for (const QMatrix& m : f.mats())
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

Morphism eval_poly(const Poly& p, const Morphism& u) {
  const Representation& x = u.source();
  Morphism acc = Morphism::zero(x, x);
  for (size_t i = p.size(); i-- > 0;) {
    acc = compose(acc, u);
    if (p[i] != 0) {
      Morphism id = Morphism::identity(x);
      acc = acc + id.scaled(p[i]);
    }
  }
  return acc;
}

bool is_scalar_endo(const Morphism& u) {
  Rat lambda;
  bool seen = false;
  for (const QMatrix& m : u.mats()) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        if (r == c) {
          if (!seen) {
            lambda = m.at(r, r);
            seen = true;
          } else if (m.at(r, r) != lambda)
            return false;
        } else if (m.at(r, c) != 0)
          return false;
      }
  }
  return true;
}

// Minimal polynomial of the image of u in End/rad, computed by a Krylov sweep
// in quotient coordinates.
Poly minpoly_mod_rad(const Morphism& u, const QMatrix& end_flat, const QuotientMap& rad_quot) {
  const int sq = rad_quot.proj.rows();
  std::vector<std::vector<Rat>> krylov;  // quotient coordinate vectors
  QMatrix krylov_mat(sq, 0);
  Morphism pw = Morphism::identity(u.source());
  for (int k = 0;; ++k) {
    std::vector<Rat> flat = flatten_endo(pw);
    QMatrix coords = solve_matrix(end_flat, QMatrix::col_vector(flat));
    std::vector<Rat> q = rad_quot.proj.apply(coords.column_vec(0));
    if (k > 0) {
      auto dep = solve(krylov_mat, q);
      if (dep) {
        Poly mu(k + 1);
        for (int i = 0; i < k; ++i) mu[i] = -(*dep)[i];
        mu[k] = 1;
        return detail::trim(std::move(mu));
      }
    }
    krylov.push_back(q);
    QMatrix next(sq, int(krylov.size()));
    for (int c = 0; c < int(krylov.size()); ++c)
      for (int r = 0; r < sq; ++r) next.at(r, c) = krylov[c][r];
    krylov_mat = std::move(next);
    pw = compose(pw, u);
    require(k <= sq + 1, Errc::internal, "Krylov sweep failed to terminate");
  }
}

void decompose_rec(const Representation& m, std::vector<Representation>& leaves) {
  if (m.is_zero()) return;
  EndData ed = end_radical(m);
  const int s = int(ed.end_basis.size());
  const int sq = s - ed.rad_coords.cols();
  if (sq == 1) {
    leaves.push_back(m);
    return;
  }

  // Flattened End basis for coordinate solves.
  std::vector<Rat> probe = flatten_endo(ed.end_basis.empty() ? Morphism::identity(m) : ed.end_basis[0]);
  QMatrix end_flat(int(probe.size()), s);
  for (int c = 0; c < s; ++c) {
    std::vector<Rat> f = flatten_endo(ed.end_basis[c]);
    for (int r = 0; r < int(f.size()); ++r) end_flat.at(r, c) = f[r];
  }
  QuotientMap rad_quot = quotient_map(ed.rad_coords, s);

  auto try_split = [&](const Morphism& u) -> bool {
    if (is_scalar_endo(u)) return false;
    Poly mu = minpoly_mod_rad(u, end_flat, rad_quot);
    auto split = detail::coprime_split(mu);
    if (!split) return false;
    auto [g, h] = *split;
    detail::Egcd bez = detail::poly_egcd(g, h);
    if (detail::deg(bez.g) != 0) return false;  // not coprime (defensive)
    // e0 = (u_bez * g)(u) is idempotent modulo the radical; Newton steps make
    // it exactly idempotent since e0^2 - e0 is nilpotent.
    Morphism e = eval_poly(detail::poly_mul(bez.u, g), u);
    bool exact = false;
    for (int it = 0; it < 64; ++it) {
      Morphism ee = compose(e, e);
      bool idem = true;
      for (int v = 0; v < int(e.mats().size()); ++v)
        if (!(ee.mat(v) == e.mat(v))) {
          idem = false;
          break;
        }
      if (idem) {
        exact = true;
        break;
      }
      // e <- 3e^2 - 2e^3
      Morphism eee = compose(ee, e);
      e = ee.scaled(3) + eee.scaled(-2);
    }
    if (!exact) return false;
    SubQuotient im = image(e);
    SubQuotient ker = kernel(e);
    if (im.rep.is_zero() || ker.rep.is_zero()) return false;
    decompose_rec(im.rep, leaves);
    decompose_rec(ker.rep, leaves);
    return true;
  };

  for (const Morphism& b : ed.end_basis)
    if (try_split(b)) return;
  for (int i = 0; i < s && i < 8; ++i) {
    for (int j = i + 1; j < s && j < 8; ++j) {
      if (try_split(ed.end_basis[i] + ed.end_basis[j])) return;
      if (try_split(ed.end_basis[i] + ed.end_basis[j].scaled(-1))) return;
    }
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Morphism u = Morphism::zero(m, m);
    for (const Morphism& b : ed.end_basis) {
      int c = coeff(rng);
      if (c != 0) u = u + b.scaled(c);
    }
    if (try_split(u)) return;
  }
  fail(Errc::non_split_end_algebra,
       "End/rad has dimension " + std::to_string(sq) + " but no splitting idempotent was found");
}

}  // namespace

std::vector<DecompPart> decompose(const Representation& m) {
  std::vector<Representation> leaves;
  decompose_rec(m, leaves);
  std::sort(leaves.begin(), leaves.end(), [](const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims() != b.dims()) return a.dims() < b.dims();
    return a.bytes() < b.bytes();
  });
  std::vector<DecompPart> out;
  for (Representation& leaf : leaves) {
    bool merged = false;
    for (DecompPart& p : out) {
      if (p.rep.dims() == leaf.dims() && is_isomorphic(p.rep, leaf)) {
        ++p.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({std::move(leaf), 1});
  }
  return out;
}

SubQuotient radical_subrep(const Representation& x) {
  const Algebra& alg = x.algebra();
  std::vector<QMatrix> cols;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    QMatrix stacked(x.dim(v), 0);
    for (int a = 0; a < alg.num_arrows(); ++a)
      if (alg.arrow(a).dst == v) stacked = QMatrix::hstack(stacked, x.arrow_mat(a));
    cols.push_back(column_space_basis(stacked));
  }
  return subrep_from_columns(x, cols);
}

SubQuotient top_quotient(const Representation& x) { return cokernel(radical_subrep(x).map); }

std::string module_name(const Representation& x) {
  if (x.is_zero()) return "0";
  const Algebra& alg = x.algebra();
  std::vector<std::string> layers;
  Representation cur = x;
  bool uniserial = true;
  while (!cur.is_zero()) {
    SubQuotient rad = radical_subrep(cur);
    int drop_vertex = -1, total_drop = 0;
    for (int v = 0; v < alg.num_vertices(); ++v) {
      int d = cur.dim(v) - rad.rep.dim(v);
      total_drop += d;
      if (d == 1) drop_vertex = v;
    }
    if (total_drop != 1) {
      uniserial = false;
      break;
    }
    layers.push_back(alg.vertex_label(drop_vertex));
    cur = rad.rep;
  }
  if (uniserial) {
    std::string s;
    for (const std::string& l : layers) {
      if (!s.empty()) s += "/";
      s += l;
    }
    return s;
  }
  std::string s = "(";
  for (int v = 0; v < alg.num_vertices(); ++v) {
    if (v) s += ",";
    s += std::to_string(x.dim(v));
  }
  s += ")";
  return s;
}

}  // namespace qice
