#include "qice/homext.hpp"

#include <algorithm>

#include "griditer.hpp"
#include "qice/error.hpp"

namespace qice {

namespace {

// Morphism P_v -> X sending the trivial path to the vector `gen` in X_v:
// a basis path p of P_v at vertex w goes to gen acted on along p.
Morphism projective_map(const Representation& pv, int v, const Representation& x,
                        const std::vector<Rat>& gen) {
  const Algebra& alg = x.algebra();
  std::vector<QMatrix> mats;
  for (int w = 0; w < alg.num_vertices(); ++w) {
    const auto& paths = alg.path_basis(v, w);
    QMatrix m(x.dim(w), int(paths.size()));
    for (int c = 0; c < int(paths.size()); ++c) {
      std::vector<Rat> img = x.apply_path(v, paths[c]).apply(gen);
      for (int r = 0; r < x.dim(w); ++r) m.at(r, c) = img[r];
    }
    mats.push_back(std::move(m));
  }
  return Morphism(pv, x, std::move(mats), false);
}

// Projective cover of X: P = (+) P_v^{top dims} with the covering morphism.
std::pair<Representation, Morphism> projective_cover(const Representation& x) {
  const AlgebraPtr alg = x.algebra_ptr();
  SubQuotient rad = radical_subrep(x);
  std::vector<Representation> summands;
  std::vector<Morphism> maps;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    // Lift the canonical basis of top(X)_v: columns of the quotient lift.
    QuotientMap qm = quotient_map(rad.map.mat(v), x.dim(v));
    for (int c = 0; c < qm.lift.cols(); ++c) {
      Representation pv = projective(alg, v);
      maps.push_back(projective_map(pv, v, x, qm.lift.column_vec(c)));
      summands.push_back(std::move(pv));
    }
  }
  if (summands.empty()) {
    Representation p0 = Representation::zero(alg);
    return {p0, Morphism::zero(p0, x)};
  }
  Representation p0 = Representation::direct_sum(summands);
  // Stack the maps horizontally per vertex.
  std::vector<QMatrix> mats;
  for (int w = 0; w < alg->num_vertices(); ++w) {
    QMatrix m(x.dim(w), 0);
    for (const Morphism& f : maps) m = QMatrix::hstack(m, f.mat(w));
    mats.push_back(std::move(m));
  }
  return {p0, Morphism(p0, x, std::move(mats), false)};
}

}  // namespace

Presentation min_presentation(const Representation& x) {
  auto [p0, eps] = projective_cover(x);
  SubQuotient k = kernel(eps);
  auto [p1, eta] = projective_cover(k.rep);
  Morphism d = compose(k.map, eta);
  return Presentation{std::move(p1), std::move(p0), x, std::move(d), std::move(eps)};
}

namespace {

std::vector<Rat> flatten_morphism(const Morphism& f) {
  std::vector<Rat> out;
  for (const QMatrix& m : f.mats())
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

}  // namespace

ExtSpace::ExtSpace(const Representation& y, const Representation& x)
    : pres_(min_presentation(y)), x_(x) {
  require(&y.algebra() == &x.algebra(), Errc::algebra_mismatch, "Ext over different algebras");
  hom_p1_x_ = hom_basis(pres_.p1, x_);
  const int h1 = int(hom_p1_x_.size());
  if (h1 == 0) {
    hom_flat_ = QMatrix(0, 0);
    cocycles_ = QMatrix(0, 0);
    ext_quot_ = quotient_map(QMatrix(0, 0), 0);
    ext_dim_ = 0;
    return;
  }
  std::vector<Rat> probe = flatten_morphism(hom_p1_x_[0]);
  hom_flat_ = QMatrix(int(probe.size()), h1);
  for (int c = 0; c < h1; ++c) {
    std::vector<Rat> f = flatten_morphism(hom_p1_x_[c]);
    for (int r = 0; r < int(f.size()); ++r) hom_flat_.at(r, c) = f[r];
  }
  // Cocycle condition: the composite with ker(d) -> P1 vanishes.
  SubQuotient kd = kernel(pres_.d);
  if (kd.rep.is_zero()) {
    cocycles_ = QMatrix::identity(h1);
  } else {
    std::vector<Rat> cprobe = flatten_morphism(compose(hom_p1_x_[0], kd.map));
    QMatrix cond(int(cprobe.size()), h1);
    for (int c = 0; c < h1; ++c) {
      std::vector<Rat> f = flatten_morphism(compose(hom_p1_x_[c], kd.map));
      for (int r = 0; r < int(f.size()); ++r) cond.at(r, c) = f[r];
    }
    cocycles_ = kernel_basis(cond);
  }
  // Image of Hom(P0, X) along d, in cocycle-space coordinates (the image
  // automatically satisfies the cocycle condition).
  std::vector<Morphism> hom_p0_x = hom_basis(pres_.p0, x_);
  QMatrix img(h1, int(hom_p0_x.size()));
  for (int c = 0; c < int(hom_p0_x.size()); ++c) {
    Morphism gd = compose(hom_p0_x[c], pres_.d);
    QMatrix coords = solve_matrix(hom_flat_, QMatrix::col_vector(flatten_morphism(gd)));
    for (int r = 0; r < h1; ++r) img.at(r, c) = coords.at(r, 0);
  }
  QMatrix img_in_z = cocycles_.cols() == 0 ? QMatrix(0, img.cols()) : solve_matrix(cocycles_, img);
  ext_quot_ = quotient_map(img_in_z, cocycles_.cols());
  ext_dim_ = ext_quot_.proj.rows();
}

Morphism ExtSpace::cocycle(const std::vector<Rat>& coords) const {
  require(int(coords.size()) == dim(), Errc::invalid_input, "Ext coordinate length mismatch");
  Morphism m = Morphism::zero(pres_.p1, x_);
  if (dim() == 0) return m;
  std::vector<Rat> z = ext_quot_.lift.apply(coords);
  std::vector<Rat> h = cocycles_.apply(z);
  for (int k = 0; k < int(h.size()); ++k)
    if (h[k] != 0) m = m + hom_p1_x_[k].scaled(h[k]);
  return m;
}

std::vector<Rat> ExtSpace::coords_of(const Morphism& cocycle) const {
  const int h1 = int(hom_p1_x_.size());
  if (h1 == 0) return {};
  QMatrix hc = solve_matrix(hom_flat_, QMatrix::col_vector(flatten_morphism(cocycle)));
  QMatrix aug = QMatrix::hstack(cocycles_, hc);
  Rref rr = rref(aug);
  for (int p : rr.pivots)
    require(p < cocycles_.cols(), Errc::invalid_input, "morphism is not a cocycle");
  std::vector<Rat> z(cocycles_.cols());
  for (int t = 0; t < int(rr.pivots.size()); ++t) z[rr.pivots[t]] = rr.mat.at(t, cocycles_.cols());
  return ext_quot_.proj.apply(z);
}

std::vector<ExtClass> ext1_basis(const Representation& y, const Representation& x) {
  ExtSpace es(y, x);
  std::vector<ExtClass> out;
  for (int k = 0; k < es.dim(); ++k) {
    std::vector<Rat> coords(es.dim());
    coords[k] = 1;
    out.push_back({coords, es.cocycle(coords)});
  }
  return out;
}

int ext1_dim(const Representation& y, const Representation& x) {
  // dim Hom(P1, X) - rank of the restriction map along d.
  return ExtSpace(y, x).dim();
}

MiddleTerm middle_term(const ExtSpace& ext, const std::vector<Rat>& coords) {
  const Representation& y = ext.y();
  const Representation& x = ext.x();
  const Presentation& pres = ext.presentation();
  Morphism c = ext.cocycle(coords);
  // psi : P1 -> X (+) P0, stacked (-c; d).
  Representation xp0 = Representation::direct_sum(x, pres.p0);
  std::vector<QMatrix> psi_mats;
  for (int v = 0; v < int(c.mats().size()); ++v)
    psi_mats.push_back(QMatrix::vstack(c.mat(v).scaled(-1), pres.d.mat(v)));
  Morphism psi(pres.p1, xp0, std::move(psi_mats), false);
  SubQuotient q = cokernel(psi);

  // incl = q restricted to the X block.
  std::vector<QMatrix> incl_mats;
  for (int v = 0; v < int(q.map.mats().size()); ++v) {
    QMatrix m(q.rep.dim(v), x.dim(v));
    for (int r = 0; r < m.rows(); ++r)
      for (int cc = 0; cc < m.cols(); ++cc) m.at(r, cc) = q.map.mat(v).at(r, cc);
    incl_mats.push_back(std::move(m));
  }
  Morphism incl(x, q.rep, std::move(incl_mats));

  // proj factors (0, eps) : X (+) P0 -> Y through the cokernel projection.
  std::vector<QMatrix> proj_mats;
  for (int v = 0; v < int(q.map.mats().size()); ++v) {
    QMatrix zero_eps(y.dim(v), xp0.dim(v));
    for (int r = 0; r < y.dim(v); ++r)
      for (int cc = 0; cc < pres.p0.dim(v); ++cc)
        zero_eps.at(r, x.dim(v) + cc) = pres.eps.mat(v).at(r, cc);
    // T with T * q = (0, eps); solve on the transposed side.
    QMatrix t = solve_matrix(q.map.mat(v).transpose(), zero_eps.transpose()).transpose();
    proj_mats.push_back(std::move(t));
  }
  Morphism proj(q.rep, y, std::move(proj_mats));

  // Componentwise exactness bookkeeping.
  for (int v = 0; v < int(q.rep.dims().size()); ++v)
    require(q.rep.dim(v) == x.dim(v) + y.dim(v), Errc::internal,
            "middle term has wrong dimension vector");
  require(incl.is_injective(), Errc::internal, "middle term inclusion not injective");
  require(proj.is_surjective(), Errc::internal, "middle term projection not surjective");
  require(compose(proj, incl).is_zero(), Errc::internal, "middle term composite nonzero");
  return {q.rep, std::move(incl), std::move(proj)};
}

MiddleTerm middle_term(const ExtClass& cls, const ExtSpace& ext) {
  return middle_term(ext, cls.coords);
}

std::vector<Representation> middle_terms_all(const Representation& y, const Representation& x,
                                             int radius) {
  ExtSpace es(y, x);
  std::vector<Representation> out;
  out.push_back(Representation::direct_sum(x, y));  // split class
  detail::for_each_grid(es.dim(), radius, true, [&](const std::vector<Rat>& coords) {
    Representation e = middle_term(es, coords).e;
    for (const Representation& seen : out)
      if (is_isomorphic(seen, e)) return;
    out.push_back(std::move(e));
  });
  std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims() != b.dims()) return a.dims() < b.dims();
    return a.bytes() < b.bytes();
  });
  return out;
}

std::vector<Representation> simple_quotient_steps(const Representation& x, int radius) {
  const AlgebraPtr alg = x.algebra_ptr();
  std::vector<Representation> out;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    Representation s = simple(alg, v);
    std::vector<Morphism> homs = hom_basis(s, x);
    if (homs.empty()) continue;
    detail::for_each_grid(int(homs.size()), radius, true, [&](const std::vector<Rat>& coords) {
      Morphism phi = Morphism::zero(s, x);
      for (size_t k = 0; k < homs.size(); ++k)
        if (coords[k] != 0) phi = phi + homs[k].scaled(coords[k]);
      if (phi.is_zero()) return;
      Representation q = cokernel(phi).rep;
      if (q.is_zero()) return;
      for (const Representation& seen : out)
        if (seen.dims() == q.dims() && is_isomorphic(seen, q)) return;
      out.push_back(std::move(q));
    });
  }
  std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims() != b.dims()) return a.dims() < b.dims();
    return a.bytes() < b.bytes();
  });
  return out;
}

}  // namespace qice
