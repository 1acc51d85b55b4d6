#include "qice/opext.hpp"

#include <algorithm>
#include <set>

#include "qice/error.hpp"

namespace qice {

namespace {

std::string fresh_vertex_label(const Algebra& a) {
  // Smallest positive integer not already used as a label.
  std::set<std::string> used(a.vertex_labels().begin(), a.vertex_labels().end());
  for (int k = 1;; ++k) {
    std::string cand = std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}

std::string fresh_arrow_label(const Algebra& a, int k, const std::set<std::string>& taken) {
  std::string cand = "w" + std::to_string(k);
  while (taken.count(cand)) cand = "_" + cand;
  return cand;
}

}  // namespace

std::string OnePointExtension::arrow_dictionary() const {
  std::string s;
  for (size_t k = 0; k < new_arrows.size(); ++k) {
    if (k) s += ", ";
    s += result->arrow(new_arrows[k]).name + " -> top generator " + std::to_string(k) +
         " at vertex " + base->vertex_label(top_gens[k].vertex);
  }
  return s.empty() ? "(none)" : s;
}

OnePointExtension one_point_extension(const AlgebraPtr& a, const Representation& m) {
  require(m.algebra_ptr().get() == a.get(), Errc::algebra_mismatch,
          "extension module lives over a different algebra");
  OnePointExtension ope{.base = a, .ext_module = m};

  // Top generators of M with canonical lifts.
  SubQuotient rad = radical_subrep(m);
  for (int v = 0; v < a->num_vertices(); ++v) {
    QuotientMap qm = quotient_map(rad.map.mat(v), m.dim(v));
    for (int c = 0; c < qm.lift.cols(); ++c) ope.top_gens.push_back({v, qm.lift.column_vec(c)});
  }

  // B quiver: new vertex first, then A's vertices; A's arrows, then one arrow
  // per top generator.
  std::string omega = fresh_vertex_label(*a);
  std::vector<std::string> vertices{omega};
  for (const std::string& v : a->vertex_labels()) vertices.push_back(v);
  ope.new_vertex = 0;
  ope.vertex_to_b.resize(a->num_vertices());
  for (int v = 0; v < a->num_vertices(); ++v) ope.vertex_to_b[v] = v + 1;

  std::vector<Arrow> arrows;
  ope.arrow_to_b.resize(a->num_arrows());
  std::set<std::string> arrow_names;
  for (int ar = 0; ar < a->num_arrows(); ++ar) {
    const Arrow& old = a->arrow(ar);
    ope.arrow_to_b[ar] = int(arrows.size());
    arrows.push_back({old.name, ope.vertex_to_b[old.src], ope.vertex_to_b[old.dst]});
    arrow_names.insert(old.name);
  }
  std::vector<int> new_arrow_ids;
  for (size_t k = 0; k < ope.top_gens.size(); ++k) {
    std::string name = fresh_arrow_label(*a, int(k), arrow_names);
    arrow_names.insert(name);
    new_arrow_ids.push_back(int(arrows.size()));
    arrows.push_back({name, 0, ope.vertex_to_b[ope.top_gens[k].vertex]});
  }
  ope.new_arrows = new_arrow_ids;

  // Relations: A's, translated, plus one per top generator of the first
  // syzygy, read off the presentation matrix of M.
  std::vector<Relation> relations;
  for (const Relation& rel : a->relations()) {
    Relation out;
    for (const RelationTerm& t : rel) {
      RelationTerm nt{t.coeff, {}};
      for (int ar : t.arrows) nt.arrows.push_back(ope.arrow_to_b[ar]);
      out.push_back(std::move(nt));
    }
    relations.push_back(std::move(out));
  }
  Presentation pres = min_presentation(m);
  {
    // Summand list of P1 in construction order (vertex, copy), recovered from
    // its top; the generator of summand l is the trivial path, the first
    // basis element of its block at its own vertex.
    std::vector<int> gen_vertex, gen_col;
    SubQuotient p1rad = radical_subrep(pres.p1);
    for (int v = 0; v < a->num_vertices(); ++v) {
      int copies = pres.p1.dim(v) - p1rad.rep.dim(v);
      for (int c = 0; c < copies; ++c) gen_vertex.push_back(v);
    }
    for (size_t l = 0; l < gen_vertex.size(); ++l) {
      int v = gen_vertex[l], start = 0;
      for (size_t q = 0; q < l; ++q) start += int(a->path_basis(gen_vertex[q], v).size());
      gen_col.push_back(start);
    }
    // P0 coordinate layout at a vertex w: summand k contributes
    // path_basis(v_k, w) consecutively.
    for (size_t l = 0; l < gen_vertex.size(); ++l) {
      int w = gen_vertex[l];
      Relation rel;
      int col = gen_col[l];
      int row = 0;
      for (size_t k = 0; k < ope.top_gens.size(); ++k) {
        const auto& paths = a->path_basis(ope.top_gens[k].vertex, w);
        for (const std::vector<int>& p : paths) {
          const Rat& c = pres.d.mat(w).at(row, col);
          if (c != 0) {
            require(!p.empty(), Errc::internal, "presentation is not minimal");
            RelationTerm t{c, {new_arrow_ids[k]}};
            for (int ar : p) t.arrows.push_back(ope.arrow_to_b[ar]);
            rel.push_back(std::move(t));
          }
          ++row;
        }
      }
      if (!rel.empty()) relations.push_back(std::move(rel));
    }
  }

  ope.result = std::make_shared<Algebra>(std::move(vertices), std::move(arrows),
                                         std::move(relations), a->budget());
  require(ope.result->dim() == a->dim() + m.total_dim() + 1, Errc::internal,
          "one-point extension dimension check failed: " + std::to_string(ope.result->dim()) +
              " != " + std::to_string(a->dim() + m.total_dim() + 1));
  for (int i = 0; i < a->num_vertices(); ++i)
    for (int j = 0; j < a->num_vertices(); ++j)
      require(a->path_basis(i, j).size() ==
                  ope.result->path_basis(ope.vertex_to_b[i], ope.vertex_to_b[j]).size(),
              Errc::internal, "one-point extension does not restrict to the base algebra");
  return ope;
}

TripleModule make_triple(const OnePointExtension& ope, Representation n_part, int omega_dim,
                         std::optional<Morphism> f) {
  require(omega_dim >= 0, Errc::invalid_input, "negative omega dimension");
  std::vector<Representation> copies(size_t(omega_dim), ope.ext_module);
  Representation mn = copies.empty() ? Representation::zero(ope.base)
                                     : Representation::direct_sum(copies);
  if (!f) return TripleModule{n_part, omega_dim, Morphism::zero(mn, n_part)};
  require(f->source().dims() == mn.dims() && f->target().dims() == n_part.dims(),
          Errc::invalid_input, "structure map has the wrong shape");
  return TripleModule{std::move(n_part), omega_dim, std::move(*f)};
}

Representation triple_to_rep(const OnePointExtension& ope, const TripleModule& t) {
  const Algebra& a = *ope.base;
  const Algebra& b = *ope.result;
  const int n = t.omega_dim;
  std::vector<int> dims(b.num_vertices(), 0);
  dims[ope.new_vertex] = n;
  for (int v = 0; v < a.num_vertices(); ++v) dims[ope.vertex_to_b[v]] = t.n_part.dim(v);
  std::vector<QMatrix> mats(b.num_arrows());
  for (int ar = 0; ar < a.num_arrows(); ++ar) mats[ope.arrow_to_b[ar]] = t.n_part.arrow_mat(ar);
  const Representation& m = ope.ext_module;
  for (size_t k = 0; k < ope.top_gens.size(); ++k) {
    int v = ope.top_gens[k].vertex;
    QMatrix mat(t.n_part.dim(v), n);
    for (int u = 0; u < n; ++u) {
      // Embed the k-th top lift into copy u of M^n and push through f.
      std::vector<Rat> vec(size_t(n) * m.dim(v));
      for (int r = 0; r < m.dim(v); ++r) vec[size_t(u) * m.dim(v) + r] = ope.top_gens[k].lift[r];
      std::vector<Rat> img = t.f.mat(v).apply(vec);
      for (int r = 0; r < t.n_part.dim(v); ++r) mat.at(r, u) = img[r];
    }
    mats[ope.new_arrows[k]] = std::move(mat);
  }
  return Representation(ope.result, std::move(dims), std::move(mats));
}

TripleModule rep_to_triple(const OnePointExtension& ope, const Representation& x) {
  require(x.algebra_ptr().get() == ope.result.get(), Errc::algebra_mismatch,
          "module is not over the extension algebra");
  const Algebra& a = *ope.base;
  const int n = x.dim(ope.new_vertex);

  std::vector<int> dims(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) dims[v] = x.dim(ope.vertex_to_b[v]);
  std::vector<QMatrix> nmats(a.num_arrows());
  for (int ar = 0; ar < a.num_arrows(); ++ar) nmats[ar] = x.arrow_mat(ope.arrow_to_b[ar]);
  Representation n_part(ope.base, std::move(dims), std::move(nmats));

  const Representation& m = ope.ext_module;
  std::vector<Representation> copies(size_t(n), m);
  Representation mn = copies.empty() ? Representation::zero(ope.base)
                                     : Representation::direct_sum(copies);

  // f(u (x) m0) for m0 in M_w: express m0 through the projective cover of M,
  // then act along (new arrow) * (path) on x. Any right inverse of eps works:
  // the translated relations kill the ambiguity on x.
  Presentation pres = min_presentation(m);
  std::vector<QMatrix> fmats(a.num_vertices());
  for (int w = 0; w < a.num_vertices(); ++w) {
    QMatrix f(n_part.dim(w), size_t(n) ? int(size_t(n) * m.dim(w)) : 0);
    if (n > 0 && m.dim(w) > 0) {
      QMatrix rinv = solve_matrix(pres.eps.mat(w), QMatrix::identity(m.dim(w)));
      // Column (k, p) of P0 at w corresponds to acting by new_arrow_k then p.
      int row = 0;
      for (size_t k = 0; k < ope.top_gens.size(); ++k) {
        std::vector<std::vector<int>> paths = a.path_basis(ope.top_gens[k].vertex, w);
        for (const std::vector<int>& p : paths) {
          std::vector<int> bpath{ope.new_arrows[k]};
          for (int ar : p) bpath.push_back(ope.arrow_to_b[ar]);
          QMatrix act = x.apply_path(ope.new_vertex, bpath);  // dim x_w' x n
          for (int mcol = 0; mcol < m.dim(w); ++mcol) {
            const Rat& c = rinv.at(row, mcol);
            if (c == 0) continue;
            for (int u = 0; u < n; ++u)
              for (int r = 0; r < n_part.dim(w); ++r)
                f.at(r, u * m.dim(w) + mcol) += c * act.at(r, u);
          }
          ++row;
        }
      }
    }
    fmats[w] = std::move(f);
  }
  Morphism f(mn, n_part, std::move(fmats));
  return TripleModule{std::move(n_part), n, std::move(f)};
}

namespace {

Morphism triple_pair_to_b_morphism(const OnePointExtension& ope, const TripleModule& s,
                                   const TripleModule& t, const TriplePairMorphism& m,
                                   const Representation& bs, const Representation& bt) {
  const Algebra& b = *ope.result;
  std::vector<QMatrix> mats(b.num_vertices());
  mats[ope.new_vertex] = m.g;
  for (int v = 0; v < ope.base->num_vertices(); ++v) mats[ope.vertex_to_b[v]] = m.h.mat(v);
  (void)s;
  (void)t;
  try {
    return Morphism(bs, bt, std::move(mats), true);
  } catch (const Error& e) {
    fail(Errc::invalid_input, std::string("not a morphism of triples: ") + e.what());
  }
}

}  // namespace

bool exactness_check(const OnePointExtension& ope, const TripleModule& t1, const TripleModule& t2,
                     const TripleModule& t3, const TriplePairMorphism& m1,
                     const TriplePairMorphism& m2) {
  Representation b1 = triple_to_rep(ope, t1);
  Representation b2 = triple_to_rep(ope, t2);
  Representation b3 = triple_to_rep(ope, t3);
  Morphism f1 = triple_pair_to_b_morphism(ope, t1, t2, m1, b1, b2);
  Morphism f2 = triple_pair_to_b_morphism(ope, t2, t3, m2, b2, b3);
  if (!f1.is_injective() || !f2.is_surjective()) return false;
  if (!compose(f2, f1).is_zero()) return false;
  for (int v = 0; v < ope.result->num_vertices(); ++v)
    if (rank(f1.mat(v)) + rank(f2.mat(v)) != b2.dim(v)) return false;
  return true;
}

OpextContext::OpextContext(OnePointExtension ope, int jobs)
    : ope_(std::move(ope)),
      census_a_(std::make_shared<Census>(Census::build(ope_.base))),
      census_b_(std::make_shared<Census>(Census::build(ope_.result))),
      tables_a_(ClosureTables::build(census_a_, jobs)),
      tables_b_(ClosureTables::build(census_b_, jobs)),
      bricks_a_(BrickTables::build(census_a_, jobs)),
      bricks_b_(BrickTables::build(census_b_, jobs)),
      jobs_(jobs) {
  embed_id_.resize(census_a_->size());
  for (int i = 0; i < census_a_->size(); ++i) {
    Representation emb = triple_to_rep(ope_, make_triple(ope_, census_a_->rep(i), 0));
    embed_id_[i] = census_b_->find(emb);
    require(embed_id_[i] >= 0, Errc::census_incomplete,
            "embedded module " + census_a_->name(i) + " is missing from the extension census");
  }
  Representation omega =
      triple_to_rep(ope_, make_triple(ope_, Representation::zero(ope_.base), 1));
  omega_simple_id_ = census_b_->find(omega);
  require(omega_simple_id_ >= 0, Errc::census_incomplete,
          "omega simple is missing from the extension census");
}

SubcatSet thm31_T1(const OpextContext& ctx, const SubcatSet& ice_a) {
  require(ctx.tables_a().is_ice(ice_a), Errc::invalid_input,
          "input subcategory is not ICE-closed over the base algebra");
  std::vector<int> ids;
  for (int id : ice_a.ids) ids.push_back(ctx.embed_id(id));
  SubcatSet out = make_subcat(ctx.census_b(), std::move(ids));
  require(ctx.tables_b().is_ice(out), Errc::internal, "embedded subcategory is not ICE-closed");
  return out;
}

SubcatSet thm31_T2(const OpextContext& ctx, const SubcatSet& ice_a) {
  require(ctx.tables_a().is_ice(ice_a), Errc::invalid_input,
          "input subcategory is not ICE-closed over the base algebra");
  std::vector<int> ids;
  for (int bid = 0; bid < ctx.census_b()->size(); ++bid) {
    TripleModule t = rep_to_triple(ctx.ope(), ctx.census_b()->rep(bid));
    bool in_add = true;
    for (int part : ctx.census_a()->identify_parts(t.n_part))
      if (!std::binary_search(ice_a.ids.begin(), ice_a.ids.end(), part)) {
        in_add = false;
        break;
      }
    if (in_add) ids.push_back(bid);
  }
  SubcatSet out = make_subcat(ctx.census_b(), std::move(ids));
  require(ctx.tables_b().is_ice(out), Errc::internal, "triple-filter subcategory is not ICE-closed");
  return out;
}

BrickSet thm35_S(const OpextContext& ctx, const BrickSet& ebrick_a) {
  require(ctx.bricks_a().is_epibrick(ebrick_a), Errc::invalid_input,
          "input is not an epibrick over the base algebra");
  std::vector<int> ids;
  for (int id : ebrick_a.ids) ids.push_back(ctx.embed_id(id));
  BrickSet out = make_brickset(ctx.census_b(), std::move(ids));
  require(ctx.bricks_b().is_epibrick(out), Errc::internal, "embedded set is not an epibrick");
  return out;
}

BrickSet thm35_Sprime(const OpextContext& ctx, const BrickSet& ebrick_a) {
  BrickSet out = thm35_S(ctx, ebrick_a);
  out.ids.push_back(ctx.omega_simple_id());
  out = make_brickset(ctx.census_b(), std::move(out.ids));
  require(ctx.bricks_b().is_epibrick(out), Errc::internal,
          "omega-extended set is not an epibrick");
  return out;
}

std::pair<BrickSet, BrickSet> remark36_monobrick(const OpextContext& ctx,
                                                 const BrickSet& mbrick_a) {
  require(ctx.bricks_a().is_monobrick(mbrick_a), Errc::invalid_input,
          "input is not a monobrick over the base algebra");
  std::vector<int> ids;
  for (int id : mbrick_a.ids) ids.push_back(ctx.embed_id(id));
  BrickSet s = make_brickset(ctx.census_b(), ids);
  require(ctx.bricks_b().is_monobrick(s), Errc::internal, "embedded set is not a monobrick");
  ids.push_back(ctx.omega_simple_id());
  BrickSet sprime = make_brickset(ctx.census_b(), std::move(ids));
  require(ctx.bricks_b().is_monobrick(sprime), Errc::internal,
          "omega-extended set is not a monobrick");
  return {std::move(s), std::move(sprime)};
}

GrowthReport growth_report(const OpextContext& ctx, GrowthKind kind) {
  GrowthReport out;
  out.kind = kind;
  std::set<std::vector<int>> images;
  if (kind == GrowthKind::ice) {
    std::vector<SubcatSet> over_a = ctx.tables_a().enumerate_ice(ctx.jobs());
    std::vector<SubcatSet> over_b = ctx.tables_b().enumerate_ice(ctx.jobs());
    out.n = int(over_a.size());
    out.m = int(over_b.size());
    for (const SubcatSet& c : over_a) {
      images.insert(thm31_T1(ctx, c).ids);
      images.insert(thm31_T2(ctx, c).ids);
    }
  } else {
    std::vector<BrickSet> over_a = ctx.bricks_a().enumerate_ebricks();
    std::vector<BrickSet> over_b = ctx.bricks_b().enumerate_ebricks();
    out.n = int(over_a.size());
    out.m = int(over_b.size());
    for (const BrickSet& s : over_a) {
      images.insert(thm35_S(ctx, s).ids);
      images.insert(thm35_Sprime(ctx, s).ids);
    }
  }
  out.images = int(images.size());
  out.images_distinct = out.images == 2 * out.n;
  out.bound_holds = out.m >= 2 * out.n;
  return out;
}

}  // namespace qice
