#include "qice/wtau.hpp"

#include <algorithm>

#include "griditer.hpp"
#include "qice/error.hpp"

namespace qice {

SubcatSet cok_subcat(const ClosureTables& tables, const Representation& m, bool force) {
  const CensusPtr& census = tables.census();
  require(force || census->algebra().is_nakayama(), Errc::not_nakayama,
          "cok(-) is stated for Nakayama algebras; pass force to explore anyway");
  uint64_t seed = 0;
  for (int id : census->identify_parts(m)) seed |= uint64_t(1) << id;
  return make_subcat(census, tables.ids_of(tables.cokernel_closure_mask(seed)));
}

SubcatSet filt(const ClosureTables& tables, const BrickSet& s) {
  uint64_t seed = tables.mask_of(s.ids);
  return make_subcat(tables.census(), tables.ids_of(tables.extension_closure_mask(seed)));
}

namespace {

bool exists_injective(const Census& census, int from, int to, int radius = 1) {
  const std::vector<Morphism>& homs = census.hom_basis_cached(from, to);
  if (homs.empty()) return false;
  if (homs.size() == 1) return homs[0].is_injective();
  bool found = false;
  detail::for_each_grid(int(homs.size()), radius, true, [&](const std::vector<Rat>& c) {
    if (found) return;
    Morphism f = Morphism::zero(census.rep(from), census.rep(to));
    for (size_t k = 0; k < homs.size(); ++k)
      if (c[k] != 0) f = f + homs[k].scaled(c[k]);
    if (!f.is_zero() && f.is_injective()) found = true;
  });
  return found;
}

}  // namespace

BrickSet sim(const ClosureTables& tables, const SubcatSet& c) {
  require(tables.is_ice(c), Errc::invalid_input, "Sim(-) needs an ICE-closed subcategory");
  const CensusPtr& census = tables.census();
  std::vector<int> out;
  for (int x : c.ids) {
    bool simple_in_c = true;
    for (int y : c.ids) {
      if (y == x) continue;
      if (exists_injective(*census, y, x)) {
        simple_in_c = false;
        break;
      }
    }
    if (simple_in_c) out.push_back(x);
  }
  return make_brickset(census, std::move(out));
}

std::vector<int> ext_projective_ids(const ClosureTables& tables, const SubcatSet& c) {
  require(tables.is_ice(c), Errc::invalid_input, "P(-) needs an ICE-closed subcategory");
  const CensusPtr& census = tables.census();
  std::vector<int> out;
  for (int x : c.ids) {
    bool proj = true;
    for (int y : c.ids)
      if (census->ext_dim_cached(x, y) != 0) {
        proj = false;
        break;
      }
    if (proj) out.push_back(x);
  }
  return out;
}

Representation ext_projectives(const ClosureTables& tables, const SubcatSet& c) {
  return tables.census()->sum_of(ext_projective_ids(tables, c));
}

std::vector<WTauRow> wtau_table(const OpextContext& ctx, bool force) {
  require(force || ctx.ope().base->is_nakayama(), Errc::not_nakayama,
          "the base algebra is not Nakayama; pass force to explore anyway");
  require(force || ctx.ope().result->is_nakayama(), Errc::not_nakayama,
          "the extension algebra is not Nakayama; pass force to explore anyway");
  std::vector<WTauRow> rows;
  for (const SubcatSet& ice_a : ctx.tables_a().enumerate_ice(ctx.jobs())) {
    BrickSet ebrick_a = sim(ctx.tables_a(), ice_a);
    SubcatSet ice_b = thm31_T2(ctx, ice_a);
    BrickSet ebrick_b = thm35_Sprime(ctx, ebrick_a);
    SubcatSet filt_b = filt(ctx.tables_b(), ebrick_b);
    rows.push_back(WTauRow{
        ext_projective_ids(ctx.tables_a(), ice_a),
        ice_a,
        std::move(ebrick_a),
        ice_b,
        std::move(ebrick_b),
        filt_b,
        ext_projective_ids(ctx.tables_b(), ice_b),
        ext_projective_ids(ctx.tables_b(), filt_b),
    });
  }
  return rows;
}

}  // namespace qice
