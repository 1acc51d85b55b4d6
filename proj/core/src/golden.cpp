#include "qice/golden.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qice/error.hpp"
#include "qice/io.hpp"
#include "qice/wtau.hpp"

namespace qice::golden {

namespace {

using NameSet = std::vector<std::string>;  // sorted

NameSet ns(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  return names;
}

std::string show(const NameSet& s) {
  if (s.empty()) return "{0}";
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out + "}";
}

std::string show_many(const std::vector<NameSet>& sets, size_t cap = 6) {
  std::string out;
  for (size_t i = 0; i < sets.size() && i < cap; ++i) {
    if (i) out += " ";
    out += show(sets[i]);
  }
  if (sets.size() > cap) out += " ...";
  return out;
}

NameSet subcat_names(const SubcatSet& s) {
  NameSet out;
  for (int id : s.ids) out.push_back(s.census->name(id));
  return ns(std::move(out));
}

NameSet brick_names(const BrickSet& s) {
  NameSet out;
  for (int id : s.ids) out.push_back(s.census->name(id));
  return ns(std::move(out));
}

NameSet id_names(const CensusPtr& c, const std::vector<int>& ids) {
  NameSet out;
  for (int id : ids) out.push_back(c->name(id));
  return ns(std::move(out));
}

// ---- bundled algebras ------------------------------------------------------

AlgebraPtr algebra_a2() {
  return std::make_shared<Algebra>(std::vector<std::string>{"2", "3"},
                                   std::vector<Arrow>{{"beta", 0, 1}}, std::vector<Relation>{});
}

AlgebraPtr algebra_a3_ex37() {
  return std::make_shared<Algebra>(std::vector<std::string>{"4", "2", "3"},
                                   std::vector<Arrow>{{"gamma", 0, 1}, {"beta", 1, 2}},
                                   std::vector<Relation>{});
}

OnePointExtension ope_ex321() {
  AlgebraPtr a = algebra_a2();
  return one_point_extension(a, projective(a, 0));  // M = P_2
}

OnePointExtension ope_ex322() {
  AlgebraPtr a = algebra_a2();
  return one_point_extension(a, simple(a, 0));  // M = S_2
}

OnePointExtension ope_ex37() {
  AlgebraPtr a = algebra_a3_ex37();
  return one_point_extension(a, projective(a, 1));  // M = P_2 : 0 -> k -> k
}

// ---- embedded reference lists ---------------------------------------------

const std::vector<NameSet>& ice_a_list_32() {
  static const std::vector<NameSet> sets = {
      ns({"2/3", "2", "3"}), ns({"2/3", "2"}), ns({"2"}), ns({"3"}), ns({}),
  };
  return sets;
}

const std::vector<NameSet>& ice_b_list_321() {
  static const std::vector<NameSet> sets = {
      ns({"2/3", "2", "3"}),
      ns({"2/3", "2"}),
      ns({"2"}),
      ns({"3"}),
      ns({}),
      ns({"1/2/3", "1", "2/3", "1/2", "2", "3"}),
      ns({"1/2/3", "1", "2/3", "1/2", "2"}),
      ns({"1/2", "1", "2"}),
      ns({"1", "3"}),
      ns({"1"}),
  };
  return sets;
}

const std::vector<NameSet>& ice_b_list_322() {
  static const std::vector<NameSet> sets = {
      ns({"2/3", "2", "3"}),
      ns({"2/3", "2"}),
      ns({"2"}),
      ns({"3"}),
      ns({}),
      ns({"2/3", "1", "1/2", "2", "3"}),
      ns({"2/3", "1", "1/2", "2"}),
      ns({"1/2", "1", "2"}),
      ns({"1", "3"}),
      ns({"1"}),
  };
  return sets;
}

// Example 3.7's printed epibrick list over A, transcribed as printed. The
// printed list differs from the computed enumeration in two entries; see the
// PaperList discrepancy fields.
const std::vector<NameSet>& ebrick_a_list_37() {
  static const std::vector<NameSet> sets = {
      ns({"4"}),
      ns({"4", "2"}),
      ns({"4", "3"}),
      ns({"4", "4/2"}),
      ns({"4", "2/3"}),
      ns({"4", "4/2/3"}),
      ns({"4", "2", "3"}),
      ns({"4", "2", "2/3"}),
      ns({"4", "2", "4/2/3"}),
      ns({"4", "3", "4/2"}),
      ns({"4", "4/2", "4/2/3"}),
      ns({"2"}),
      ns({"2", "3"}),
      ns({"2", "2/3"}),
      ns({"2", "4/2/3"}),
      ns({"2", "4/2/3", "4/2"}),
      ns({"3"}),
      ns({"3", "4/2"}),
      ns({"4/2", "4/2/3"}),
      ns({"2/3"}),
      ns({"4/2/3"}),
      ns({}),
  };
  return sets;
}

std::vector<NameSet> ebrick_b_list_37() {
  std::vector<NameSet> out = ebrick_a_list_37();
  for (const NameSet& s : ebrick_a_list_37()) {
    NameSet t = s;
    t.push_back("1");
    out.push_back(ns(std::move(t)));
  }
  return out;
}

const std::string k37_note =
    "the printed list contains {2, 4/2/3, 4/2}, but Hom(2, 4/2) is spanned by the socle "
    "inclusion (nonzero, not surjective), so that set fails the epibrick condition; the valid "
    "singleton {4/2} is absent from print. Both counts are 22.";

const std::string k321_note =
    "the printed list has 5 entries but the same paper's Table 1 also lists add{2/3}, which the "
    "enumeration confirms ICE-closed; the computed total is 6.";

// Expected table rows, keyed by the ice-A column.
struct TableRow {
  NameSet wtau_a, ice_a, ebrick_a, ice_b, ebrick_b, wtau_b;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {ns({}), ns({}), ns({}), ns({"1"}), ns({"1"}), ns({"1"})},
      {ns({"2"}), ns({"2"}), ns({"2"}), ns({"1/2", "1", "2"}), ns({"1", "2"}), ns({"2", "1/2"})},
      {ns({"3"}), ns({"3"}), ns({"3"}), ns({"1", "3"}), ns({"1", "3"}), ns({"1", "3"})},
      {ns({"2/3"}), ns({"2/3"}), ns({"2/3"}), ns({"1/2/3", "1", "2/3"}), ns({"1", "2/3"}),
       ns({"2/3", "1/2/3"})},
      {ns({"2/3", "2"}), ns({"2/3", "2"}), ns({"2/3", "2"}),
       ns({"1/2/3", "1", "2/3", "1/2", "2"}), ns({"1", "2/3", "2"}), ns({"1/2/3", "2/3", "2"})},
      {ns({"2/3", "3"}), ns({"2/3", "3", "2"}), ns({"2", "3"}),
       ns({"1/2/3", "1", "2/3", "1/2", "2", "3"}), ns({"1", "2", "3"}),
       ns({"1/2/3", "2/3", "3"})},
  };
  return rows;
}

// ---- comparison helpers ----------------------------------------------------

bool set_in(const std::vector<NameSet>& haystack, const NameSet& needle) {
  return std::find(haystack.begin(), haystack.end(), needle) != haystack.end();
}

void push(std::vector<CheckLine>& lines, const std::string& name, bool ok,
          const std::string& detail = "") {
  lines.push_back({name, ok ? Status::pass : Status::fail, detail});
}

}  // namespace

Status CaseReport::overall() const {
  Status out = Status::pass;
  for (const CheckLine& l : lines) {
    if (l.status == Status::fail) return Status::fail;
    if (l.status == Status::warn) out = Status::warn;
  }
  return out;
}

std::vector<CheckLine> compare_with_paper(const PaperList& paper,
                                          const std::vector<std::vector<std::string>>& computed0) {
  std::vector<NameSet> computed;
  for (auto s : computed0) computed.push_back(ns(std::move(s)));
  std::vector<NameSet> paper_sets;
  for (auto s : paper.sets) paper_sets.push_back(ns(std::move(s)));

  std::vector<CheckLine> lines;
  std::vector<NameSet> missing, extra;
  for (const NameSet& s : paper_sets)
    if (!set_in(computed, s)) missing.push_back(s);
  for (const NameSet& s : computed)
    if (!set_in(paper_sets, s)) extra.push_back(s);

  size_t agreed = paper_sets.size() - missing.size();
  lines.push_back({"reference list membership", Status::pass,
                   std::to_string(agreed) + "/" + std::to_string(paper_sets.size()) +
                       " printed sets found in the computed enumeration"});

  for (const NameSet& s : missing) {
    bool documented = set_in(std::vector<NameSet>(paper.known_invalid.begin(),
                                                  paper.known_invalid.end()),
                             s);
    lines.push_back({"printed set " + show(s),
                     documented ? Status::warn : Status::fail,
                     documented ? "documented discrepancy: " + paper.discrepancy_note
                                : "printed set is absent from the computed enumeration"});
  }
  if (paper.claims_complete || !paper.known_missing.empty()) {
    for (const NameSet& s : extra) {
      bool documented =
          set_in(std::vector<NameSet>(paper.known_missing.begin(), paper.known_missing.end()), s);
      lines.push_back({"computed set " + show(s),
                       documented ? Status::warn : Status::fail,
                       documented ? "documented discrepancy: " + paper.discrepancy_note
                                  : "computed set is absent from the printed list, which claims "
                                    "completeness"});
    }
  }
  return lines;
}

std::vector<std::string> paper_list_ids() {
  return {"ex-3.2-1-A-ice", "ex-3.2-1-B-ice", "ex-3.2-2-A-ice",
          "ex-3.2-2-B-ice", "ex-3.7-A-ebrick", "ex-3.7-B-ebrick"};
}

const PaperList* find_paper_list(const std::string& id) {
  static const std::vector<PaperList> lists = [] {
    std::vector<PaperList> out;
    out.push_back(
        {"ex-3.2-1-A-ice", "ice", "ex-3.2-1-A", true, ice_a_list_32(), {ns({"2/3"})}, {}, k321_note});
    out.push_back({"ex-3.2-1-B-ice", "ice", "ex-3.2-1-B", false, ice_b_list_321(), {}, {}, ""});
    out.push_back(
        {"ex-3.2-2-A-ice", "ice", "ex-3.2-2-A", true, ice_a_list_32(), {ns({"2/3"})}, {}, k321_note});
    out.push_back({"ex-3.2-2-B-ice", "ice", "ex-3.2-2-B", false, ice_b_list_322(), {}, {}, ""});
    out.push_back({"ex-3.7-A-ebrick", "ebrick", "ex-3.7-A", true, ebrick_a_list_37(),
                   {ns({"4/2"})},
                   {ns({"2", "4/2/3", "4/2"})},
                   k37_note});
    out.push_back({"ex-3.7-B-ebrick", "ebrick", "ex-3.7-B", true, ebrick_b_list_37(),
                   {ns({"4/2"}), ns({"4/2", "1"})},
                   {ns({"2", "4/2/3", "4/2"}), ns({"2", "4/2/3", "4/2", "1"})},
                   k37_note});
    return out;
  }();
  for (const PaperList& l : lists)
    if (l.id == id) return &l;
  return nullptr;
}

std::vector<std::string> builtin_ids() {
  return {"ex-3.2-1-A", "ex-3.2-1-B", "ex-3.2-2-A", "ex-3.2-2-B", "ex-3.7-A", "ex-3.7-B"};
}

AlgebraPtr builtin_algebra(const std::string& id) {
  if (id == "ex-3.2-1-A" || id == "ex-3.2-2-A") return algebra_a2();
  if (id == "ex-3.2-1-B") return ope_ex321().result;
  if (id == "ex-3.2-2-B") return ope_ex322().result;
  if (id == "ex-3.7-A") return algebra_a3_ex37();
  if (id == "ex-3.7-B") return ope_ex37().result;
  fail(Errc::invalid_input, "unknown builtin algebra '" + id + "'");
}

std::vector<std::string> case_ids() {
  return {"ex-3.2-1", "ex-3.2-2", "ex-3.7",          "table-1",
          "table-2",  "growth-ex-3.2-1", "growth-ex-3.2-2", "growth-ex-3.7"};
}

namespace {

CaseReport run_ex32(const std::string& id, bool with_relation, int jobs) {
  CaseReport report{id, {}};
  OpextContext ctx(with_relation ? ope_ex322() : ope_ex321(), jobs);
  push(report.lines, "census over A has 3 indecomposables", ctx.census_a()->size() == 3,
       std::to_string(ctx.census_a()->size()));
  push(report.lines, std::string("census over B has ") + (with_relation ? "5" : "6") +
                         " indecomposables",
       ctx.census_b()->size() == (with_relation ? 5 : 6), std::to_string(ctx.census_b()->size()));

  std::vector<SubcatSet> ice_a = ctx.tables_a().enumerate_ice(jobs);
  std::vector<NameSet> ice_a_names;
  for (const SubcatSet& c : ice_a) ice_a_names.push_back(subcat_names(c));
  for (const NameSet& s : ice_a_list_32()) {
    bool found = set_in(ice_a_names, s);
    push(report.lines, "printed A-subcategory add" + show(s) + " is ICE-closed and enumerated",
         found);
  }
  const PaperList* pl = find_paper_list(with_relation ? "ex-3.2-2-A-ice" : "ex-3.2-1-A-ice");
  for (CheckLine& l : compare_with_paper(*pl, ice_a_names)) report.lines.push_back(std::move(l));
  push(report.lines, "computed ICE total over A is 6", ice_a.size() == 6,
       std::to_string(ice_a.size()));

  // Theorem images of the printed five equal the printed ten B-subcategories.
  std::vector<NameSet> images;
  for (const NameSet& s : ice_a_list_32()) {
    std::vector<int> ids;
    for (const std::string& name : s) ids.push_back(ctx.census_a()->find_name(name));
    SubcatSet c = make_subcat(ctx.census_a(), ids);
    images.push_back(subcat_names(thm31_T1(ctx, c)));
    images.push_back(subcat_names(thm31_T2(ctx, c)));
  }
  const std::vector<NameSet>& expect_b = with_relation ? ice_b_list_322() : ice_b_list_321();
  bool all_found = true;
  for (const NameSet& s : expect_b)
    if (!set_in(images, s)) all_found = false;
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  push(report.lines, "theorem images of the printed five equal the printed ten B-subcategories",
       all_found && images.size() == 10,
       std::to_string(images.size()) + " distinct images; every image verified ICE-closed over B");

  // The printed B-subcategories also appear in the full enumeration over B.
  std::vector<SubcatSet> ice_b = ctx.tables_b().enumerate_ice(jobs);
  std::vector<NameSet> ice_b_names;
  for (const SubcatSet& c : ice_b) ice_b_names.push_back(subcat_names(c));
  bool b_member = true;
  for (const NameSet& s : expect_b)
    if (!set_in(ice_b_names, s)) b_member = false;
  push(report.lines, "printed B-subcategories appear in the full enumeration over B", b_member,
       std::to_string(ice_b.size()) + " ICE-closed subcategories over B in total");
  return report;
}

CaseReport run_ex37(int jobs) {
  CaseReport report{"ex-3.7", {}};
  OpextContext ctx(ope_ex37(), jobs);
  push(report.lines, "census over A has 6 indecomposables", ctx.census_a()->size() == 6,
       std::to_string(ctx.census_a()->size()));
  push(report.lines, "all 6 indecomposables over A are bricks",
       ctx.census_a()->brick_ids().size() == 6);
  push(report.lines, "census over B has 12 indecomposables", ctx.census_b()->size() == 12,
       std::to_string(ctx.census_b()->size()));

  std::vector<BrickSet> ebricks = ctx.bricks_a().enumerate_ebricks();
  push(report.lines, "computed epibrick count over A is 22", ebricks.size() == 22,
       std::to_string(ebricks.size()));
  std::vector<NameSet> computed;
  for (const BrickSet& s : ebricks) computed.push_back(brick_names(s));
  const PaperList* pl = find_paper_list("ex-3.7-A-ebrick");
  for (CheckLine& l : compare_with_paper(*pl, computed)) report.lines.push_back(std::move(l));

  // Witness for the documented erratum: the unique map 2 -> 4/2 is injective
  // and not surjective.
  int id2 = ctx.census_a()->find_name("2");
  int id42 = ctx.census_a()->find_name("4/2");
  PairReport pr = classify_pair(*ctx.census_a(), id2, id42);
  push(report.lines, "erratum witness: every nonzero morphism 2 -> 4/2 is a non-surjective "
                     "injection",
       pr.cls == PairClass::all_injective, pair_class_name(pr.cls));

  // Theorem images of the computed 22.
  std::vector<NameSet> images;
  for (const BrickSet& s : ebricks) {
    images.push_back(brick_names(thm35_S(ctx, s)));
    images.push_back(brick_names(thm35_Sprime(ctx, s)));
  }
  std::vector<NameSet> uniq = images;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  push(report.lines, "theorem images are 44 pairwise distinct epibricks over B", uniq.size() == 44,
       std::to_string(uniq.size()) + "; each verified by the epibrick predicate over B");
  const PaperList* plb = find_paper_list("ex-3.7-B-ebrick");
  for (CheckLine& l : compare_with_paper(*plb, uniq)) report.lines.push_back(std::move(l));
  return report;
}

CaseReport run_tables(const std::string& id, int jobs) {
  CaseReport report{id, {}};
  bool table1 = id == "table-1";
  OpextContext ctx(ope_ex321(), jobs);
  std::vector<WTauRow> rows = wtau_table(ctx);
  push(report.lines, "table has 6 rows", rows.size() == 6, std::to_string(rows.size()));
  for (const TableRow& expect : table_rows()) {
    const WTauRow* found = nullptr;
    for (const WTauRow& row : rows)
      if (subcat_names(row.ice_a) == expect.ice_a) {
        found = &row;
        break;
      }
    std::string key = "row add" + show(expect.ice_a);
    if (!found) {
      push(report.lines, key, false, "no computed row with this ice-A column");
      continue;
    }
    bool ok = true;
    std::ostringstream why;
    if (id_names(ctx.census_a(), found->wtau_a) != expect.wtau_a) {
      ok = false;
      why << "w tau-tilt A mismatch ";
    }
    if (table1) {
      if (subcat_names(found->ice_b) != expect.ice_b) {
        ok = false;
        why << "ice B mismatch ";
      }
    } else {
      if (brick_names(found->ebrick_a) != expect.ebrick_a) {
        ok = false;
        why << "ebrick A mismatch ";
      }
      if (brick_names(found->ebrick_b) != expect.ebrick_b) {
        ok = false;
        why << "ebrick B mismatch ";
      }
    }
    if (id_names(ctx.census_b(), found->wtau_b_route1) != expect.wtau_b) {
      ok = false;
      why << "w tau-tilt B (route 1) mismatch ";
    }
    if (id_names(ctx.census_b(), found->wtau_b_route2) != expect.wtau_b) {
      ok = false;
      why << "w tau-tilt B (route 2) mismatch ";
    }
    push(report.lines, key + " matches cell-for-cell", ok, why.str());
  }
  return report;
}

CaseReport run_growth(const std::string& id, int jobs) {
  CaseReport report{id, {}};
  OnePointExtension ope = id == "growth-ex-3.2-1"   ? ope_ex321()
                          : id == "growth-ex-3.2-2" ? ope_ex322()
                                                    : ope_ex37();
  OpextContext ctx(std::move(ope), jobs);
  for (GrowthKind kind : {GrowthKind::ice, GrowthKind::ebrick}) {
    GrowthReport g = growth_report(ctx, kind);
    std::string label = kind == GrowthKind::ice ? "ice" : "ebrick";
    std::ostringstream detail;
    detail << "n=" << g.n << " m=" << g.m << " images=" << g.images;
    push(report.lines, label + ": 2n theorem images pairwise distinct", g.images_distinct,
         detail.str());
    push(report.lines, label + ": m >= 2n", g.bound_holds, detail.str());
    if (id == "growth-ex-3.7" && kind == GrowthKind::ebrick)
      push(report.lines, "ebrick: n equals the printed count 22", g.n == 22, std::to_string(g.n));
    if (id == "growth-ex-3.2-1" && kind == GrowthKind::ice)
      push(report.lines, "ice: n equals the computed count 6", g.n == 6, std::to_string(g.n));
  }
  return report;
}

}  // namespace

CaseReport run_case(const std::string& id, int jobs) {
  if (id == "ex-3.2-1") return run_ex32(id, false, jobs);
  if (id == "ex-3.2-2") return run_ex32(id, true, jobs);
  if (id == "ex-3.7") return run_ex37(jobs);
  if (id == "table-1" || id == "table-2") return run_tables(id, jobs);
  if (id.rfind("growth-", 0) == 0) return run_growth(id, jobs);
  fail(Errc::invalid_input, "unknown case '" + id + "'; known: ex-3.2-1 ex-3.2-2 ex-3.7 table-1 "
                            "table-2 growth-ex-3.2-1 growth-ex-3.2-2 growth-ex-3.7");
}

}  // namespace qice::golden
