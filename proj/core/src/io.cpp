#include "qice/io.hpp"

#include <fstream>
#include <sstream>

#include "qice/error.hpp"

namespace qice {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::invalid_input, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::invalid_input, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

AlgebraPtr algebra_from_json(const json& j) {
  require(j.is_object(), Errc::invalid_input, "algebra document must be an object");
  require(j.contains("vertices") && j["vertices"].is_array(), Errc::invalid_input,
          "algebra document needs a 'vertices' array");
  std::vector<std::string> vertices;
  for (const json& v : j["vertices"]) vertices.push_back(v.get<std::string>());

  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  auto vertex_index = [&](const std::string& label) {
    for (int v = 0; v < int(vertices.size()); ++v)
      if (vertices[v] == label) return v;
    fail(Errc::unknown_vertex, "unknown vertex '" + label + "'");
  };
  if (j.contains("arrows")) {
    for (const json& a : j["arrows"]) {
      arrows.push_back(Arrow{a.at("name").get<std::string>(),
                             vertex_index(a.at("from").get<std::string>()),
                             vertex_index(a.at("to").get<std::string>())});
      arrow_names.push_back(arrows.back().name);
    }
  }
  auto arrow_index = [&](const std::string& name) {
    for (int a = 0; a < int(arrow_names.size()); ++a)
      if (arrow_names[a] == name) return a;
    fail(Errc::unknown_arrow, "unknown arrow '" + name + "'");
  };
  std::vector<Relation> relations;
  if (j.contains("relations")) {
    for (const json& rel : j["relations"]) {
      Relation out;
      for (const json& term : rel) {
        RelationTerm t;
        t.coeff = term.contains("coeff") ? parse_rational(term.at("coeff").get<std::string>())
                                         : Rat(1);
        for (const json& name : term.at("path")) t.arrows.push_back(arrow_index(name.get<std::string>()));
        out.push_back(std::move(t));
      }
      relations.push_back(std::move(out));
    }
  }
  int budget = j.value("budget", Algebra::kDefaultBudget);
  return std::make_shared<Algebra>(std::move(vertices), std::move(arrows), std::move(relations),
                                   budget);
}

json algebra_to_json(const Algebra& a) {
  json j;
  j["vertices"] = a.vertex_labels();
  j["arrows"] = json::array();
  for (const Arrow& ar : a.arrows())
    j["arrows"].push_back({{"name", ar.name},
                           {"from", a.vertex_label(ar.src)},
                           {"to", a.vertex_label(ar.dst)}});
  j["relations"] = json::array();
  for (const Relation& rel : a.relations()) {
    json jr = json::array();
    for (const RelationTerm& t : rel) {
      json paths = json::array();
      for (int ar : t.arrows) paths.push_back(a.arrow(ar).name);
      jr.push_back({{"coeff", rat_to_string(t.coeff)}, {"path", paths}});
    }
    j["relations"].push_back(jr);
  }
  j["budget"] = a.budget();
  return j;
}

AlgebraPtr load_algebra_file(const std::string& path) { return algebra_from_json(parse_file(path)); }

Representation module_from_json(const json& j, const AlgebraPtr& alg) {
  require(j.is_object() && j.contains("dims"), Errc::invalid_input,
          "module literal needs a 'dims' object");
  std::vector<int> dims(alg->num_vertices(), 0);
  for (auto& [label, value] : j.at("dims").items())
    dims[alg->vertex_index(label)] = value.get<int>();
  std::vector<QMatrix> mats;
  for (int a = 0; a < alg->num_arrows(); ++a)
    mats.emplace_back(dims[alg->arrow(a).dst], dims[alg->arrow(a).src]);
  if (j.contains("arrows")) {
    for (auto& [name, rows] : j.at("arrows").items()) {
      int a = alg->arrow_index(name);
      QMatrix& m = mats[a];
      require(int(rows.size()) == m.rows(), Errc::invalid_input,
              "matrix for arrow '" + name + "' has the wrong number of rows");
      for (int r = 0; r < m.rows(); ++r) {
        require(int(rows[r].size()) == m.cols(), Errc::invalid_input,
                "matrix for arrow '" + name + "' has the wrong number of columns");
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = parse_rational(rows[r][c].get<std::string>());
      }
    }
  }
  return Representation(alg, std::move(dims), std::move(mats));
}

json module_to_json(const Representation& r) {
  const Algebra& a = r.algebra();
  json dims = json::object();
  for (int v = 0; v < a.num_vertices(); ++v) dims[a.vertex_label(v)] = r.dim(v);
  json arrows = json::object();
  for (int ar = 0; ar < a.num_arrows(); ++ar) {
    const QMatrix& m = r.arrow_mat(ar);
    if (m.rows() == 0 || m.cols() == 0) continue;
    json rows = json::array();
    for (int rr = 0; rr < m.rows(); ++rr) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(rr, c)));
      rows.push_back(row);
    }
    arrows[a.arrow(ar).name] = rows;
  }
  return json{{"dims", dims}, {"arrows", arrows}};
}

Representation load_module_file(const std::string& path, const AlgebraPtr& alg) {
  return module_from_json(parse_file(path), alg);
}

json census_to_json(const Census& c) {
  json j;
  j["algebra"] = algebra_to_json(c.algebra());
  j["count"] = c.size();
  j["complete"] = c.complete();
  json list = json::array();
  for (int i = 0; i < c.size(); ++i) {
    json e;
    e["id"] = i;
    e["name"] = c.name(i);
    e["total_dim"] = c.rep(i).total_dim();
    json dims = json::object();
    for (int v = 0; v < c.algebra().num_vertices(); ++v)
      dims[c.algebra().vertex_label(v)] = c.rep(i).dim(v);
    e["dims"] = dims;
    e["module"] = module_to_json(c.rep(i));
    e["brick"] = c.is_brick_id(i);
    list.push_back(std::move(e));
  }
  j["indecomposables"] = std::move(list);
  return j;
}

std::string census_to_markdown(const Census& c) {
  std::ostringstream os;
  os << "| id | name | dims |";
  for (int v = 0; v < c.algebra().num_vertices(); ++v) os << " " << c.algebra().vertex_label(v) << " |";
  os << " brick |\n|---|---|---|";
  for (int v = 0; v < c.algebra().num_vertices(); ++v) os << "---|";
  os << "---|\n";
  for (int i = 0; i < c.size(); ++i) {
    os << "| " << i << " | " << c.name(i) << " | " << c.rep(i).total_dim() << " |";
    for (int v = 0; v < c.algebra().num_vertices(); ++v) os << " " << c.rep(i).dim(v) << " |";
    os << " " << (c.is_brick_id(i) ? "yes" : "no") << " |\n";
  }
  return os.str();
}

json subcats_to_json(const std::vector<SubcatSet>& sets) {
  json j = json::array();
  for (const SubcatSet& s : sets) {
    json names = json::array();
    for (int id : s.ids) names.push_back(s.census->name(id));
    j.push_back({{"ids", s.ids}, {"members", names}, {"display", subcat_to_string(s)}});
  }
  return j;
}

std::string subcats_to_markdown(const std::vector<SubcatSet>& sets) {
  std::ostringstream os;
  for (const SubcatSet& s : sets) os << "- " << subcat_to_string(s) << "\n";
  return os.str();
}

json bricksets_to_json(const std::vector<BrickSet>& sets) {
  json j = json::array();
  for (const BrickSet& s : sets) {
    json names = json::array();
    for (int id : s.ids) names.push_back(s.census->name(id));
    j.push_back({{"ids", s.ids}, {"members", names}, {"display", brickset_to_string(s)}});
  }
  return j;
}

std::string bricksets_to_markdown(const std::vector<BrickSet>& sets) {
  std::ostringstream os;
  for (const BrickSet& s : sets) os << "- " << brickset_to_string(s) << "\n";
  return os.str();
}

json growth_to_json(const GrowthReport& g) {
  return json{{"kind", g.kind == GrowthKind::ice ? "ice" : "ebrick"},
              {"n", g.n},
              {"m", g.m},
              {"images", g.images},
              {"images_distinct", g.images_distinct},
              {"bound_m_ge_2n", g.bound_holds}};
}

std::string growth_to_markdown(const GrowthReport& g) {
  std::ostringstream os;
  os << (g.kind == GrowthKind::ice ? "ICE-closed subcategories" : "epibricks") << ": n = " << g.n
     << " over the base, m = " << g.m << " over the extension, " << g.images
     << " pairwise distinct theorem images"
     << (g.images_distinct ? " (= 2n)" : " (!= 2n)") << ", m >= 2n "
     << (g.bound_holds ? "holds" : "FAILS") << "\n";
  return os.str();
}

json wtau_rows_to_json(const OpextContext& ctx, const std::vector<WTauRow>& rows) {
  const Census& ca = *ctx.census_a();
  const Census& cb = *ctx.census_b();
  auto names_a = [&](const std::vector<int>& ids) {
    json out = json::array();
    for (int id : ids) out.push_back(ca.name(id));
    return out;
  };
  auto names_b = [&](const std::vector<int>& ids) {
    json out = json::array();
    for (int id : ids) out.push_back(cb.name(id));
    return out;
  };
  json j = json::array();
  for (const WTauRow& r : rows) {
    j.push_back({{"wtau_a", names_a(r.wtau_a)},
                 {"ice_a", names_a(r.ice_a.ids)},
                 {"ebrick_a", names_a(r.ebrick_a.ids)},
                 {"ice_b", names_b(r.ice_b.ids)},
                 {"ebrick_b", names_b(r.ebrick_b.ids)},
                 {"filt_b", names_b(r.filt_b.ids)},
                 {"wtau_b", names_b(r.wtau_b_route1)},
                 {"wtau_b_route2", names_b(r.wtau_b_route2)}});
  }
  return j;
}

std::string wtau_rows_to_markdown(const OpextContext& ctx, const std::vector<WTauRow>& rows) {
  const Census& ca = *ctx.census_a();
  const Census& cb = *ctx.census_b();
  std::ostringstream os;
  os << "| w tau-tilt A | ice A | ice B | w tau-tilt B |\n|---|---|---|---|\n";
  for (const WTauRow& r : rows) {
    os << "| " << ca.display_sum(r.wtau_a) << " | " << subcat_to_string(r.ice_a) << " | "
       << subcat_to_string(r.ice_b) << " | " << cb.display_sum(r.wtau_b_route1) << " |\n";
  }
  os << "\n| w tau-tilt A | ebrick A | ebrick B | w tau-tilt B |\n|---|---|---|---|\n";
  for (const WTauRow& r : rows) {
    os << "| " << ca.display_sum(r.wtau_a) << " | " << brickset_to_string(r.ebrick_a) << " | "
       << brickset_to_string(r.ebrick_b) << " | " << cb.display_sum(r.wtau_b_route2) << " |\n";
  }
  return os.str();
}

}  // namespace qice
