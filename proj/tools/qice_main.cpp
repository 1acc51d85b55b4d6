// qice: exact computations with finite-dimensional quiver algebras --
// censuses of indecomposables, ICE-closed subcategories, brick sets,
// one-point extensions and the wide tau-tilting pipeline.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "qice/error.hpp"
#include "qice/golden.hpp"
#include "qice/io.hpp"
#include "qice/wtau.hpp"

namespace {

using namespace qice;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFile = 3;
constexpr int kExitCompute = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::invalid_input:
    case Errc::unknown_vertex:
    case Errc::unknown_arrow:
    case Errc::non_parallel_relation:
      return kExitFile;
    default:
      return kExitCompute;
  }
}

struct CommonOpts {
  std::string algebra_file;
  std::string builtin;
  std::string format = "md";
  int jobs = 1;
  int grid = 1;
};

AlgebraPtr resolve_algebra(const CommonOpts& o) {
  if (!o.builtin.empty()) return golden::builtin_algebra(o.builtin);
  require(!o.algebra_file.empty(), Errc::invalid_input,
          "pass --algebra FILE or --builtin ID");
  return load_algebra_file(o.algebra_file);
}

struct ModuleOpts {
  std::string module_file;
  std::string projective_at;
  std::string simple_at;
};

Representation resolve_module(const ModuleOpts& o, const AlgebraPtr& alg) {
  int picks = int(!o.module_file.empty()) + int(!o.projective_at.empty()) +
              int(!o.simple_at.empty());
  require(picks == 1, Errc::invalid_input,
          "pass exactly one of --module, --projective, --simple");
  if (!o.module_file.empty()) return load_module_file(o.module_file, alg);
  if (!o.projective_at.empty()) return projective(alg, alg->vertex_index(o.projective_at));
  return simple(alg, alg->vertex_index(o.simple_at));
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_algebra = true) {
  if (with_algebra) {
    cmd->add_option("--algebra", o.algebra_file, "algebra document (JSON)");
    cmd->add_option("--builtin", o.builtin, "bundled algebra id (see 'qice builtin list')");
  }
  cmd->add_option("--format", o.format, "output format: md or json")
      ->check(CLI::IsMember({"md", "json"}));
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--grid", o.grid, "coefficient grid radius")->check(CLI::PositiveNumber);
}

const char* status_name(golden::Status s) {
  switch (s) {
    case golden::Status::pass: return "PASS";
    case golden::Status::warn: return "WARN";
    case golden::Status::fail: return "FAIL";
  }
  return "?";
}

int print_report(const golden::CaseReport& report, bool as_json) {
  if (as_json) {
    json j;
    j["case"] = report.id;
    j["status"] = status_name(report.overall());
    j["checks"] = json::array();
    for (const auto& l : report.lines)
      j["checks"].push_back(
          {{"name", l.name}, {"status", status_name(l.status)}, {"detail", l.detail}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "== " << report.id << " ==\n";
    for (const auto& l : report.lines) {
      std::cout << "  [" << status_name(l.status) << "] " << l.name;
      if (!l.detail.empty()) std::cout << " -- " << l.detail;
      std::cout << "\n";
    }
    std::cout << "  => " << status_name(report.overall()) << "\n";
  }
  return report.overall() == golden::Status::fail ? kExitMismatch : kExitOk;
}

int verify_against_paper(const std::string& list_id,
                         const std::vector<std::vector<std::string>>& computed) {
  const golden::PaperList* pl = golden::find_paper_list(list_id);
  require(pl != nullptr, Errc::invalid_input,
          "unknown reference list '" + list_id + "'; known: ex-3.2-1-A-ice ex-3.2-1-B-ice "
          "ex-3.2-2-A-ice ex-3.2-2-B-ice ex-3.7-A-ebrick ex-3.7-B-ebrick");
  golden::CaseReport report{list_id, golden::compare_with_paper(*pl, computed)};
  return print_report(report, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quiver-algebra computations: censuses, ICE-closed subcategories, "
               "brick sets, one-point extensions, wide tau-tilting tables"};
  app.require_subcommand(1);

  // census
  CommonOpts census_opts;
  std::string census_engine = "auto";
  int census_bound = -1;
  CLI::App* census_cmd = app.add_subcommand("census", "enumerate the indecomposable modules");
  add_common(census_cmd, census_opts);
  census_cmd->add_option("--engine", census_engine, "census engine")
      ->check(CLI::IsMember({"auto", "nakayama", "knit"}));
  census_cmd->add_option("--dim-bound", census_bound, "total dimension bound for knitting");

  // ice / ebrick / mbrick list
  CommonOpts ice_opts, ebrick_opts, mbrick_opts;
  std::string ice_verify, ebrick_verify, mbrick_verify;
  CLI::App* ice_cmd = app.add_subcommand("ice", "ICE-closed subcategories");
  CLI::App* ice_list = ice_cmd->add_subcommand("list", "enumerate ICE-closed subcategories");
  add_common(ice_list, ice_opts);
  ice_list->add_option("--verify-paper", ice_verify, "compare against a bundled reference list");
  CLI::App* ebrick_cmd = app.add_subcommand("ebrick", "epibricks");
  CLI::App* ebrick_list = ebrick_cmd->add_subcommand("list", "enumerate epibricks");
  add_common(ebrick_list, ebrick_opts);
  ebrick_list->add_option("--verify-paper", ebrick_verify,
                          "compare against a bundled reference list");
  CLI::App* mbrick_cmd = app.add_subcommand("mbrick", "monobricks");
  CLI::App* mbrick_list = mbrick_cmd->add_subcommand("list", "enumerate monobricks");
  add_common(mbrick_list, mbrick_opts);
  mbrick_list->add_option("--verify-paper", mbrick_verify,
                          "compare against a bundled reference list");

  // opext build / verify
  CommonOpts opext_opts;
  ModuleOpts opext_module;
  std::string opext_out;
  CLI::App* opext_cmd = app.add_subcommand("opext", "one-point extensions");
  CLI::App* opext_build = opext_cmd->add_subcommand("build", "emit the extension algebra");
  add_common(opext_build, opext_opts);
  opext_build->add_option("--module", opext_module.module_file, "extension module literal (JSON)");
  opext_build->add_option("--projective", opext_module.projective_at,
                          "use the projective at this vertex");
  opext_build->add_option("--simple", opext_module.simple_at, "use the simple at this vertex");
  opext_build->add_option("--out", opext_out, "output file (default stdout)");
  std::string opext_theorem, opext_example;
  int opext_jobs = 1;
  CLI::App* opext_verify = opext_cmd->add_subcommand("verify", "check the transfer constructions "
                                                               "against a bundled example");
  opext_verify->add_option("--theorem", opext_theorem, "3.1 (ICE transfer) or 3.5 (epibricks)")
      ->required()
      ->check(CLI::IsMember({"3.1", "3.5"}));
  opext_verify->add_option("--paper-example", opext_example, "ex-3.2-1, ex-3.2-2 or ex-3.7")
      ->required()
      ->check(CLI::IsMember({"ex-3.2-1", "ex-3.2-2", "ex-3.7"}));
  opext_verify->add_option("--jobs", opext_jobs, "worker threads")->check(CLI::PositiveNumber);

  // wtau table
  CommonOpts wtau_opts;
  ModuleOpts wtau_module;
  bool wtau_force = false;
  CLI::App* wtau_cmd = app.add_subcommand("wtau", "wide tau-tilting pipeline");
  CLI::App* wtau_table_cmd = wtau_cmd->add_subcommand("table", "both construction routes, tabled");
  add_common(wtau_table_cmd, wtau_opts);
  wtau_table_cmd->add_option("--module", wtau_module.module_file, "extension module literal");
  wtau_table_cmd->add_option("--projective", wtau_module.projective_at,
                             "use the projective at this vertex");
  wtau_table_cmd->add_option("--simple", wtau_module.simple_at, "use the simple at this vertex");
  wtau_table_cmd->add_flag("--force", wtau_force, "skip the Nakayama gate");

  // verify
  std::vector<std::string> verify_cases;
  int verify_jobs = 1;
  std::string verify_format = "text";
  CLI::App* verify_cmd = app.add_subcommand("verify", "run bundled reference cases");
  verify_cmd->add_option("cases", verify_cases, "case ids, or 'all'")->required();
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // builtin
  CLI::App* builtin_cmd = app.add_subcommand("builtin", "bundled algebras");
  CLI::App* builtin_list = builtin_cmd->add_subcommand("list", "list bundled algebra ids");
  std::string builtin_id;
  CLI::App* builtin_show = builtin_cmd->add_subcommand("show", "print a bundled algebra document");
  builtin_show->add_option("id", builtin_id, "algebra id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*census_cmd) {
      AlgebraPtr alg = resolve_algebra(census_opts);
      Census census = census_engine == "nakayama" ? Census::nakayama(alg)
                      : census_engine == "knit"
                          ? Census::knit(alg, census_bound)
                          : Census::build(alg);
      if (census_opts.format == "json")
        std::cout << census_to_json(census).dump(2) << "\n";
      else
        std::cout << census_to_markdown(census);
      return kExitOk;
    }

    auto algebra_for_list = [&](const CommonOpts& opts, const std::string& verify_id) {
      if (!verify_id.empty() && opts.algebra_file.empty() && opts.builtin.empty()) {
        const golden::PaperList* pl = golden::find_paper_list(verify_id);
        require(pl != nullptr, Errc::invalid_input, "unknown reference list '" + verify_id + "'");
        return golden::builtin_algebra(pl->algebra);
      }
      return resolve_algebra(opts);
    };

    if (*ice_list) {
      AlgebraPtr alg = algebra_for_list(ice_opts, ice_verify);
      auto census = std::make_shared<Census>(Census::build(alg));
      ClosureTables tables = ClosureTables::build(census, ice_opts.jobs, ice_opts.grid);
      std::vector<SubcatSet> sets = tables.enumerate_ice(ice_opts.jobs);
      if (!ice_verify.empty()) {
        std::vector<std::vector<std::string>> names;
        for (const SubcatSet& s : sets) {
          std::vector<std::string> one;
          for (int id : s.ids) one.push_back(census->name(id));
          names.push_back(std::move(one));
        }
        return verify_against_paper(ice_verify, names);
      }
      if (ice_opts.format == "json")
        std::cout << subcats_to_json(sets).dump(2) << "\n";
      else
        std::cout << subcats_to_markdown(sets);
      return kExitOk;
    }

    auto run_brick_list = [&](const CommonOpts& opts, const std::string& verify_id,
                              bool epi) -> int {
      AlgebraPtr alg = algebra_for_list(opts, verify_id);
      auto census = std::make_shared<Census>(Census::build(alg));
      BrickTables tables = BrickTables::build(census, opts.jobs, opts.grid);
      std::vector<BrickSet> sets = epi ? tables.enumerate_ebricks() : tables.enumerate_mbricks();
      if (!verify_id.empty()) {
        std::vector<std::vector<std::string>> names;
        for (const BrickSet& s : sets) {
          std::vector<std::string> one;
          for (int id : s.ids) one.push_back(census->name(id));
          names.push_back(std::move(one));
        }
        return verify_against_paper(verify_id, names);
      }
      if (opts.format == "json")
        std::cout << bricksets_to_json(sets).dump(2) << "\n";
      else
        std::cout << bricksets_to_markdown(sets);
      return kExitOk;
    };
    if (*ebrick_list) return run_brick_list(ebrick_opts, ebrick_verify, true);
    if (*mbrick_list) return run_brick_list(mbrick_opts, mbrick_verify, false);

    if (*opext_build) {
      AlgebraPtr alg = resolve_algebra(opext_opts);
      Representation m = resolve_module(opext_module, alg);
      OnePointExtension ope = one_point_extension(alg, m);
      json j = algebra_to_json(*ope.result);
      if (opext_out.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::ofstream out(opext_out);
        require(out.good(), Errc::invalid_input, "cannot write '" + opext_out + "'");
        out << j.dump(2) << "\n";
      }
      std::cerr << "new vertex: " << ope.result->vertex_label(ope.new_vertex)
                << "; arrows: " << ope.arrow_dictionary() << "\n";
      return kExitOk;
    }

    if (*opext_verify) {
      std::string case_id = opext_example;
      bool want_35 = opext_theorem == "3.5";
      require(want_35 == (opext_example == "ex-3.7"), Errc::invalid_input,
              "theorem 3.1 pairs with ex-3.2-1/ex-3.2-2; theorem 3.5 pairs with ex-3.7");
      return print_report(golden::run_case(case_id, opext_jobs), false);
    }

    if (*wtau_table_cmd) {
      AlgebraPtr alg = resolve_algebra(wtau_opts);
      Representation m = resolve_module(wtau_module, alg);
      OpextContext ctx(one_point_extension(alg, m), wtau_opts.jobs);
      std::vector<WTauRow> rows = wtau_table(ctx, wtau_force);
      if (wtau_opts.format == "json")
        std::cout << wtau_rows_to_json(ctx, rows).dump(2) << "\n";
      else
        std::cout << wtau_rows_to_markdown(ctx, rows);
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<std::string> ids = verify_cases;
      if (ids.size() == 1 && ids[0] == "all") ids = golden::case_ids();
      int rc = kExitOk;
      for (const std::string& id : ids) {
        int one = print_report(golden::run_case(id, verify_jobs), verify_format == "json");
        rc = std::max(rc, one);
      }
      return rc;
    }

    if (*builtin_list) {
      for (const std::string& id : golden::builtin_ids()) std::cout << id << "\n";
      return kExitOk;
    }
    if (*builtin_show) {
      std::cout << algebra_to_json(*golden::builtin_algebra(builtin_id)).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}
