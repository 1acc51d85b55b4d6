#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qice/bricks.hpp"
#include "qice/opext.hpp"
#include "qice/subcat.hpp"
#include "qice/wtau.hpp"

namespace qice {

// Algebra documents:
//   { "vertices": ["1","2"], "arrows": [{"name":"a","from":"1","to":"2"}],
//     "relations": [[{"coeff":"1","path":["a","b"]}]], "budget": 64 }
// Module literals:
//   { "dims": {"1": 1, "2": 1}, "arrows": {"a": [["1"]]} }
// Matrix entries are rational strings "p/q"; missing arrows mean zero maps.

AlgebraPtr algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);
AlgebraPtr load_algebra_file(const std::string& path);

Representation module_from_json(const nlohmann::json& j, const AlgebraPtr& alg);
nlohmann::json module_to_json(const Representation& r);
Representation load_module_file(const std::string& path, const AlgebraPtr& alg);

nlohmann::json census_to_json(const Census& c);
std::string census_to_markdown(const Census& c);

nlohmann::json subcats_to_json(const std::vector<SubcatSet>& sets);
std::string subcats_to_markdown(const std::vector<SubcatSet>& sets);

nlohmann::json bricksets_to_json(const std::vector<BrickSet>& sets);
std::string bricksets_to_markdown(const std::vector<BrickSet>& sets);

nlohmann::json growth_to_json(const GrowthReport& g);
std::string growth_to_markdown(const GrowthReport& g);

nlohmann::json wtau_rows_to_json(const OpextContext& ctx, const std::vector<WTauRow>& rows);
std::string wtau_rows_to_markdown(const OpextContext& ctx, const std::vector<WTauRow>& rows);

}  // namespace qice
