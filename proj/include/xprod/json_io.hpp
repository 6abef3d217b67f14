#pragma once

#include <json.hpp>

#include "xprod/crossed.hpp"

namespace xprod {

using nlohmann::json;

// Scalars serialize as "num/den" strings over the rationals and as plain
// integers over GF(p); both forms are accepted on input.
json scalar_to_json(const Field& f, const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const json& j);

json hopf_to_json(const HopfAlgebra& h);
HopfPtr hopf_from_json(const json& j);

json module_to_json(const AModule& m);
AModule module_from_json(const json& j, const std::string& base_dir = "");

json system_to_json(const CrossedSystem& s);
// "R" and "H" may be inline objects or path strings relative to base_dir
CrossedSystem system_from_json(const json& j, const std::string& base_dir = "");

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

enum class JsonKind { algebra, hopf, module, system, unknown };
JsonKind sniff_kind(const json& j);

}  // namespace xprod
