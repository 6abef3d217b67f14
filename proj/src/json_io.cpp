#include "xprod/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace xprod {

json scalar_to_json(const Field& f, const Scalar& s) {
  if (f.is_rational()) return f.to_string(s);
  return json(s.get_num().get_si());
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_long(j.get<long>());
  fail(errc::io_error, "scalar must be a string or an integer");
}

json field_to_json(const Field& f) { return json{{"char", f.characteristic()}}; }

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("char")) fail(errc::io_error, "field must be {\"char\": n}");
  return Field(j.at("char").get<unsigned long>());
}

namespace {

json matrix_rows_to_json(const Field& f, const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(f, m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_rows_from_json(const Field& f, const json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) fail(errc::io_error, std::string(what) + ": wrong row count");
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(errc::io_error, std::string(what) + ": wrong column count");
    for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, row.at(c));
  }
  return m;
}

json vector_to_json(const Field& f, const Matrix& column) {
  json out = json::array();
  for (int r = 0; r < column.rows(); ++r) out.push_back(scalar_to_json(f, column.at(r, 0)));
  return out;
}

Matrix vector_from_json(const Field& f, const json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) fail(errc::io_error, std::string(what) + ": wrong length");
  Matrix m(f, dim, 1);
  for (int r = 0; r < dim; ++r) m.at(r, 0) = scalar_from_json(f, j.at(r));
  return m;
}

}  // namespace

json algebra_to_json(const Algebra& a) {
  json j;
  j["field"] = field_to_json(a.field);
  j["dim"] = a.dim;
  j["basis"] = a.basis_names;
  j["unit"] = vector_to_json(a.field, a.unit);
  json mult = json::array();
  for (const auto& e : a.mult) {
    if (sgn(e.c) == 0) continue;
    mult.push_back(json::array({e.i, e.j, e.k, scalar_to_json(a.field, e.c)}));
  }
  j["mult"] = std::move(mult);
  return j;
}

AlgebraPtr algebra_from_json(const json& j) {
  if (!j.is_object()) fail(errc::io_error, "algebra: expected an object");
  Field f = field_from_json(j.at("field"));
  int dim = j.at("dim").get<int>();
  if (dim <= 0) fail(errc::io_error, "algebra: dim must be positive");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    names = j.at("basis").get<std::vector<std::string>>();
  } else {
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  }
  Matrix unit = vector_from_json(f, j.at("unit"), dim, "unit");
  std::vector<MultEntry> mult;
  for (const auto& e : j.at("mult")) {
    if (!e.is_array() || e.size() != 4) fail(errc::io_error, "mult entries are [i,j,k,c]");
    mult.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), scalar_from_json(f, e.at(3))});
  }
  return std::make_shared<Algebra>(Algebra::assemble(f, dim, std::move(names), std::move(unit), std::move(mult)));
}

json hopf_to_json(const HopfAlgebra& h) {
  json j = algebra_to_json(*h.alg);
  json comul = json::array();
  for (const auto& e : h.comul) {
    if (sgn(e.c) == 0) continue;
    comul.push_back(json::array({e.i, e.j, e.k, scalar_to_json(h.field(), e.c)}));
  }
  j["comul"] = std::move(comul);
  j["counit"] = vector_to_json(h.field(), h.counit.transpose());
  j["antipode"] = matrix_rows_to_json(h.field(), h.antipode);
  return j;
}

HopfPtr hopf_from_json(const json& j) {
  AlgebraPtr alg = algebra_from_json(j);
  HopfAlgebra h;
  h.alg = alg;
  const Field& f = alg->field;
  for (const auto& e : j.at("comul")) {
    if (!e.is_array() || e.size() != 4) fail(errc::io_error, "comul entries are [i,j,k,c]");
    h.comul.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), scalar_from_json(f, e.at(3))});
  }
  h.counit = vector_from_json(f, j.at("counit"), alg->dim, "counit").transpose();
  h.antipode = matrix_rows_from_json(f, j.at("antipode"), alg->dim, alg->dim, "antipode");
  return std::make_shared<HopfAlgebra>(std::move(h));
}

json module_to_json(const AModule& m) {
  json j;
  j["algebra"] = algebra_to_json(*m.alg);
  j["dim"] = m.dim;
  json action = json::array();
  for (const auto& mat : m.action) action.push_back(matrix_rows_to_json(m.alg->field, mat));
  j["action"] = std::move(action);
  return j;
}

namespace {

json resolve_ref(const json& j, const std::string& base_dir) {
  if (!j.is_string()) return j;
  std::filesystem::path p = j.get<std::string>();
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return load_json_file(p.string());
}

}  // namespace

AModule module_from_json(const json& j, const std::string& base_dir) {
  AlgebraPtr alg = algebra_from_json(resolve_ref(j.at("algebra"), base_dir));
  int dim = j.at("dim").get<int>();
  AModule m{alg, dim, {}};
  const json& action = j.at("action");
  if (!action.is_array() || static_cast<int>(action.size()) != alg->dim)
    fail(errc::io_error, "module: one action matrix per algebra basis element");
  for (int i = 0; i < alg->dim; ++i)
    m.action.push_back(matrix_rows_from_json(alg->field, action.at(i), dim, dim, "module action"));
  return m;
}

json system_to_json(const CrossedSystem& s) {
  json j;
  j["R"] = algebra_to_json(s.R());
  j["H"] = hopf_to_json(s.H());
  const Field& f = s.R().field;
  json action = json::array();
  for (const auto& e : s.action.entries) {
    if (sgn(e.c) == 0) continue;
    action.push_back(json::array({e.h, e.r, e.rp, scalar_to_json(f, e.c)}));
  }
  j["action"] = std::move(action);
  json sigma = json::array();
  const int dh = s.H().dim();
  for (int h = 0; h < dh; ++h)
    for (int g = 0; g < dh; ++g)
      for (int r = 0; r < s.R().dim; ++r) {
        const Scalar& c = s.sigma.at(r, h * dh + g);
        if (sgn(c) == 0) continue;
        sigma.push_back(json::array({h, g, r, scalar_to_json(f, c)}));
      }
  j["sigma"] = std::move(sigma);
  return j;
}

CrossedSystem system_from_json(const json& j, const std::string& base_dir) {
  AlgebraPtr r = algebra_from_json(resolve_ref(j.at("R"), base_dir));
  HopfPtr h = hopf_from_json(resolve_ref(j.at("H"), base_dir));
  auto vh = validate_hopf(*h);
  if (!vh) fail(errc::malformed_hopf, vh.violation + " (" + vh.detail + ")");
  const Field& f = r->field;
  if (f != h->field()) fail(errc::io_error, "R and H live over different fields");

  std::vector<ActEntry> act;
  for (const auto& e : j.at("action")) {
    if (!e.is_array() || e.size() != 4) fail(errc::io_error, "action entries are [h,r,r',c]");
    act.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), scalar_from_json(f, e.at(3))});
  }
  std::vector<CocEntry> sigma;
  for (const auto& e : j.at("sigma")) {
    if (!e.is_array() || e.size() != 4) fail(errc::io_error, "sigma entries are [h,g,r,c]");
    sigma.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), scalar_from_json(f, e.at(3))});
  }
  return build_crossed(MeasuringAction::assemble(h, r, std::move(act)), sigma);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(errc::io_error, path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

JsonKind sniff_kind(const json& j) {
  if (!j.is_object()) return JsonKind::unknown;
  if (j.contains("R") && j.contains("H")) return JsonKind::system;
  if (j.contains("algebra") && j.contains("action")) return JsonKind::module;
  if (j.contains("comul")) return JsonKind::hopf;
  if (j.contains("mult")) return JsonKind::algebra;
  return JsonKind::unknown;
}

}  // namespace xprod
