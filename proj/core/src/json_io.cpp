#include "tlforge/json_io.hpp"

#include <cmath>
#include <fstream>

namespace tlforge {

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw std::invalid_argument("matrix json: need rows, cols, data");
  const auto rows = j.at("rows").get<Index>();
  const auto cols = j.at("cols").get<Index>();
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix json: dimensions must be positive");
  const auto& data = j.at("data");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols)
    throw std::invalid_argument("matrix json: data length does not match rows*cols");
  Matrix m(rows, cols);
  Index idx = 0;
  for (Index i = 0; i < rows; ++i)
    for (Index jj = 0; jj < cols; ++jj, ++idx) {
      const auto& e = data.at(static_cast<std::size_t>(idx));
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number())
        throw std::invalid_argument("matrix json: entries must be [re, im] pairs");
      const double re = e.at(0).get<double>();
      const double im = e.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw std::invalid_argument("matrix json: entries must be finite");
      m(i, jj) = Complex(re, im);
    }
  return m;
}

Json vsystem_to_json(const VSystem& vs) {
  Json mats = Json::array();
  for (const auto& m : vs.mats) mats.push_back(matrix_to_json(m));
  return Json{{"n", vs.n}, {"r", vs.r()}, {"mats", std::move(mats)}};
}

VSystem vsystem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("mats"))
    throw std::invalid_argument("vsystem json: need n, r, mats");
  VSystem vs;
  vs.n = j.at("n").get<Index>();
  if (vs.n < 1) throw std::invalid_argument("vsystem json: n must be positive");
  const auto& mats = j.at("mats");
  if (!mats.is_array() || mats.empty())
    throw std::invalid_argument("vsystem json: mats must be a nonempty array");
  if (j.at("r").get<Index>() != static_cast<Index>(mats.size()))
    throw std::invalid_argument("vsystem json: r does not match mats length");
  for (const auto& mj : mats) {
    Matrix m = matrix_from_json(mj);
    if (m.rows() != vs.n || m.cols() != vs.n)
      throw std::invalid_argument("vsystem json: matrices must be n x n");
    vs.mats.push_back(std::move(m));
  }
  return vs;
}

Json report_to_json(const Report& rep) {
  Json out = Json::array();
  for (const auto& c : rep.checks)
    out.push_back({{"relation", c.relation}, {"residual", c.residual}, {"pass", c.pass}});
  return out;
}

Json class_report_to_json(const ClassReport& rep) {
  Json j{{"n", rep.n},
         {"r", rep.r},
         {"Q", rep.Q},
         {"class", solution_class_name(rep.solution_class)},
         {"s_integral", rep.s_integral},
         {"q2_exists", rep.q2_exists},
         {"conjecture_ok", rep.conjecture_ok},
         {"conjecture_status", "CONJECTURAL"},
         {"notes", rep.notes}};
  if (rep.s_integral) j["s"] = rep.s;
  if (rep.q2_divisor) j["q2_divisor"] = *rep.q2_divisor;
  return j;
}

Json family_to_json(const FamilyInstance& inst) {
  return Json{{"family", family_name(inst.family)},
              {"n", inst.n()},
              {"r", inst.r()},
              {"Q", inst.Q},
              {"params", inst.params},
              {"vsystem", vsystem_to_json(inst.vs)}};
}

FamilyInstance family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vsystem") || !j.contains("Q"))
    throw std::invalid_argument("family json: need vsystem and Q");
  FamilyInstance inst;
  inst.vs = vsystem_from_json(j.at("vsystem"));
  inst.Q = j.at("Q").get<double>();
  if (!(inst.Q > 0.0)) throw std::invalid_argument("family json: Q must be positive");
  if (j.contains("family")) {
    const auto f = family_from_name(j.at("family").get<std::string>());
    if (!f) throw std::invalid_argument("family json: unknown family name");
    inst.family = *f;
  } else {
    inst.family = Family::Composite;
  }
  if (j.contains("params"))
    inst.params = j.at("params").get<std::map<std::string, std::string>>();
  return inst;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace tlforge
