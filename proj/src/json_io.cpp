#include "qfid/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace qfid {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& context) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          ErrorCode::ParseError, context + ": complex scalar must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::IoError, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& context) {
  require(j.is_array() && !j.empty(), ErrorCode::ParseError,
          context + ": matrix must be a nonempty array of rows");
  Index rows = static_cast<Index>(j.size());
  require(j[0].is_array() && !j[0].empty(), ErrorCode::ParseError,
          context + ": matrix rows must be nonempty arrays");
  Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    require(j[r].is_array() && static_cast<Index>(j[r].size()) == cols, ErrorCode::ParseError,
            context + ": row " + std::to_string(r) + " has inconsistent length");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c], context + "[" + std::to_string(r) + "][" +
                                               std::to_string(c) + "]");
  }
  return m;
}

json density_to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"entries", matrix_to_json(rho.matrix())}};
}

DensityMatrix density_from_json(const json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("entries"), ErrorCode::ParseError,
          "density matrix object needs fields 'dim' and 'entries'");
  Matrix m = matrix_from_json(j["entries"], "entries");
  require(j["dim"].is_number_integer() && j["dim"].get<Index>() == m.rows(),
          ErrorCode::ParseError, "field 'dim' does not match the entries shape");
  return DensityMatrix(std::move(m));
}

json povm_to_json(const Povm& povm) {
  json effects = json::array();
  for (const Matrix& e : povm.effects()) effects.push_back(matrix_to_json(e));
  return json{{"dim", povm.dim()}, {"effects", std::move(effects)}};
}

Povm povm_from_json(const json& j) {
  require(j.is_object() && j.contains("effects") && j["effects"].is_array(),
          ErrorCode::ParseError, "POVM object needs an 'effects' array");
  std::vector<Matrix> effects;
  for (std::size_t i = 0; i < j["effects"].size(); ++i)
    effects.push_back(matrix_from_json(j["effects"][i], "effects[" + std::to_string(i) + "]"));
  return Povm(std::move(effects));
}

json channel_to_json(const KrausChannel& ch) {
  json kraus = json::array();
  for (const Matrix& e : ch.kraus_ops()) kraus.push_back(matrix_to_json(e));
  return json{{"dim", ch.dim()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const json& j) {
  require(j.is_object() && j.contains("kraus") && j["kraus"].is_array(), ErrorCode::ParseError,
          "channel object needs a 'kraus' array");
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < j["kraus"].size(); ++i)
    ops.push_back(matrix_from_json(j["kraus"][i], "kraus[" + std::to_string(i) + "]"));
  return KrausChannel(std::move(ops));
}

json report_to_json(const FidelityReport& r) {
  return json{{"fidelity", r.fidelity},
              {"bures_angle", r.bures_angle},
              {"trace_distance", r.trace_distance},
              {"lower_bound_ok", r.lower_bound_ok},
              {"upper_bound_ok", r.upper_bound_ok}};
}

DensityMatrix density_from_file(const std::string& path) {
  try {
    return density_from_json(load_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError)
      throw Error(ErrorCode::ParseError, path + ": " + e.what());
    throw;
  }
}

KrausChannel channel_from_file(const std::string& path) {
  try {
    return channel_from_json(load_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError)
      throw Error(ErrorCode::ParseError, path + ": " + e.what());
    throw;
  }
}

Povm povm_from_file(const std::string& path) {
  try {
    return povm_from_json(load_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError)
      throw Error(ErrorCode::ParseError, path + ": " + e.what());
    throw;
  }
}

}  // namespace qfid
