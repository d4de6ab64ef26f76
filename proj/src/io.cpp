#include "gmecrit/io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace gmecrit {

namespace {

using nlohmann::json;

[[noreturn]] void reject(const std::string& why) {
  throw std::runtime_error("state file rejected: " + why);
}

}  // namespace

DensityMatrix load_state(std::istream& in, double tol) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    reject(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    reject("document must be an object with 'dims' and 'matrix'");
  }
  if (!doc["dims"].is_array() || doc["dims"].empty()) {
    reject("'dims' must be a non-empty array of integers");
  }

  std::vector<int> dims;
  for (const auto& entry : doc["dims"]) {
    if (!entry.is_number_integer()) {
      reject("'dims' must be a non-empty array of integers");
    }
    dims.push_back(entry.get<int>());
  }
  SystemDims sys_dims;
  try {
    sys_dims = SystemDims(std::move(dims));
  } catch (const std::invalid_argument& e) {
    reject(e.what());
  }

  const long D = sys_dims.total();
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<long>(rows.size()) != D) {
    reject("'matrix' must hold " + std::to_string(D) + " rows");
  }
  Matrix M(D, D);
  for (long r = 0; r < D; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long>(row.size()) != D) {
      reject("matrix row " + std::to_string(r) + " must hold " +
             std::to_string(D) + " entries");
    }
    for (long c = 0; c < D; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        reject("matrix entry (" + std::to_string(r) + ", " +
               std::to_string(c) + ") must be a [re, im] pair");
      }
      M(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }

  DensityMatrix rho{std::move(sys_dims), std::move(M)};
  const auto violations = validate(rho, tol);
  if (!violations.empty()) {
    std::string why;
    for (const auto& v : violations) {
      if (!why.empty()) why += "; ";
      why += v.detail;
    }
    reject(why);
  }
  return rho;
}

DensityMatrix load_state_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open state file: " + path);
  }
  return load_state(in, tol);
}

void save_state(const DensityMatrix& rho, std::ostream& out) {
  const long D = rho.dims.total();
  if (rho.matrix.rows() != D || rho.matrix.cols() != D) {
    throw std::invalid_argument("density matrix shape does not match dims");
  }
  json doc;
  doc["dims"] = rho.dims.dims;
  json rows = json::array();
  for (long r = 0; r < D; ++r) {
    json row = json::array();
    for (long c = 0; c < D; ++c) {
      row.push_back({rho.matrix(r, c).real(), rho.matrix(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void save_state_file(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  save_state(rho, out);
}

}  // namespace gmecrit
