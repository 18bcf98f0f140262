#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liekms/lie_algebra.hpp"

namespace liekms {

/// Structure-constant interchange format:
///   { "name": str, "dim": int, "basis": [str],
///     "brackets": [ {"i": int, "j": int, "coeffs": [[k, "p/q"], ...]} ] }
/// Indices are 0-based, only i < j entries appear, coefficients are exact
/// rational strings. Serialization is canonical (keys sorted, brackets in
/// (i, j) order, coeffs by k), so export is byte-reproducible.
inline nlohmann::json algebra_to_json(const LieAlgebra& a) {
  nlohmann::json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = a.basis_labels();
  nlohmann::json brackets = nlohmann::json::array();
  for (const auto& [key, vec] : a.brackets()) {
    if (vec.empty()) continue;
    nlohmann::json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [k, c] : vec) coeffs.push_back(nlohmann::json::array({k, c.str()}));
    entry["coeffs"] = coeffs;
    brackets.push_back(entry);
  }
  j["brackets"] = brackets;
  return j;
}

inline AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  if (!j.contains("name") || !j.contains("dim") || !j.contains("basis") || !j.contains("brackets"))
    throw std::invalid_argument("algebra_from_json: missing required field");
  std::string name = j.at("name").get<std::string>();
  int dim = j.at("dim").get<int>();
  std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
  if (static_cast<int>(basis.size()) != dim)
    throw std::invalid_argument("algebra_from_json: basis length does not match dim");
  std::map<std::pair<int, int>, LieAlgebra::SparseVec> brackets;
  for (const auto& entry : j.at("brackets")) {
    int i = entry.at("i").get<int>();
    int jj = entry.at("j").get<int>();
    if (i >= jj) throw std::invalid_argument("algebra_from_json: only i < j bracket entries are permitted");
    LieAlgebra::SparseVec vec;
    for (const auto& pair : entry.at("coeffs")) {
      int k = pair.at(0).get<int>();
      Rational c = Rational::parse(pair.at(1).get<std::string>());
      if (!c.is_zero()) vec.emplace_back(k, c);
    }
    std::sort(vec.begin(), vec.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    if (!vec.empty()) {
      if (brackets.count({i, jj}))
        throw std::invalid_argument("algebra_from_json: duplicate bracket entry");
      brackets[{i, jj}] = std::move(vec);
    }
  }
  return std::make_shared<LieAlgebra>(std::move(name), std::move(basis), std::move(brackets));
}

inline std::string algebra_to_json_string(const LieAlgebra& a) { return algebra_to_json(a).dump(2) + "\n"; }

inline AlgebraPtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_algebra_file: cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  return algebra_from_json(j);
}

inline void save_algebra_file(const LieAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("save_algebra_file: cannot open '" + path + "'");
  out << algebra_to_json_string(a);
}

}  // namespace liekms
