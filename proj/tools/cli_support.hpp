#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "smithkit/cyclotomic.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/multipoly.hpp"
#include "smithkit/partition.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit::cli {

using Json = nlohmann::ordered_json;

/// Options shared by every subcommand.
struct Common {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t budget_bits = 1'000'000;
  std::string out;
};

/// Thrown for bad flag combinations detected after parsing (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json to_json(const BigInt& v) { return v.get_str(); }
inline Json to_json(const Rat& v) { return v.get_str(); }

inline Json to_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, coef] : p.terms()) {
    Json vars = Json::object();
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) vars[p.vars()[i]] = exps[i];
    terms.push_back({{"vars", vars}, {"coef", coef.get_str()}});
  }
  return terms;
}

template <class T>
Json to_json(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

template <class R>
Json to_json(const Matrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline std::string factored(const QPoly& p, std::string_view var = "q") {
  if (p.is_zero()) return "0";
  return factored_string(cyclotomic_factor(p), var);
}

inline std::string join(const std::vector<BigInt>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

template <class T, class Fn>
std::string join_with(const std::vector<T>& v, Fn&& fn, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + fn(v[i]);
  return s;
}

/// Renames variables; bindings for variables absent from p are ignored.
inline MultiPoly rename(const MultiPoly& p, const std::map<std::string, MultiPoly>& names) {
  std::map<std::string, MultiPoly> used;
  for (const auto& v : p.vars())
    if (auto it = names.find(v); it != names.end()) used.insert(*it);
  return used.empty() ? p : substitute(p, used);
}

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

/// Writes either the JSON report or the text rendering.
inline void emit(const Common& c, const Json& report, const std::string& text) {
  const std::string body = c.json ? report.dump(2) + "\n" : text;
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << body;
}

}  // namespace smithkit::cli
