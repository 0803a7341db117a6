#include "smithkit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace smithkit {

namespace {

// Tokens of a matrix file with comments removed; "[...]" groups stay whole.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool comment = false;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (comment) {
      if (ch == '\n') comment = false;
      continue;
    }
    if (ch == '#' && depth == 0) {
      flush();
      comment = true;
    } else if (ch == '[') {
      ++depth;
      cur += ch;
    } else if (ch == ']') {
      if (--depth < 0) throw ParseError("unbalanced ']'");
      cur += ch;
      if (depth == 0) flush();
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (depth == 0) flush();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '['");
  flush();
  return out;
}

std::size_t parse_dim(const std::string& t) {
  try {
    std::size_t used = 0;
    const long v = std::stol(t, &used);
    if (used == t.size() && v >= 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw ParseError("bad matrix dimension '" + t + "'");
}

template <class R, class Fn>
Matrix<R> parse_matrix(std::string_view text, Fn&& entry) {
  const auto tok = tokenize(text);
  if (tok.size() < 2) throw ParseError("matrix file needs a header 'm n'");
  const std::size_t m = parse_dim(tok[0]), n = parse_dim(tok[1]);
  if (tok.size() != 2 + m * n)
    throw ParseError("expected " + std::to_string(m * n) + " entries, found " + std::to_string(tok.size() - 2));
  Matrix<R> a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(tok[2 + i * n + j]);
  return a;
}

template <class R, class Fn>
std::string format_any(const Matrix<R>& a, Fn&& entry) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out += (j ? " " : "") + entry(a(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace

QPoly parse_qpoly(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (s.empty()) throw ParseError("empty polynomial literal");
  if (s.front() != '[') return QPoly(parse_rat(s));
  if (s.back() != ']') throw ParseError("polynomial literal must end with ']'");
  s = s.substr(1, s.size() - 2);
  std::vector<Rat> coeffs;
  if (!s.empty()) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = s.find(',', start);
      coeffs.push_back(parse_rat(s.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return QPoly(std::move(coeffs));
}

std::string format_qpoly(const QPoly& p) {
  std::string out = "[";
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + to_string(c[i]);
  return out + "]";
}

Matrix<BigInt> parse_int_matrix(std::string_view text) {
  return parse_matrix<BigInt>(text, [](const std::string& t) { return parse_bigint(t); });
}

Matrix<QPoly> parse_qpoly_matrix(std::string_view text) {
  return parse_matrix<QPoly>(text, [](const std::string& t) { return parse_qpoly(t); });
}

std::string format_matrix(const Matrix<BigInt>& a) {
  return format_any(a, [](const BigInt& v) { return to_string(v); });
}

std::string format_matrix(const Matrix<QPoly>& a) {
  return format_any(a, [](const QPoly& p) {
    auto s = format_qpoly(p);
    std::erase(s, ' ');
    return s;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace smithkit
