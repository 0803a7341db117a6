#include "smithkit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace smithkit {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("partition with a negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  for (int p : parts_) size_ += p;
}

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

int Partition::rank() const {
  int r = 0;
  while (r < length() && parts_[r] >= r + 1) ++r;
  return r;
}

Partition Partition::conjugate() const {
  std::vector<int> c(empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

int Partition::hook_length(int i, int j) const {
  if (!contains(i, j)) throw std::out_of_range("hook_length: cell outside the diagram");
  int below = 0;
  while (contains(i + below + 1, j)) ++below;
  return row(i) - j + below + 1;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '(' || text[i] == ')' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || v < 0) throw ParseError("bad partition '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    parts.push_back(v);
    skip();
  }
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (parts[k] > parts[k - 1]) throw ParseError("partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return p[n];
}

BigInt f_lambda(const Partition& p) {
  BigInt num = factorial(static_cast<unsigned long>(p.size())), den = 1;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j) den *= p.hook_length(i, j);
  return num / den;
}

}  // namespace smithkit
