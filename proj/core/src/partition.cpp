#include "betalag/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace betalag {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      throw std::invalid_argument("not weakly decreasing nonnegative: " + str());
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
  }
  return Partition(std::move(conj));
}

long Partition::b_stat() const {
  long b = 0;
  for (size_t i = 0; i < parts_.size(); ++i) b += static_cast<long>(i) * parts_[i];
  return b;
}

std::optional<Partition> Partition::lower(int row) const {
  if (row < 1 || row > length()) return std::nullopt;
  std::vector<int> p = parts_;
  p[static_cast<size_t>(row - 1)] -= 1;
  if (p[static_cast<size_t>(row - 1)] < part(row)) return std::nullopt;
  return Partition(std::move(p));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

bool Partition::dominates(const Partition& mu) const {
  int n = std::max(length(), mu.length());
  long a = 0, b = 0;
  for (int i = 0; i < n; ++i) {
    a += part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool operator<(const Partition& a, const Partition& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  // reverse-lexicographic within a weight: lex-larger first
  return a.parts_ > b.parts_;
}

namespace {
void enum_rec(const Partition& lmax, int n_vars, int row, int cap,
              std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (row >= n_vars) return;
  int hi = std::min(cap, lmax.part(row));
  for (int v = 1; v <= hi; ++v) {
    cur.push_back(v);
    enum_rec(lmax, n_vars, row + 1, v, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_contained(const Partition& lmax, int n_vars) {
  // partitions longer than n_vars are filtered, not rejected
  std::vector<Partition> out;
  std::vector<int> cur;
  enum_rec(lmax, n_vars, 0, lmax.part(0), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
void parts_rec(int remaining, int max_len, int cap, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int v = std::min(cap, remaining); v >= 1; --v) {
    cur.push_back(v);
    parts_rec(remaining - v, max_len - 1, v, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int weight, int max_len, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  int cap = max_part < 0 ? weight : max_part;
  parts_rec(weight, max_len, cap, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace betalag
