#pragma once

// Brute-force reference computations for tests. Nothing here calls the
// library's graph or verification code: adjacency is decided by comparing
// Hamming distances of every pair of words.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Word = std::uint64_t;
using Matrix = std::vector<std::vector<std::int64_t>>;

enum class Kind { Full, Even, Odd };

inline int weight(Word w) { return __builtin_popcountll(w); }

inline std::vector<Word> vertices(Kind kind, int n) {
  std::vector<Word> out;
  for (Word w = 0; w < (Word{1} << n); ++w) {
    if (kind == Kind::Even && weight(w) % 2 != 0) continue;
    if (kind == Kind::Odd && weight(w) % 2 != 1) continue;
    out.push_back(w);
  }
  return out;
}

inline int graph_distance(Kind kind, Word u, Word v) {
  const int h = weight(u ^ v);
  return kind == Kind::Full ? h : h / 2;
}

inline bool adjacent(Kind kind, Word u, Word v) { return graph_distance(kind, u, v) == 1 && u != v; }

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Eigenvalue of the halved n-cube on the characters of weight i: the
/// character sum over all weight-2 words.
inline std::int64_t halved_eigenvalue(int n, int i) {
  std::int64_t s = 0;
  for (int j = 0; j <= 2; ++j) s += (j % 2 ? -1 : 1) * choose(i, j) * choose(n - i, 2 - j);
  return s;
}

/// Quotient matrix when the labeling is equitable, by counting every pair.
inline std::optional<Matrix> quotient(Kind kind, int n, int k, const std::function<int(Word)>& label) {
  const auto vs = vertices(kind, n);
  std::map<Word, int> lab;
  for (auto v : vs) lab[v] = label(v);
  std::vector<std::optional<std::vector<std::int64_t>>> rows(static_cast<std::size_t>(k));
  for (auto v : vs) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
    for (auto u : vs)
      if (adjacent(kind, u, v)) ++counts[static_cast<std::size_t>(lab[u])];
    auto& row = rows[static_cast<std::size_t>(lab[v])];
    if (!row) row = counts;
    else if (*row != counts) return std::nullopt;
  }
  Matrix m;
  for (auto& r : rows) m.push_back(r ? *r : std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
  return m;
}

/// Cell-0 counts at graph distance j from each cell, when constant.
inline std::vector<std::optional<Matrix>> sphere_counts(Kind kind, int n, const std::function<int(Word)>& label) {
  const auto vs = vertices(kind, n);
  const int diam = kind == Kind::Full ? n : n / 2;
  std::vector<std::optional<Matrix>> out;
  for (int j = 0; j <= diam; ++j) {
    std::vector<std::optional<std::vector<std::int64_t>>> rows(2);
    bool ok = true;
    for (auto v : vs) {
      std::vector<std::int64_t> counts(2, 0);
      for (auto u : vs)
        if (graph_distance(kind, u, v) == j) ++counts[static_cast<std::size_t>(label(u))];
      auto& row = rows[static_cast<std::size_t>(label(v))];
      if (!row) row = counts;
      else if (*row != counts) ok = false;
    }
    if (!ok || !rows[0] || !rows[1]) out.emplace_back(std::nullopt);
    else out.emplace_back(Matrix{*rows[0], *rows[1]});
  }
  return out;
}

inline Matrix mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return {{a, b}, {c, d}}; }

}  // namespace oracle
