#pragma once

// Ground-truth checks by direct neighbor counting: equitability, quotient
// matrix extraction, distance partitions and covering radii, weight
// distributions, and the per-distance cell count matrices S^(i).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/matrix.hpp"
#include "hcube/partition.hpp"

namespace hcube {

/// Vertex `vertex` in cell `cell` has `observed` neighbors in cell `target`
/// where the lowest-ordinal vertex of the same cell has `expected`.
struct Witness {
  word_t vertex = 0;
  int cell = 0;
  int target = 0;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
};

struct VerificationOutcome {
  bool equitable = false;
  QuotientMatrix matrix;           ///< extracted matrix, meaningful when equitable
  std::optional<Witness> witness;  ///< set when not equitable
  bool claimed_mismatch = false;   ///< equitable, but not with the attached claim

  /// Equitable and (if a claim was attached) equal to it.
  [[nodiscard]] bool confirms() const noexcept { return equitable && !claimed_mismatch; }
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Empty cells are tolerated; their rows in the extracted matrix are zero.
  bool allow_empty_cells = false;
};

namespace detail {

inline void count_neighbors(const Partition& p, word_t w, std::vector<std::int64_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  p.graph().for_each_neighbor(w, [&](word_t u) { ++counts[static_cast<std::size_t>(p.label_of(u))]; });
}

/// Runs body(begin, end, chunk) over [0, count) split into `threads` contiguous chunks.
template <class Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  threads = std::max(1U, threads);
  if (threads == 1 || count < 2 * threads) {
    body(std::uint64_t{0}, count, 0U);
    return;
  }
  std::vector<std::thread> pool;
  const auto step = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const auto begin = std::min<std::uint64_t>(count, t * step);
    const auto end = std::min<std::uint64_t>(count, begin + step);
    pool.emplace_back([&body, begin, end, t] { body(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

[[nodiscard]] inline VerificationOutcome verify_equitable(const Partition& p, const VerifyOptions& options = {}) {
  const auto& g = p.graph();
  const int k = p.k();
  const auto count = g.vertex_count();

  std::vector<std::optional<ordinal_t>> first(static_cast<std::size_t>(k));
  for (ordinal_t v = 0; v < count; ++v) {
    auto& slot = first[static_cast<std::size_t>(p.label(v))];
    if (!slot) slot = v;
  }
  for (int i = 0; i < k; ++i)
    if (!first[static_cast<std::size_t>(i)] && !options.allow_empty_cells)
      fail(ErrorCode::DegenerateCell, "cell " + std::to_string(i) + " of " + std::to_string(k) +
                                          " is empty; use a " + std::to_string(k - 1) + "-partition");

  VerificationOutcome out;
  out.matrix = QuotientMatrix::zero(k);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (!first[static_cast<std::size_t>(i)]) continue;
    detail::count_neighbors(p, g.vertex(*first[static_cast<std::size_t>(i)]), counts);
    for (int j = 0; j < k; ++j) out.matrix(i, j) = counts[static_cast<std::size_t>(j)];
  }

  const unsigned threads = std::max(1U, options.threads);
  std::vector<std::optional<Witness>> found(threads);
  detail::parallel_chunks(count, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned chunk) {
    std::vector<std::int64_t> local(static_cast<std::size_t>(k));
    for (ordinal_t v = begin; v < end; ++v) {
      const auto w = g.vertex(v);
      detail::count_neighbors(p, w, local);
      const int i = p.label(v);
      for (int j = 0; j < k; ++j) {
        if (local[static_cast<std::size_t>(j)] != out.matrix(i, j)) {
          found[chunk] = Witness{w, i, j, local[static_cast<std::size_t>(j)], out.matrix(i, j)};
          return;
        }
      }
    }
  });
  for (const auto& w : found) {
    if (w) {
      out.witness = w;
      break;
    }
  }
  out.equitable = !out.witness.has_value();
  if (out.equitable && p.claimed()) {
    for (int i = 0; i < k; ++i) {
      if (!first[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < k; ++j)
        if ((*p.claimed())(i, j) != out.matrix(i, j)) out.claimed_mismatch = true;
    }
  }
  return out;
}

/// Recounts a witness; true when it really shows a violation.
[[nodiscard]] inline bool witness_holds(const Partition& p, const Witness& w) {
  if (p.label_of(w.vertex) != w.cell) return false;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p.k()));
  detail::count_neighbors(p, w.vertex, counts);
  return counts[static_cast<std::size_t>(w.target)] == w.observed && w.observed != w.expected;
}

/// Distance layers C^(0..rho) of a code.
struct DistancePartition {
  CubeGraph graph = CubeGraph::halved(2);
  std::vector<std::vector<word_t>> layers;
  std::vector<label_t> distance;  ///< per vertex ordinal

  [[nodiscard]] int covering_radius() const noexcept { return static_cast<int>(layers.size()) - 1; }
  [[nodiscard]] const std::vector<word_t>& code() const { return layers.front(); }

  [[nodiscard]] std::vector<std::uint64_t> layer_sizes() const {
    std::vector<std::uint64_t> s;
    for (const auto& l : layers) s.push_back(l.size());
    return s;
  }

  [[nodiscard]] Partition to_partition() const {
    return {graph, static_cast<int>(layers.size()), distance};
  }
};

[[nodiscard]] inline DistancePartition distance_partition(const CubeGraph& g, const std::vector<word_t>& code) {
  require(!code.empty(), ErrorCode::EmptyCode, "distance partition of an empty code");
  Partition::check_materializable(g);
  constexpr label_t kUnseen = 255;
  DistancePartition dp;
  dp.graph = g;
  dp.distance.assign(g.vertex_count(), kUnseen);
  std::vector<word_t> frontier;
  for (auto w : code) {
    require(g.contains(w), ErrorCode::Parity, format_word(w, g.n()) + " is not a vertex of " + g.description());
    auto& d = dp.distance[g.ordinal(w)];
    if (d == kUnseen) {
      d = 0;
      frontier.push_back(w);
    }
  }
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    const auto next_level = static_cast<label_t>(dp.layers.size() + 1);
    std::vector<word_t> next;
    for (auto w : frontier) {
      g.for_each_neighbor(w, [&](word_t u) {
        auto& d = dp.distance[g.ordinal(u)];
        if (d == kUnseen) {
          d = next_level;
          next.push_back(u);
        }
      });
    }
    dp.layers.push_back(std::move(frontier));
    frontier = std::move(next);
  }
  return dp;
}

[[nodiscard]] inline VerificationOutcome is_completely_regular(const CubeGraph& g, const std::vector<word_t>& code,
                                                              const VerifyOptions& options = {}) {
  return verify_equitable(distance_partition(g, code).to_partition(), options);
}

/// Table |C_i ∩ D^(d)|, k rows by rho+1 columns.
[[nodiscard]] inline std::vector<std::vector<std::uint64_t>> weight_distribution(const Partition& p,
                                                                                const DistancePartition& d) {
  require(p.graph() == d.graph, ErrorCode::GraphMismatch, "partition and code live on different graphs");
  std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(p.k()),
                                                std::vector<std::uint64_t>(d.layers.size(), 0));
  for (ordinal_t v = 0; v < p.labels().size(); ++v) ++table[p.label(v)][d.distance[v]];
  return table;
}

/// For each Hamming distance i = 0..n, the matrix M[j][m] = #{u in C_m : dist(u,v) = i},
/// when it does not depend on the choice of v in C_j; std::nullopt otherwise.
/// Distances of the wrong parity for halved graphs yield zero matrices.
[[nodiscard]] inline std::vector<std::optional<QuotientMatrix>> distance_count_matrices(const Partition& p) {
  const auto& g = p.graph();
  const int n = g.n();
  const int k = p.k();
  const auto count = g.vertex_count();
  const auto width = static_cast<std::size_t>(n + 1);
  std::vector<std::int64_t> reference(static_cast<std::size_t>(k) * static_cast<std::size_t>(k) * width, -1);
  std::vector<bool> constant(width, true);
  std::vector<std::int64_t> local(static_cast<std::size_t>(k) * width);
  auto at = [&](std::vector<std::int64_t>& vec, int cell, int i) -> std::int64_t& {
    return vec[static_cast<std::size_t>(cell) * width + static_cast<std::size_t>(i)];
  };
  for (ordinal_t v = 0; v < count; ++v) {
    const auto w = g.vertex(v);
    std::fill(local.begin(), local.end(), 0);
    for (ordinal_t u = 0; u < count; ++u) ++at(local, p.label(u), popcount(w ^ g.vertex(u)));
    const int j = p.label(v);
    for (int m = 0; m < k; ++m) {
      for (int i = 0; i <= n; ++i) {
        auto& ref = reference[(static_cast<std::size_t>(j) * static_cast<std::size_t>(k) + static_cast<std::size_t>(m)) * width +
                              static_cast<std::size_t>(i)];
        const auto val = at(local, m, i);
        if (ref < 0) ref = val;
        else if (ref != val) constant[static_cast<std::size_t>(i)] = false;
      }
    }
  }
  std::vector<std::optional<QuotientMatrix>> out(width);
  for (int i = 0; i <= n; ++i) {
    if (!constant[static_cast<std::size_t>(i)]) continue;
    auto m = QuotientMatrix::zero(k);
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < k; ++c)
        m(j, c) = std::max<std::int64_t>(
            0, reference[(static_cast<std::size_t>(j) * static_cast<std::size_t>(k) + static_cast<std::size_t>(c)) * width +
                         static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(i)] = std::move(m);
  }
  return out;
}

}  // namespace hcube
