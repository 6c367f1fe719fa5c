#pragma once

// Exact existence search for equitable 2-partitions of a cube graph with a
// prescribed quotient matrix, as a vertex-labeling DFS.
//
// The root vertex (ordinal 0 unless chosen) is pinned to cell 0; every cube graph is
// vertex-transitive, so "no solution with the root in cell 0" means no
// solution at all. Propagation enforces, for every vertex, the exact number
// of neighbors in each cell, plus the implied cell sizes. Optional orbital
// branching uses the coordinate permutations generated by transpositions that
// fix the current partial labeling.
//
// Determinism: the tree is cut at a fixed decision depth into subproblems
// which are solved (possibly in parallel) and aggregated in DFS order, so the
// status and node counts do not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/matrix.hpp"
#include "hcube/partition.hpp"
#include "hcube/quotient.hpp"
#include "hcube/verify.hpp"

namespace hcube {

struct SearchOptions {
  bool symmetry_breaking = true;
  bool prefilter = true;             ///< reject by conditions 1-4 and the H(n-1) correspondence first
  bool find_all = false;
  std::uint64_t node_limit = 0;      ///< 0: unlimited
  double time_limit_secs = 0;        ///< 0: unlimited
  unsigned threads = 1;
  int split_depth = 4;               ///< decision depth of the subproblem frontier
  std::size_t max_stored_solutions = 8;
  std::optional<word_t> root;        ///< vertex pinned to cell 0; default the lowest-ordinal vertex
};

struct SearchProblem {
  CubeGraph graph;
  QuotientMatrix target;
  SearchOptions options;
};

enum class SearchStatus { Found, ExhaustedNone, PreFilteredNonexistent, Aborted };

[[nodiscard]] inline std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNone: return "ExhaustedNone";
    case SearchStatus::PreFilteredNonexistent: return "PreFilteredNonexistent";
    case SearchStatus::Aborted: return "Aborted";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t count_conflicts = 0;        ///< neighbor-count rule failures
  std::uint64_t cardinality_conflicts = 0;  ///< cell-size rule failures
  std::uint64_t orbit_fixings = 0;          ///< vertices labeled by orbital branching
  std::uint64_t subproblems = 0;
  double wall_seconds = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    count_conflicts += o.count_conflicts;
    cardinality_conflicts += o.cardinality_conflicts;
    orbit_fixings += o.orbit_fixings;
    return *this;
  }
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Aborted;
  std::string reason;                 ///< prefilter reason or abort cause
  std::vector<Partition> solutions;   ///< verified; the first is the canonical answer
  std::uint64_t solution_count = 0;   ///< all found solutions in find-all mode
  SearchStats stats;
  bool symmetry_breaking = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> cell_sizes;
};

/// Reason a matrix cannot be realized on the graph, or empty if none is known.
[[nodiscard]] inline std::string prefilter_reason(const CubeGraph& g, const QuotientMatrix& s, bool full_conditions) {
  if (s.k() != 2) return "only 2x2 targets are supported";
  if (s.a() < 0 || s.b() <= 0 || s.c() <= 0 || s.d() < 0) return "condition 1: entries must be nonnegative, b, c > 0";
  if (s.row_sum(0) != g.degree() || s.row_sum(1) != g.degree()) return "condition 1: row sums differ from the degree";
  if (!implied_cell_sizes(s, g.vertex_count())) return "condition 2: cell sizes are not integers";
  if (!full_conditions) return {};
  const auto report = check_conditions_1_to_3(s, g);
  if (!report.passed()) return report.detail;
  if (g.is_halved()) {
    const auto table = recursion_table(s, g.n());
    if (const auto bad = table.first_offending_distance())
      return "condition 4: S^(" + std::to_string(*bad) + ") = " + table.at_distance(*bad).to_string() +
             " is not a nonnegative integer matrix";
    if (g.n() % 2 == 0 && report.eigenvalue && report.eigenvalue->index == g.n() / 2 && !thm2_has_preimage(s, g.n()))
      return "minimum eigenvalue: no H(" + std::to_string(g.n() - 1) + ") eigenvalue -1 counterpart";
  }
  return {};
}

namespace detail {

struct Frontier {
  std::vector<std::int8_t> labels;
  std::vector<int> blocks;  ///< block id per bit position, empty when symmetry is exhausted
  std::size_t pos = 0;
};

/// Read-only data shared by all workers.
struct SearchModel {
  CubeGraph graph = CubeGraph::halved(2);
  std::size_t count = 0;
  int shift = 0;   ///< Hamming distance >> shift is the graph distance
  int radius = 1;  ///< sphere constraints are used for distances 1..radius
  std::vector<word_t> words;
  std::vector<std::uint8_t> table;   ///< count x count distances, when small enough
  std::vector<std::int32_t> need;    ///< need[(j * 2 + cell) * 2 + other]
  std::vector<std::int32_t> sphere;  ///< sphere size per distance
  std::int64_t sizes[2]{};
  std::size_t root = 0;
  std::vector<std::size_t> order;

  [[nodiscard]] int dist(std::size_t u, std::size_t v) const noexcept {
    if (!table.empty()) return table[u * count + v];
    return popcount(words[u] ^ words[v]) >> shift;
  }
  [[nodiscard]] std::int32_t needed(int j, int cell, int other) const noexcept {
    return need[static_cast<std::size_t>((j * 2 + cell) * 2 + other)];
  }
};

/// BFS layers from the root, ties by ordinal.
inline std::vector<std::size_t> bfs_order(const SearchModel& m) {
  std::vector<std::size_t> order(m.count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return m.dist(m.root, x) < m.dist(m.root, y); });
  return order;
}

/// Builds the model; sphere constraints beyond distance 1 are included when
/// all distance-count matrices are nonnegative integers.
inline SearchModel build_model(const CubeGraph& g, const QuotientMatrix& s,
                               std::pair<std::uint64_t, std::uint64_t> sizes, std::optional<word_t> root = std::nullopt) {
  Partition::check_materializable(g);
  SearchModel m;
  if (root) {
    require(g.contains(*root), ErrorCode::Parity, format_word(*root, g.n()) + " is not a vertex of " + g.description());
    m.root = g.ordinal(*root);
  }
  m.graph = g;
  m.count = g.vertex_count();
  m.shift = g.is_halved() ? 1 : 0;
  m.sizes[0] = static_cast<std::int64_t>(sizes.first);
  m.sizes[1] = static_cast<std::int64_t>(sizes.second);
  m.words.resize(m.count);
  for (std::size_t v = 0; v < m.count; ++v) m.words[v] = g.vertex(v);
  const auto layers = sphere_count_layers(s, g);
  bool usable = true;
  for (const auto& layer : layers) usable = usable && layer.is_integral() && layer.is_nonnegative();
  m.radius = usable ? g.diameter() : 1;
  for (int j = 0; j <= m.radius; ++j) {
    m.sphere.push_back(0);
    for (int cell = 0; cell < 2; ++cell)
      for (int other = 0; other < 2; ++other) {
        std::int64_t value = 0;
        if (j == 0) value = cell == other ? 1 : 0;
        else if (j == 1) value = s(cell, other);
        else value = layers[static_cast<std::size_t>(j)].to_integer()(cell, other);
        m.need.push_back(static_cast<std::int32_t>(value));
      }
  }
  for (std::size_t v = 0; v < m.count; ++v) {
    const int j = m.dist(m.root, v);
    if (j <= m.radius) ++m.sphere[static_cast<std::size_t>(j)];
  }
  if (m.count <= 4096) {
    std::vector<std::uint8_t> table(m.count * m.count);
    for (std::size_t u = 0; u < m.count; ++u)
      for (std::size_t v = 0; v < m.count; ++v) table[u * m.count + v] = static_cast<std::uint8_t>(m.dist(u, v));
    m.table = std::move(table);
  }
  m.order = bfs_order(m);
  return m;
}

class SearchEngine {
 public:
  SearchEngine(const SearchModel& model, const SearchOptions& opt) : m_(model), opt_(opt) {
    label_.assign(m_.count, -1);
    count_.assign(m_.count * static_cast<std::size_t>(m_.radius + 1) * 2, 0);
  }

  std::vector<std::vector<std::int8_t>> solutions;
  std::uint64_t solution_count = 0;
  SearchStats stats;
  bool aborted = false;
  std::string abort_reason;

  std::uint64_t node_budget = 0;  // 0: unlimited
  std::function<bool()> should_stop;

  /// Places the root in cell 0 and propagates. False if that already fails.
  bool start() { return assign(m_.order.front(), 0) && propagate(); }

  void load(const Frontier& f) {
    for (std::size_t v = 0; v < f.labels.size(); ++v)
      if (f.labels[v] >= 0) (void)assign(v, f.labels[v]);
  }

  /// Full DFS from the current state; returns true to stop the whole search.
  bool run(std::size_t pos, std::vector<int> blocks) { return dfs(pos, std::move(blocks), -1, nullptr); }

  /// DFS that stops at `depth` decisions and records the frontier instead.
  void collect(int depth, std::vector<Frontier>& out) { (void)dfs(0, initial_blocks(), depth, &out); }

  [[nodiscard]] std::vector<int> initial_blocks() const {
    if (!opt_.symmetry_breaking) return {};
    return std::vector<int>(static_cast<std::size_t>(m_.graph.n()), 0);
  }

 private:
  using count_t = std::int16_t;

  count_t& cnt(std::size_t v, int j, int cell) {
    return count_[(v * static_cast<std::size_t>(m_.radius + 1) + static_cast<std::size_t>(j)) * 2 +
                  static_cast<std::size_t>(cell)];
  }

  bool assign(std::size_t v, int cell) {
    label_[v] = static_cast<std::int8_t>(cell);
    ++total_[cell];
    trail_.push_back(static_cast<std::uint32_t>(v));
    for (std::size_t u = 0; u < m_.count; ++u) {
      const int j = m_.dist(u, v);
      if (j <= m_.radius) ++cnt(u, j, cell);
    }
    if (total_[cell] > m_.sizes[cell]) {
      ++stats.cardinality_conflicts;
      return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto v = trail_.back();
      trail_.pop_back();
      const int cell = label_[v];
      label_[v] = -1;
      --total_[cell];
      for (std::size_t u = 0; u < m_.count; ++u) {
        const int j = m_.dist(u, v);
        if (j <= m_.radius) --cnt(u, j, cell);
      }
    }
  }

  /// Whether the sphere counts around v still allow v in `cell`.
  bool fits(std::size_t v, int cell) {
    for (int j = 1; j <= m_.radius; ++j) {
      const std::int32_t c0 = cnt(v, j, 0), c1 = cnt(v, j, 1);
      const std::int32_t open = m_.sphere[static_cast<std::size_t>(j)] - c0 - c1;
      const auto n0 = m_.needed(j, cell, 0), n1 = m_.needed(j, cell, 1);
      if (c0 > n0 || c1 > n1 || c0 + open < n0 || c1 + open < n1) return false;
    }
    return true;
  }

  /// Cells an unlabeled v may take given the labels around it and the remaining capacity.
  unsigned feasible(std::size_t v) {
    unsigned mask = 0;
    for (int cell = 0; cell < 2; ++cell)
      if (total_[cell] < m_.sizes[cell] && fits(v, cell)) mask |= 1U << cell;
    return mask;
  }

  /// Labels every unlabeled vertex at distance j from u with `cell`.
  bool fill_sphere(std::size_t u, int j, int cell) {
    for (std::size_t w = 0; w < m_.count; ++w)
      if (label_[w] < 0 && m_.dist(u, w) == j && !assign(w, cell)) return false;
    return true;
  }

  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t u = 0; u < m_.count; ++u) {
        const int lab = label_[u];
        if (lab < 0) {
          const unsigned ok = feasible(u);
          if (ok == 0) {
            ++stats.count_conflicts;
            return false;
          }
          if (ok != 3U) {
            if (!assign(u, ok == 1U ? 0 : 1)) return false;
            changed = true;
          }
          continue;
        }
        if (!fits(u, lab)) {
          ++stats.count_conflicts;
          return false;
        }
        for (int j = 1; j <= m_.radius; ++j) {
          const std::int32_t c0 = cnt(u, j, 0), c1 = cnt(u, j, 1);
          if (c0 + c1 == m_.sphere[static_cast<std::size_t>(j)]) continue;
          int forced = -1;
          if (c0 == m_.needed(j, lab, 0)) forced = 1;
          else if (c1 == m_.needed(j, lab, 1)) forced = 0;
          if (forced < 0) continue;
          if (!fill_sphere(u, j, forced)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  // --- symmetry

  static word_t swap_bits(word_t w, int i, int j) {
    if ((w >> i & 1U) == (w >> j & 1U)) return w;
    return w ^ ((word_t{1} << i) | (word_t{1} << j));
  }

  bool transposition_fixes(int i, int j) const {
    for (auto v : trail_) {
      const word_t w = m_.words[v];
      const word_t t = swap_bits(w, i, j);
      if (t != w && label_[m_.graph.ordinal(t)] != label_[v]) return false;
    }
    return true;
  }

  /// Refines `blocks` to the components of fixing transpositions; empty if all trivial.
  std::vector<int> stabilizer_blocks(const std::vector<int>& blocks) const {
    if (blocks.empty()) return {};
    const auto n = static_cast<std::size_t>(m_.graph.n());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool nontrivial = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (blocks[i] != blocks[j] || find(i) == find(j)) continue;
        if (transposition_fixes(static_cast<int>(i), static_cast<int>(j))) {
          parent[find(j)] = find(i);
          nontrivial = true;
        }
      }
    if (!nontrivial) return {};
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(find(i));
    return out;
  }

  /// Unlabeled vertices with the same number of ones as v in every block.
  std::vector<std::size_t> orbit(std::size_t v, const std::vector<int>& blocks) const {
    std::vector<word_t> masks;
    std::vector<int> ids;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto it = std::find(ids.begin(), ids.end(), blocks[i]);
      if (it == ids.end()) {
        ids.push_back(blocks[i]);
        masks.push_back(0);
        it = ids.end() - 1;
      }
      masks[static_cast<std::size_t>(it - ids.begin())] |= word_t{1} << i;
    }
    const word_t w = m_.words[v];
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < m_.count; ++u) {
      if (label_[u] >= 0) continue;
      const word_t x = m_.words[u];
      if (std::all_of(masks.begin(), masks.end(), [&](word_t mk) { return popcount(x & mk) == popcount(w & mk); }))
        out.push_back(u);
    }
    return out;
  }

  // --- tree search

  bool out_of_budget() {
    if (node_budget && stats.nodes > node_budget) {
      aborted = true;
      abort_reason = "node limit";
      return true;
    }
    if ((stats.nodes & 255U) == 0 && should_stop && should_stop()) {
      aborted = true;
      if (abort_reason.empty()) abort_reason = "stopped";
      return true;
    }
    return false;
  }

  bool record_solution() {
    ++solution_count;
    if (solutions.size() < std::max<std::size_t>(1, opt_.max_stored_solutions)) solutions.push_back(label_);
    return !opt_.find_all;
  }

  /// Returns true when the search must stop (solution in find-one mode, or abort).
  bool dfs(std::size_t pos, std::vector<int> blocks, int depth_left, std::vector<Frontier>* frontier) {
    ++stats.nodes;
    if (out_of_budget()) return true;
    while (pos < m_.order.size() && label_[m_.order[pos]] >= 0) ++pos;
    if (pos == m_.order.size()) {
      if (frontier) {
        frontier->push_back({label_, {}, pos});
        return false;
      }
      return record_solution();
    }
    if (frontier && depth_left == 0) {
      frontier->push_back({label_, stabilizer_blocks(blocks), pos});
      return false;
    }
    const int next_depth = depth_left < 0 ? -1 : depth_left - 1;

    const auto v = m_.order[pos];
    const unsigned ok = feasible(v);
    if (ok == 0) {
      ++stats.count_conflicts;
      return false;
    }
    blocks = stabilizer_blocks(blocks);
    const std::size_t mark = trail_.size();

    if (ok != 3U) {
      const bool stop = assign(v, ok == 1U ? 0 : 1) && propagate() && dfs(pos + 1, blocks, next_depth, frontier);
      undo(mark);
      return stop || aborted;
    }

    bool stop = assign(v, 0) && propagate() && dfs(pos + 1, blocks, next_depth, frontier);
    undo(mark);
    if (stop || aborted) return true;

    bool alive = true;
    if (!blocks.empty()) {
      // Any solution with an orbit member in cell 0 maps to one with v in cell 0.
      for (auto u : orbit(v, blocks)) {
        if (label_[u] >= 0) continue;
        if (u != v) ++stats.orbit_fixings;
        if (!assign(u, 1)) {
          alive = false;
          break;
        }
      }
    } else {
      alive = assign(v, 1);
    }
    stop = alive && propagate() && dfs(pos + 1, blocks, next_depth, frontier);
    undo(mark);
    return stop || aborted;
  }

  const SearchModel& m_;
  SearchOptions opt_;
  std::int64_t total_[2]{};
  std::vector<std::int8_t> label_;
  std::vector<count_t> count_;
  std::vector<std::uint32_t> trail_;
};

}  // namespace detail

[[nodiscard]] inline SearchOutcome search(const SearchProblem& problem) {
  using clock = std::chrono::steady_clock;
  const auto started = clock::now();
  const auto& g = problem.graph;
  const auto& s = problem.target;
  const auto& opt = problem.options;
  SearchOutcome out;
  out.symmetry_breaking = opt.symmetry_breaking;

  require(s.k() == 2, ErrorCode::Shape, "search targets 2x2 matrices");
  if (auto why = prefilter_reason(g, s, opt.prefilter); !why.empty()) {
    out.status = SearchStatus::PreFilteredNonexistent;
    out.reason = std::move(why);
    return out;
  }
  const auto sizes = *implied_cell_sizes(s, g.vertex_count());
  out.cell_sizes = sizes;

  const auto model = detail::build_model(g, s, sizes, opt.root);
  const auto deadline = opt.time_limit_secs > 0
                            ? std::optional(started + std::chrono::duration_cast<clock::duration>(
                                                          std::chrono::duration<double>(opt.time_limit_secs)))
                            : std::nullopt;
  std::atomic<bool> timed_out{false};
  auto time_check = [&] {
    if (deadline && clock::now() > *deadline) timed_out = true;
    return timed_out.load();
  };

  // Frontier.
  std::vector<detail::Frontier> frontier;
  detail::SearchEngine root(model, opt);
  root.node_budget = opt.node_limit;
  root.should_stop = time_check;
  if (root.start()) root.collect(std::max(0, opt.split_depth), frontier);
  out.stats += root.stats;
  out.stats.subproblems = frontier.size();
  if (root.aborted) {
    out.status = SearchStatus::Aborted;
    out.reason = timed_out ? "time limit" : root.abort_reason;
    out.stats.wall_seconds = std::chrono::duration<double>(clock::now() - started).count();
    return out;
  }

  // Subproblems.
  struct Result {
    bool done = false;
    bool aborted = false;
    std::string reason;
    SearchStats stats;
    std::vector<std::vector<std::int8_t>> solutions;
    std::uint64_t solution_count = 0;
  };
  std::vector<Result> results(frontier.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
  const std::uint64_t budget = opt.node_limit ? (opt.node_limit > out.stats.nodes ? opt.node_limit - out.stats.nodes : 1) : 0;

  auto worker = [&] {
    for (;;) {
      const auto idx = next.fetch_add(1);
      if (idx >= frontier.size()) return;
      if (!opt.find_all && idx > first_found.load()) continue;
      detail::SearchEngine engine(model, opt);
      engine.node_budget = budget;
      engine.should_stop = [&, idx] { return (!opt.find_all && idx > first_found.load()) || time_check(); };
      engine.load(frontier[idx]);
      (void)engine.run(frontier[idx].pos, frontier[idx].blocks);
      auto& r = results[idx];
      r.done = true;
      r.aborted = engine.aborted;
      r.reason = timed_out ? "time limit" : engine.abort_reason;
      r.stats = engine.stats;
      r.solutions = std::move(engine.solutions);
      r.solution_count = engine.solution_count;
      if (!opt.find_all && r.solution_count > 0 && !r.aborted) {
        auto cur = first_found.load();
        while (idx < cur && !first_found.compare_exchange_weak(cur, idx)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1U, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Aggregate in DFS order.
  out.status = SearchStatus::ExhaustedNone;
  std::vector<std::vector<std::int8_t>> found;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out.stats += r.stats;
    if (opt.node_limit && out.stats.nodes > opt.node_limit) {
      out.status = SearchStatus::Aborted;
      out.reason = "node limit";
      break;
    }
    if (!r.done || (r.aborted && r.solution_count == 0)) {
      out.status = SearchStatus::Aborted;
      out.reason = r.reason.empty() ? "stopped" : r.reason;
      break;
    }
    out.solution_count += r.solution_count;
    for (const auto& sol : r.solutions)
      if (found.size() < std::max<std::size_t>(1, opt.max_stored_solutions)) found.push_back(sol);
    if (r.aborted) {
      out.status = SearchStatus::Aborted;
      out.reason = r.reason;
      break;
    }
    if (!opt.find_all && r.solution_count > 0) break;
  }
  if (out.status != SearchStatus::Aborted && out.solution_count > 0) out.status = SearchStatus::Found;
  if (out.status == SearchStatus::Aborted && !found.empty() && !opt.find_all) out.status = SearchStatus::Found;

  for (const auto& sol : found) {
    std::vector<label_t> labels(sol.begin(), sol.end());
    Partition p(g, 2, std::move(labels), s);
    const auto check = verify_equitable(p);
    if (!check.confirms()) throw std::logic_error("search produced a partition that fails verification");
    out.solutions.push_back(std::move(p));
  }
  out.stats.wall_seconds = std::chrono::duration<double>(clock::now() - started).count();
  return out;
}

struct ClassificationEntry {
  int index = 0;  ///< eigenvalue index i
  std::int64_t eigenvalue = 0;
  QuotientMatrix matrix;
  SearchOutcome outcome;
};

/// Search outcome for every matrix passing conditions 1-3 (b >= c) on a halved cube.
[[nodiscard]] inline std::vector<ClassificationEntry> classify(int n, GraphKind kind, const SearchOptions& options = {},
                                                               int max_n = 8) {
  require(kind != GraphKind::FullCube, ErrorCode::Precondition, "classification is defined for halved cubes");
  require(n >= 2 && n <= max_n, ErrorCode::Bound,
          "n = " + std::to_string(n) + " exceeds the exhaustive bound " + std::to_string(max_n));
  std::vector<ClassificationEntry> out;
  const CubeGraph g(kind, n);
  for (int i = 1; i <= n / 2; ++i) {
    for (auto& report : enumerate_admissible(n, i, false, false, kind)) {
      ClassificationEntry e;
      e.index = i;
      e.eigenvalue = theta(n, i);
      e.matrix = report.matrix;
      e.outcome = search({g, report.matrix, options});
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// The 0/1 system A x = (a - c) x + c 1 with sum(x) = |C0| in CPLEX LP format;
/// x_v = 1 iff vertex v (ordinal order) is in cell 0.
[[nodiscard]] inline std::string export_instance(const SearchProblem& problem) {
  const auto& g = problem.graph;
  const auto& s = problem.target;
  require(s.k() == 2, ErrorCode::Shape, "export supports 2x2 targets");
  const auto sizes = implied_cell_sizes(s, g.vertex_count());
  require(sizes.has_value(), ErrorCode::Precondition, "cell sizes implied by the matrix are not integers");
  Partition::check_materializable(g);
  const auto count = g.vertex_count();
  std::ostringstream os;
  os << "\\ equitable 2-partition instance\n";
  os << "\\ graph " << g.description() << " kind=" << kind_name(g.kind()) << " n=" << g.n() << " vertices=" << count
     << '\n';
  os << "\\ target " << s.to_string() << " |C0|=" << sizes->first << " |C1|=" << sizes->second << '\n';
  os << "\\ x<i> = 1 iff the vertex with ordinal i lies in cell 0\n";
  os << "Minimize\n obj: 0 x0\nSubject To\n";
  const auto self = s.c() - s.a();
  auto emit_terms = [&](std::vector<std::pair<std::int64_t, std::uint64_t>> terms) {
    std::size_t on_line = 0;
    bool first = true;
    for (auto [coef, var] : terms) {
      if (coef == 0) continue;
      if (on_line == 8) {
        os << "\n   ";
        on_line = 0;
      }
      if (first) os << (coef < 0 ? "-" : "");
      else os << (coef < 0 ? " - " : " + ");
      const auto mag = coef < 0 ? -coef : coef;
      if (mag != 1) os << mag << ' ';
      os << 'x' << var;
      first = false;
      ++on_line;
    }
  };
  for (ordinal_t v = 0; v < count; ++v) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> terms;
    std::vector<std::uint64_t> nb;
    g.for_each_neighbor(g.vertex(v), [&](word_t u) { nb.push_back(g.ordinal(u)); });
    std::sort(nb.begin(), nb.end());
    bool placed = false;
    for (auto u : nb) {
      if (!placed && v < u) {
        terms.emplace_back(self, v);
        placed = true;
      }
      terms.emplace_back(1, u);
    }
    if (!placed) terms.emplace_back(self, v);
    os << " v" << v << ": ";
    emit_terms(std::move(terms));
    os << " = " << s.c() << '\n';
  }
  os << " card: ";
  std::vector<std::pair<std::int64_t, std::uint64_t>> all;
  for (ordinal_t v = 0; v < count; ++v) all.emplace_back(1, v);
  emit_terms(std::move(all));
  os << " = " << sizes->first << "\nBinary\n";
  for (ordinal_t v = 0; v < count; ++v) os << " x" << v << (v % 16 == 15 || v + 1 == count ? "\n" : "");
  os << "End\n";
  return os.str();
}

}  // namespace hcube
