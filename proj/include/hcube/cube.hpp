#pragma once

// Implicit hypercube H(n) and halved cubes 1/2H(n) (even weight) and
// 1/2H(n)' (odd weight). Nothing is materialized unless AdjacencyTable is
// built explicitly.
//
// Vertex ordinals rank words of the graph's parity class in ascending numeric
// order. For halved kinds the last coordinate (bit 0) is determined by the
// others, so the ordinal is simply w >> 1.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hcube/error.hpp"
#include "hcube/word.hpp"

namespace hcube {

enum class GraphKind { FullCube, HalvedEven, HalvedOdd };

[[nodiscard]] inline std::string_view kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::FullCube: return "full";
    case GraphKind::HalvedEven: return "halved-even";
    case GraphKind::HalvedOdd: return "halved-odd";
  }
  return "?";
}

[[nodiscard]] inline GraphKind parse_kind(std::string_view text) {
  if (text == "full") return GraphKind::FullCube;
  if (text == "halved-even" || text == "halved") return GraphKind::HalvedEven;
  if (text == "halved-odd") return GraphKind::HalvedOdd;
  fail(ErrorCode::Parse, "unknown graph kind '" + std::string(text) + "'");
}

using ordinal_t = std::uint64_t;

/// Calls f(subset) for every r-subset of the low n bits, in increasing numeric order.
template <class F>
void for_each_subset(int n, int r, F&& f) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    f(word_t{0});
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    word_t w = 0;
    for (int i : idx) w |= word_t{1} << i;
    f(w);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

class CubeGraph {
 public:
  CubeGraph(GraphKind kind, int n) : kind_(kind), n_(n) {
    require(n >= 1 && n <= kMaxLength, ErrorCode::Shape, "cube length must be in 1..64");
    require(kind == GraphKind::FullCube || n >= 2, ErrorCode::Shape, "halved cube needs n >= 2");
  }

  static CubeGraph full(int n) { return {GraphKind::FullCube, n}; }
  static CubeGraph halved(int n) { return {GraphKind::HalvedEven, n}; }
  static CubeGraph halved_odd(int n) { return {GraphKind::HalvedOdd, n}; }

  [[nodiscard]] GraphKind kind() const noexcept { return kind_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] bool is_halved() const noexcept { return kind_ != GraphKind::FullCube; }

  /// Required weight parity of vertices (-1 for the full cube).
  [[nodiscard]] int parity() const noexcept {
    return kind_ == GraphKind::HalvedEven ? 0 : kind_ == GraphKind::HalvedOdd ? 1 : -1;
  }

  [[nodiscard]] std::uint64_t vertex_count() const noexcept {
    const int bits = is_halved() ? n_ - 1 : n_;
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits);
  }

  [[nodiscard]] int degree() const noexcept { return is_halved() ? n_ * (n_ - 1) / 2 : n_; }
  [[nodiscard]] int diameter() const noexcept { return is_halved() ? n_ / 2 : n_; }

  [[nodiscard]] bool contains(word_t w) const noexcept {
    if ((w & ~low_mask(n_)) != 0) return false;
    return !is_halved() || parity_of(w) == parity();
  }

  /// Unchecked rank of a vertex word.
  [[nodiscard]] ordinal_t ordinal(word_t w) const noexcept { return is_halved() ? (w >> 1) : w; }

  /// Unchecked inverse of ordinal().
  [[nodiscard]] word_t vertex(ordinal_t ord) const noexcept {
    if (!is_halved()) return ord;
    const word_t high = ord << 1;
    return high | static_cast<word_t>(parity_of(ord) ^ parity());
  }

  [[nodiscard]] ordinal_t vertex_index(BinaryWord w) const {
    check_vertex(w);
    return ordinal(w.bits());
  }

  [[nodiscard]] BinaryWord word_at(ordinal_t ord) const {
    require(ord < vertex_count(), ErrorCode::Index, "vertex ordinal out of range");
    return {vertex(ord), n_};
  }

  void check_vertex(BinaryWord w) const {
    require(w.length() == n_, ErrorCode::Shape, "word length differs from graph length");
    require(contains(w.bits()), ErrorCode::Parity,
            "word " + w.to_string() + " is not a vertex of " + description());
  }

  [[nodiscard]] int graph_distance(word_t u, word_t v) const noexcept {
    const int h = popcount(u ^ v);
    return is_halved() ? h / 2 : h;
  }

  [[nodiscard]] bool adjacent(word_t u, word_t v) const noexcept {
    return popcount(u ^ v) == (is_halved() ? 2 : 1);
  }

  template <class F>
  void for_each_neighbor(word_t w, F&& f) const {
    if (is_halved()) {
      for (int i = 1; i < n_; ++i)
        for (int j = 0; j < i; ++j) f(w ^ (word_t{1} << i) ^ (word_t{1} << j));
    } else {
      for (int i = 0; i < n_; ++i) f(w ^ (word_t{1} << i));
    }
  }

  [[nodiscard]] std::vector<BinaryWord> neighbors(BinaryWord w) const {
    check_vertex(w);
    std::vector<BinaryWord> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for_each_neighbor(w.bits(), [&](word_t u) { out.emplace_back(u, n_); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// All vertices at graph distance exactly d from w, ascending.
  [[nodiscard]] std::vector<BinaryWord> sphere(BinaryWord w, int d) const {
    check_vertex(w);
    require(d >= 0 && d <= diameter(), ErrorCode::Index, "sphere radius out of range");
    std::vector<BinaryWord> out;
    for_each_subset(n_, is_halved() ? 2 * d : d, [&](word_t flip) { out.emplace_back(w.bits() ^ flip, n_); });
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] std::string description() const {
    switch (kind_) {
      case GraphKind::FullCube: return "H(" + std::to_string(n_) + ")";
      case GraphKind::HalvedEven: return "1/2H(" + std::to_string(n_) + ")";
      case GraphKind::HalvedOdd: return "1/2H(" + std::to_string(n_) + ")'";
    }
    return "?";
  }

  friend bool operator==(const CubeGraph&, const CubeGraph&) = default;

 private:
  GraphKind kind_;
  int n_;
};

/// Materialized neighbor ordinals, row-major (vertex_count x degree).
class AdjacencyTable {
 public:
  static constexpr int kMaxN = 16;

  explicit AdjacencyTable(const CubeGraph& g) : graph_(g), degree_(g.degree()) {
    require(g.n() <= kMaxN, ErrorCode::Precondition, "adjacency table is only built for n <= 16");
    const auto count = g.vertex_count();
    table_.reserve(count * static_cast<std::size_t>(degree_));
    for (ordinal_t v = 0; v < count; ++v)
      g.for_each_neighbor(g.vertex(v), [&](word_t u) { table_.push_back(static_cast<std::uint32_t>(g.ordinal(u))); });
  }

  [[nodiscard]] const CubeGraph& graph() const noexcept { return graph_; }
  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return table_.size() / static_cast<std::size_t>(degree_); }

  [[nodiscard]] const std::uint32_t* row(std::size_t v) const noexcept {
    return table_.data() + v * static_cast<std::size_t>(degree_);
  }

 private:
  CubeGraph graph_;
  int degree_;
  std::vector<std::uint32_t> table_;
};

/// An s-face of a halved cube: the host-parity words that agree with
/// `anchor` outside `free_mask`. The direction vector of the face is free_mask.
struct Face {
  word_t free_mask = 0;
  word_t anchor = 0;
  CubeGraph host = CubeGraph::halved(2);

  [[nodiscard]] int dimension() const noexcept { return popcount(free_mask); }

  void validate() const {
    require(host.is_halved(), ErrorCode::MalformedFace, "faces live in halved cubes");
    require((free_mask & ~low_mask(host.n())) == 0 && (anchor & ~low_mask(host.n())) == 0,
            ErrorCode::MalformedFace, "face masks exceed the word length");
    require((anchor & free_mask) == 0, ErrorCode::MalformedFace, "anchor overlaps the free coordinates");
    require(free_mask != 0, ErrorCode::MalformedFace, "a face needs at least one free coordinate");
  }

  [[nodiscard]] bool contains(word_t w) const noexcept {
    return (w & ~free_mask) == anchor && host.contains(w);
  }

  /// Face containing vertex v with the given free coordinates.
  static Face through(const CubeGraph& host, word_t v, word_t free_mask) {
    Face f{free_mask, v & ~free_mask, host};
    f.validate();
    return f;
  }
};

[[nodiscard]] inline std::vector<BinaryWord> face_vertices(const Face& f) {
  f.validate();
  std::vector<BinaryWord> out;
  word_t sub = 0;
  do {
    const word_t w = f.anchor | sub;
    if (f.host.contains(w)) out.emplace_back(w, f.host.n());
    sub = (sub - f.free_mask) & f.free_mask;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hcube
