#pragma once

// Vertex labelings of cube graphs and their text file format.
//
//   n=<n> kind=<full|halved-even|halved-odd> k=<k>
//   S=<a,b;c,d>                  (optional claimed quotient matrix)
//   <labels, ordinal order, 64 per line>
//
// Labels are single digits when k <= 10 and comma-separated integers otherwise.

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/matrix.hpp"

namespace hcube {

using label_t = std::uint8_t;

/// Largest vertex count (as a power of two) for which labels are materialized.
inline constexpr int kMaxLabelBits = 26;

class Partition {
 public:
  Partition(CubeGraph graph, int k, std::vector<label_t> labels, std::optional<QuotientMatrix> claimed = std::nullopt)
      : graph_(graph), k_(k), labels_(std::move(labels)), claimed_(std::move(claimed)) {
    require(k >= 1 && k <= 255, ErrorCode::Shape, "cell count must be in 1..255");
    require(labels_.size() == graph_.vertex_count(), ErrorCode::Shape,
            "label array has " + std::to_string(labels_.size()) + " entries, graph has " +
                std::to_string(graph_.vertex_count()) + " vertices");
    for (auto l : labels_) require(l < k_, ErrorCode::Shape, "label exceeds the cell count");
    require(!claimed_ || claimed_->k() == k_, ErrorCode::Shape, "claimed matrix size differs from k");
  }

  /// Labels every vertex w with f(w).
  template <class F>
  static Partition from_function(const CubeGraph& g, int k, F&& f) {
    check_materializable(g);
    std::vector<label_t> labels(g.vertex_count());
    for (ordinal_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<label_t>(f(g.vertex(v)));
    return {g, k, std::move(labels)};
  }

  /// Two-cell partition with the given words in cell 0.
  static Partition from_cell0(const CubeGraph& g, const std::vector<word_t>& cell0) {
    check_materializable(g);
    std::vector<label_t> labels(g.vertex_count(), 1);
    for (auto w : cell0) {
      require(g.contains(w), ErrorCode::Parity, format_word(w, g.n()) + " is not a vertex of " + g.description());
      labels[g.ordinal(w)] = 0;
    }
    return {g, 2, std::move(labels)};
  }

  static void check_materializable(const CubeGraph& g) {
    const int bits = g.is_halved() ? g.n() - 1 : g.n();
    require(bits <= kMaxLabelBits, ErrorCode::Precondition,
            g.description() + " is too large to label explicitly");
  }

  [[nodiscard]] const CubeGraph& graph() const noexcept { return graph_; }
  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<label_t>& labels() const noexcept { return labels_; }
  [[nodiscard]] int label(ordinal_t v) const { return labels_[v]; }
  [[nodiscard]] int label_of(word_t w) const { return labels_[graph_.ordinal(w)]; }
  [[nodiscard]] const std::optional<QuotientMatrix>& claimed() const noexcept { return claimed_; }

  Partition& set_claimed(std::optional<QuotientMatrix> m) {
    require(!m || m->k() == k_, ErrorCode::Shape, "claimed matrix size differs from k");
    claimed_ = std::move(m);
    return *this;
  }

  [[nodiscard]] std::vector<std::uint64_t> cell_sizes() const {
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(k_), 0);
    for (auto l : labels_) ++sizes[l];
    return sizes;
  }

  [[nodiscard]] std::vector<word_t> cell(int i) const {
    std::vector<word_t> out;
    for (ordinal_t v = 0; v < labels_.size(); ++v)
      if (labels_[v] == i) out.push_back(graph_.vertex(v));
    return out;
  }

  /// Cells renamed so that new cell i is old cell perm[i]; the claim follows.
  [[nodiscard]] Partition relabeled(const std::vector<int>& perm) const {
    require(static_cast<int>(perm.size()) == k_, ErrorCode::Shape, "permutation size mismatch");
    std::vector<label_t> inverse(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = static_cast<label_t>(i);
    auto labels = labels_;
    for (auto& l : labels) l = inverse[l];
    std::optional<QuotientMatrix> claim;
    if (claimed_) claim = claimed_->permuted(perm);
    return {graph_, k_, std::move(labels), std::move(claim)};
  }

  /// Labelings are equal; claims are not compared.
  [[nodiscard]] bool same_labels(const Partition& other) const {
    return graph_ == other.graph_ && k_ == other.k_ && labels_ == other.labels_;
  }

 private:
  CubeGraph graph_;
  int k_;
  std::vector<label_t> labels_;
  std::optional<QuotientMatrix> claimed_;
};

inline void write_partition(std::ostream& os, const Partition& p) {
  const auto& g = p.graph();
  os << "n=" << g.n() << " kind=" << kind_name(g.kind()) << " k=" << p.k() << '\n';
  if (p.claimed()) os << "S=" << p.claimed()->to_row_string() << '\n';
  const bool digits = p.k() <= 10;
  const auto& labels = p.labels();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const bool line_start = v % 64 == 0;
    if (!digits && !line_start) os << ',';
    if (digits) os << static_cast<char>('0' + labels[v]);
    else os << static_cast<int>(labels[v]);
    if (v % 64 == 63 || v + 1 == labels.size()) os << '\n';
  }
}

[[nodiscard]] inline std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  write_partition(os, p);
  return os.str();
}

namespace detail {

inline int parse_int_field(const std::string& token, const std::string& key) {
  require(token.rfind(key + "=", 0) == 0, ErrorCode::Parse, "expected '" + key + "=' in header, got '" + token + "'");
  const auto value = token.substr(key.size() + 1);
  try {
    std::size_t used = 0;
    const int x = std::stoi(value, &used);
    require(used == value.size(), ErrorCode::Parse, "bad integer '" + value + "'");
    return x;
  } catch (const std::logic_error&) {
    fail(ErrorCode::Parse, "bad integer '" + value + "'");
  }
}

}  // namespace detail

[[nodiscard]] inline Partition read_partition(std::istream& is) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), ErrorCode::Parse, "missing partition header");
  std::istringstream header(line);
  std::string tn, tkind, tk, extra;
  header >> tn >> tkind >> tk;
  require(!(header >> extra), ErrorCode::Parse, "unexpected trailing header field '" + extra + "'");
  const int n = detail::parse_int_field(tn, "n");
  require(tkind.rfind("kind=", 0) == 0, ErrorCode::Parse, "expected 'kind=' in header");
  const auto kind = parse_kind(tkind.substr(5));
  const int k = detail::parse_int_field(tk, "k");
  require(k >= 1 && k <= 255, ErrorCode::Parse, "k must be in 1..255");
  require(n >= 1 && n <= kMaxLength, ErrorCode::Parse, "n must be in 1..64");
  const CubeGraph g(kind, n);
  Partition::check_materializable(g);

  std::optional<QuotientMatrix> claimed;
  std::vector<label_t> labels;
  labels.reserve(g.vertex_count());
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first && line.rfind("S=", 0) == 0) {
      claimed = QuotientMatrix::parse(line.substr(2));
      require(claimed->k() == k, ErrorCode::Parse, "claimed matrix size differs from k");
      first = false;
      continue;
    }
    first = false;
    if (k <= 10) {
      for (char ch : line) {
        require(ch >= '0' && ch < '0' + k, ErrorCode::Parse, std::string("bad label character '") + ch + "'");
        labels.push_back(static_cast<label_t>(ch - '0'));
      }
    } else {
      std::stringstream ss(line);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        const int x = detail::parse_int_field("v=" + tok, "v");
        require(x >= 0 && x < k, ErrorCode::Parse, "label out of range");
        labels.push_back(static_cast<label_t>(x));
      }
    }
    require(labels.size() <= g.vertex_count(), ErrorCode::Parse, "more labels than vertices");
  }
  require(labels.size() == g.vertex_count(), ErrorCode::Parse,
          "expected " + std::to_string(g.vertex_count()) + " labels, found " + std::to_string(labels.size()));
  return {g, k, std::move(labels), std::move(claimed)};
}

[[nodiscard]] inline Partition partition_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_partition(is);
}

}  // namespace hcube
