#pragma once

// Constructions of equitable partitions. Every function attaches the matrix
// it claims and runs the counting oracle before returning whenever the target
// graph has n <= kAlwaysVerifyN (larger targets are checked on request).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hcube/codes.hpp"
#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/matrix.hpp"
#include "hcube/partition.hpp"
#include "hcube/quotient.hpp"
#include "hcube/verify.hpp"

namespace hcube {

inline constexpr int kAlwaysVerifyN = 16;

struct ConstructOptions {
  bool verify_large = false;  ///< also verify targets with n > kAlwaysVerifyN
  unsigned threads = 1;
};

struct Construction {
  Partition partition;
  QuotientMatrix claimed;
  std::optional<QuotientMatrix> verified;  ///< set when the oracle ran (and agreed)
};

namespace detail {

/// Attaches `claim` and checks it with the oracle when required.
inline Construction certify(Partition p, const QuotientMatrix& claim, const ConstructOptions& opt,
                            bool allow_empty = false) {
  p.set_claimed(claim);
  Construction out{std::move(p), claim, std::nullopt};
  if (out.partition.graph().n() <= kAlwaysVerifyN || opt.verify_large) {
    const auto outcome = verify_equitable(out.partition, {opt.threads, allow_empty});
    if (!outcome.equitable) {
      const auto& w = *outcome.witness;
      fail(ErrorCode::NotEquitable, "construction output is not equitable: vertex " +
                                        format_word(w.vertex, out.partition.graph().n()) + " has " +
                                        std::to_string(w.observed) + " neighbors in cell " + std::to_string(w.target) +
                                        ", expected " + std::to_string(w.expected));
    }
    if (outcome.claimed_mismatch)
      fail(ErrorCode::NotEquitable, "claimed " + claim.to_string() + " but the partition has " +
                                        outcome.matrix.to_string());
    out.verified = outcome.matrix;
  }
  return out;
}

/// Extracted matrix of an input partition, which must be equitable.
inline QuotientMatrix require_equitable(const Partition& p, const std::string& what, unsigned threads = 1,
                                        bool allow_empty = false) {
  const auto outcome = verify_equitable(p, {threads, allow_empty});
  require(outcome.equitable, ErrorCode::NotEquitable, what + " is not equitable");
  return outcome.matrix;
}

inline std::vector<word_t> to_words(const std::vector<BinaryWord>& ws) {
  std::vector<word_t> out;
  for (auto w : ws) out.push_back(w.bits());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// From the hypercube

/// Restriction of an equitable partition of H(n) to one parity class.
[[nodiscard]] inline Construction restrict_from_cube(const Partition& p, GraphKind target = GraphKind::HalvedEven,
                                                     const ConstructOptions& opt = {}) {
  require(p.graph().kind() == GraphKind::FullCube, ErrorCode::Precondition, "restriction needs an H(n) partition");
  require(target != GraphKind::FullCube, ErrorCode::Precondition, "restriction targets a halved cube");
  (void)detail::require_equitable(p, "input partition", opt.threads);
  const CubeGraph h(target, p.graph().n());
  auto q = Partition::from_function(h, p.k(), [&](word_t w) { return p.label_of(w); });
  for (auto size : q.cell_sizes())
    require(size > 0, ErrorCode::Precondition,
            "a cell vanishes on " + h.description() + " (partition into bipartite parts?)");
  const auto outcome = verify_equitable(q, {opt.threads});
  require(outcome.equitable, ErrorCode::NotEquitable, "restriction is not equitable");
  return detail::certify(std::move(q), outcome.matrix, opt);
}

/// Cells C_i ∪ (C_i + 1) of H(n) from an equitable partition of a halved n-cube, n odd.
[[nodiscard]] inline Construction odd_lift(const Partition& p, const ConstructOptions& opt = {}) {
  const auto& g = p.graph();
  require(g.is_halved(), ErrorCode::Precondition, "odd lift takes a halved-cube partition");
  require(g.n() % 2 == 1, ErrorCode::Parity, "odd lift needs odd n (the all-one word must change parity)");
  (void)detail::require_equitable(p, "input partition", opt.threads);
  const word_t ones = low_mask(g.n());
  auto lifted = Partition::from_function(CubeGraph::full(g.n()), p.k(), [&](word_t w) {
    return g.contains(w) ? p.label_of(w) : p.label_of(w ^ ones);
  });
  const auto outcome = verify_equitable(lifted, {opt.threads});
  require(outcome.equitable, ErrorCode::NotEquitable, "lifted partition is not equitable");
  return detail::certify(std::move(lifted), outcome.matrix, opt);
}

// ---------------------------------------------------------------------------
// Minimum eigenvalue correspondence with H(n-1)

/// H(n-1) partition with eigenvalue -1 -> partition of 1/2H(n), n even. Appending
/// the parity bit maps H(n-1) ordinals onto 1/2H(n) ordinals unchanged.
[[nodiscard]] inline Construction thm2_transfer(const Partition& source, const ConstructOptions& opt = {}) {
  const auto& g = source.graph();
  require(g.kind() == GraphKind::FullCube, ErrorCode::Precondition, "transfer takes an H(n-1) partition");
  const int n = g.n() + 1;
  require(n % 2 == 0, ErrorCode::Parity, "transfer targets 1/2H(n) with n even");
  require(source.k() == 2, ErrorCode::Shape, "transfer is defined for 2-partitions");
  const auto sp = detail::require_equitable(source, "input partition", opt.threads);
  require(sp.a() - sp.c() == -1, ErrorCode::EigenvalueMismatch,
          "input matrix " + sp.to_string() + " does not have eigenvalue -1");
  const auto claim = thm2_forward(sp, n);
  Partition target(CubeGraph::halved(n), 2, source.labels());
  return detail::certify(std::move(target), claim, opt);
}

/// Inverse of thm2_transfer: drop the last coordinate.
[[nodiscard]] inline Partition thm2_untransfer(const Partition& p) {
  require(p.graph().kind() == GraphKind::HalvedEven, ErrorCode::Precondition, "expected a 1/2H(n) partition");
  return {CubeGraph::full(p.graph().n() - 1), p.k(), p.labels()};
}

// ---------------------------------------------------------------------------
// Completely regular codes of covering radius 3 and 4

/// Cells (C, C^(2)) of 1/2H(n) for an even-weight code of covering radius 3 in H(n).
[[nodiscard]] inline Construction radius3_partition(const UnrestrictedCode& code, const ConstructOptions& opt = {}) {
  require(code.even_weight(), ErrorCode::Parity, "code must have even-weight words only");
  const auto layers = code.distance_layers();
  require(layers.covering_radius() == 3, ErrorCode::Radius,
          "covering radius is " + std::to_string(layers.covering_radius()) + ", expected 3");
  const CubeGraph h = CubeGraph::halved(code.n());
  auto p = Partition::from_function(h, 2, [&](word_t w) { return layers.distance[w] == 0 ? 0 : 1; });
  const auto outcome = verify_equitable(p, {opt.threads});
  require(outcome.equitable, ErrorCode::NotEquitable, "(C, C^(2)) is not equitable; the code is not completely regular");
  return detail::certify(std::move(p), outcome.matrix, opt);
}

/// Cells (C^(1), C^(3)) of 1/2H(n)' for an even-weight code of covering radius 4 in H(n).
[[nodiscard]] inline Construction radius4_partition(const UnrestrictedCode& code, const ConstructOptions& opt = {}) {
  require(code.even_weight(), ErrorCode::Parity, "code must have even-weight words only");
  const auto layers = code.distance_layers();
  require(layers.covering_radius() == 4, ErrorCode::Radius,
          "covering radius is " + std::to_string(layers.covering_radius()) + ", expected 4");
  const CubeGraph h = CubeGraph::halved_odd(code.n());
  auto p = Partition::from_function(h, 2, [&](word_t w) { return layers.distance[w] == 1 ? 0 : 1; });
  const auto outcome = verify_equitable(p, {opt.threads});
  require(outcome.equitable, ErrorCode::NotEquitable, "(C^(1), C^(3)) is not equitable; the code is not completely regular");
  return detail::certify(std::move(p), outcome.matrix, opt);
}

/// Cell 0 = union of the C_i^(1), cell 1 = intersection of the C_i^(3), for
/// radius-4 codes with a common matrix whose first layers are disjoint.
[[nodiscard]] inline Construction union_translates_radius4(const std::vector<UnrestrictedCode>& codes,
                                                           const ConstructOptions& opt = {}) {
  require(!codes.empty(), ErrorCode::EmptyCode, "need at least one code");
  const int n = codes.front().n();
  std::optional<QuotientMatrix> common;
  std::vector<label_t> owner(std::size_t{1} << n, 255);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    require(codes[i].n() == n, ErrorCode::Shape, "codes of different lengths");
    const auto single = radius4_partition(codes[i], opt);
    const auto m = single.verified.value_or(single.claimed);
    require(!common || *common == m, ErrorCode::EigenvalueMismatch, "codes have different quotient matrices");
    common = m;
    for (auto w : single.partition.cell(0)) {
      require(owner[w] == 255, ErrorCode::TranslateCollision,
              "first layers of codes " + std::to_string(owner[w]) + " and " + std::to_string(i) + " meet at " +
                  format_word(w, n));
      owner[w] = static_cast<label_t>(i);
    }
  }
  const CubeGraph h = CubeGraph::halved_odd(n);
  auto p = Partition::from_function(h, 2, [&](word_t w) { return owner[w] == 255 ? 1 : 0; });
  const auto t = static_cast<std::int64_t>(codes.size());
  const auto& s = *common;
  const auto claim = QuotientMatrix::two_by_two(s.a() + (t - 1) * s.c(), s.b() - (t - 1) * s.c(), t * s.c(),
                                                s.d() - (t - 1) * s.c());
  return detail::certify(std::move(p), claim, opt);
}

// ---------------------------------------------------------------------------
// Linear partitions

/// N(sigma) = #{ {i,j} : b_i + b_j = sigma } over the syndromes reachable by
/// even-weight words, where b_i are the columns of B (parity rows after the first).
struct PairSumReport {
  int rows = 0;                                ///< number of rows of B
  std::map<word_t, std::uint64_t> counts;      ///< syndrome -> N(sigma), every reachable syndrome listed
  bool constant_on_nonzero = false;            ///< the linear-partition certificate
  std::optional<std::uint64_t> nonzero_value;  ///< common value when constant
};

[[nodiscard]] inline PairSumReport pair_sum_report(int n, const std::vector<word_t>& parity_rows) {
  PairSumReport r;
  r.rows = static_cast<int>(parity_rows.size()) - 1;
  require(r.rows <= 63, ErrorCode::Shape, "too many parity rows");
  std::vector<word_t> columns(static_cast<std::size_t>(n), 0);
  for (int row = 1; row <= r.rows; ++row)
    for (int c = 1; c <= n; ++c)
      if (parity_rows[static_cast<std::size_t>(row)] >> bit_of_coordinate(n, c) & 1U)
        columns[static_cast<std::size_t>(c - 1)] |= word_t{1} << (r.rows - row);
  std::vector<word_t> pair_sums;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto sigma = columns[static_cast<std::size_t>(i)] ^ columns[static_cast<std::size_t>(j)];
      ++r.counts[sigma];
      pair_sums.push_back(sigma);
    }
  // Close under addition: every syndrome of an even-weight word.
  const auto basis = gf2::rref(pair_sums);
  require(basis.size() <= 24, ErrorCode::Precondition, "syndrome space too large to tabulate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    word_t sigma = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (mask >> i & 1U) sigma ^= basis[i];
    r.counts.try_emplace(sigma, 0);
  }
  r.constant_on_nonzero = true;
  for (const auto& [sigma, count] : r.counts) {
    if (sigma == 0) continue;
    if (!r.nonzero_value) r.nonzero_value = count;
    else if (*r.nonzero_value != count) r.constant_on_nonzero = false;
  }
  if (!r.constant_on_nonzero) r.nonzero_value.reset();
  return r;
}

struct LinearPartition {
  LinearCode code;
  Partition partition;
  VerificationOutcome outcome;
  PairSumReport report;
};

/// Partition (C, complement) of 1/2H(n) for the code with parity checks (1; B).
[[nodiscard]] inline LinearPartition linear_partition(int n, const std::vector<word_t>& parity_rows,
                                                      const ConstructOptions& opt = {}) {
  require(!parity_rows.empty() && parity_rows.front() == low_mask(n), ErrorCode::Form,
          "the first parity-check row must be all ones");
  auto code = kernel_code(n, parity_rows);
  const CubeGraph h = CubeGraph::halved(n);
  require(code.size() < h.vertex_count(), ErrorCode::DegenerateCell, "the code is the whole even-weight space");
  auto p = Partition::from_function(h, 2, [&](word_t w) { return code.contains(w) ? 0 : 1; });
  auto outcome = verify_equitable(p, {opt.threads});
  if (outcome.equitable) p.set_claimed(outcome.matrix);
  return {std::move(code), std::move(p), std::move(outcome), pair_sum_report(n, parity_rows)};
}

// ---------------------------------------------------------------------------
// Unions

/// Union of t cosets of an even linear code C0 whose partition (C0, rest) of
/// 1/2H(n) is equitable with [[a,b],[c,d]]; the result has
/// [[a+(t-1)c, b-(t-1)c], [tc, d-(t-1)c]].
[[nodiscard]] inline Construction merge_cosets(const LinearCode& base, int t,
                                               const std::optional<std::vector<word_t>>& representatives = std::nullopt,
                                               const ConstructOptions& opt = {}) {
  const int n = base.n();
  const CubeGraph h = CubeGraph::halved(n);
  for (auto b : base.basis()) require(parity_of(b) == 0, ErrorCode::Parity, "base code must be even");
  const auto s = detail::require_equitable(Partition::from_function(h, 2, [&](word_t w) { return base.contains(w) ? 0 : 1; }),
                                           "base partition", opt.threads);
  const auto coset_count = h.vertex_count() / base.size();
  require(t >= 1 && static_cast<std::uint64_t>(t) < coset_count, ErrorCode::Bound,
          "t = " + std::to_string(t) + " must satisfy 1 <= t < " + std::to_string(coset_count));

  std::vector<word_t> reps;
  if (representatives) {
    require(static_cast<int>(representatives->size()) == t, ErrorCode::Shape, "need exactly t representatives");
    std::set<word_t> seen;
    for (auto r : *representatives) {
      require(h.contains(r), ErrorCode::Parity, "representative " + format_word(r, n) + " has odd weight");
      require(seen.insert(base.reduce(r)).second, ErrorCode::DuplicateCoset,
              "representative " + format_word(r, n) + " repeats a coset");
    }
    reps = *representatives;
  } else {
    // Smallest even words whose cosets are not yet taken.
    std::set<word_t> seen;
    for (word_t w = 0; static_cast<int>(reps.size()) < t; ++w) {
      if (parity_of(w) == 0 && seen.insert(base.reduce(w)).second) reps.push_back(w);
    }
  }
  std::set<word_t> chosen;
  for (auto r : reps) chosen.insert(base.reduce(r));
  auto p = Partition::from_function(h, 2, [&](word_t w) { return chosen.count(base.reduce(w)) ? 0 : 1; });
  const std::int64_t tm = t - 1;
  const auto claim = QuotientMatrix::two_by_two(s.a() + tm * s.c(), s.b() - tm * s.c(), t * s.c(), s.d() - tm * s.c());
  return detail::certify(std::move(p), claim, opt);
}

/// (C0 ∪ P0, C1 ∩ P1) for equitable 2-partitions with cospectral matrices and
/// disjoint first cells; matrix [[a'+c'', b'-c''], [c'+c'', d'-c'']].
[[nodiscard]] inline Construction union_disjoint(const Partition& pc, const Partition& pp,
                                                 const ConstructOptions& opt = {}) {
  require(pc.graph() == pp.graph(), ErrorCode::GraphMismatch, "partitions live on different graphs");
  require(pc.k() == 2 && pp.k() == 2, ErrorCode::Shape, "union is defined for 2-partitions");
  const auto s1 = detail::require_equitable(pc, "first partition", opt.threads);
  const auto s2 = detail::require_equitable(pp, "second partition", opt.threads);
  require(s1.a() - s1.c() == s2.a() - s2.c(), ErrorCode::EigenvalueMismatch,
          "matrices " + s1.to_string() + " and " + s2.to_string() + " are not cospectral");
  std::vector<label_t> labels(pc.labels().size());
  bool any_rest = false;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const bool in_c = pc.labels()[v] == 0;
    const bool in_p = pp.labels()[v] == 0;
    require(!(in_c && in_p), ErrorCode::CellOverlap,
            "first cells share vertex " + format_word(pc.graph().vertex(v), pc.graph().n()));
    labels[v] = (in_c || in_p) ? 0 : 1;
    any_rest = any_rest || labels[v] == 1;
  }
  require(any_rest, ErrorCode::DegenerateCell, "the union covers every vertex");
  const auto claim =
      QuotientMatrix::two_by_two(s1.a() + s2.c(), s1.b() - s2.c(), s1.c() + s2.c(), s1.d() - s2.c());
  return detail::certify(Partition(pc.graph(), 2, std::move(labels)), claim, opt);
}

// ---------------------------------------------------------------------------
// Block sums

namespace detail {

inline word_t fold_blocks(word_t w, int n, int t) {
  word_t out = 0;
  for (int i = 0; i < t; ++i) out ^= (w >> (i * n)) & low_mask(n);
  return out;
}

}  // namespace detail

/// C^(t)(x_1,...,x_t) = C(x_1 + ... + x_t) on H(tn), matrix tS.
[[nodiscard]] inline Construction times_t_cube(const Partition& p, int t, const ConstructOptions& opt = {}) {
  const auto& g = p.graph();
  require(g.kind() == GraphKind::FullCube, ErrorCode::Precondition, "expected an H(n) partition");
  require(t >= 1 && t * g.n() <= kMaxLength, ErrorCode::Shape, "t * n must be at most 64");
  const auto s = detail::require_equitable(p, "input partition", opt.threads);
  const int n = g.n();
  auto q = Partition::from_function(CubeGraph::full(t * n), p.k(),
                                    [&](word_t w) { return p.label_of(detail::fold_blocks(w, n, t)); });
  return detail::certify(std::move(q), static_cast<std::int64_t>(t) * s, opt);
}

/// The same block-sum labeling on a halved cube; matrix t^2 S + n t(t-1)/2 Id.
[[nodiscard]] inline Construction times_t_halved(const Partition& p, int t, const ConstructOptions& opt = {}) {
  const auto& g = p.graph();
  require(g.is_halved(), ErrorCode::Precondition, "expected a halved-cube partition");
  require(t >= 1 && t * g.n() <= kMaxLength, ErrorCode::Shape, "t * n must be at most 64");
  const auto s = detail::require_equitable(p, "input partition", opt.threads);
  const int n = g.n();
  // weight(x_1 + ... + x_t) has the parity of the total weight, so the kind is preserved.
  auto q = Partition::from_function(CubeGraph(g.kind(), t * n), p.k(),
                                    [&](word_t w) { return p.label_of(detail::fold_blocks(w, n, t)); });
  const std::int64_t tt = t;
  auto claim = tt * tt * s;
  for (int i = 0; i < claim.k(); ++i) claim(i, i) += static_cast<std::int64_t>(n) * tt * (tt - 1) / 2;
  return detail::certify(std::move(q), claim, opt);
}

// ---------------------------------------------------------------------------
// Splitting

/// A partition of one cell into faces of a common dimension s.
class FacePartition {
 public:
  FacePartition(const Partition& host, int cell, std::vector<Face> faces)
      : graph_(host.graph()), cell_(cell), faces_(std::move(faces)), owner_(host.labels().size(), -1) {
    require(!faces_.empty() || host.cell_sizes()[static_cast<std::size_t>(cell)] == 0, ErrorCode::FaceCover,
            "no faces given");
    s_ = faces_.empty() ? 0 : faces_.front().dimension();
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const auto& face = faces_[f];
      require(face.host == graph_, ErrorCode::FaceCover, "face lives on another graph");
      face.validate();
      require(face.dimension() == s_, ErrorCode::FaceCover, "faces have different dimensions");
      for (auto w : face_vertices(face)) {
        auto& o = owner_[graph_.ordinal(w.bits())];
        require(o < 0, ErrorCode::FaceCover, "faces overlap at " + w.to_string());
        require(host.label_of(w.bits()) == cell, ErrorCode::FaceCover, "face leaves the cell at " + w.to_string());
        o = static_cast<int>(f);
      }
    }
    for (std::size_t v = 0; v < owner_.size(); ++v)
      require((owner_[v] >= 0) == (host.label(v) == cell), ErrorCode::FaceCover,
              "vertex " + format_word(graph_.vertex(v), graph_.n()) + " of the cell is not covered");
  }

  [[nodiscard]] int dimension() const noexcept { return s_; }
  [[nodiscard]] int cell() const noexcept { return cell_; }
  [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }

  /// Face containing w (w must lie in the cell).
  [[nodiscard]] const Face& face_of(word_t w) const {
    const auto o = owner_[graph_.ordinal(w)];
    require(o >= 0, ErrorCode::FaceCover, "vertex outside the face-partitioned cell");
    return faces_[static_cast<std::size_t>(o)];
  }

 private:
  CubeGraph graph_;
  int cell_;
  int s_ = 0;
  std::vector<Face> faces_;
  std::vector<int> owner_;
};

/// The 3-cell labeling of 1/2H(2n) built from (P0, P1) and faces of P1.
struct SignedSplit {
  Construction result;
  int n = 0;
  int s = 0;
  QuotientMatrix base;
};

namespace detail {

/// Base matrix [[a,b],[c,d]] of the split input. An empty P0 uses the attached
/// claim, since row 0 cannot be observed.
inline QuotientMatrix split_base(const Partition& p, unsigned threads) {
  require(p.k() == 2, ErrorCode::Shape, "splitting takes a 2-partition");
  require(p.graph().kind() == GraphKind::HalvedEven, ErrorCode::Parity, "splitting takes a 1/2H(n) partition");
  const auto sizes = p.cell_sizes();
  require(sizes[1] > 0, ErrorCode::Precondition, "P1 is empty");
  const auto observed = require_equitable(p, "base partition", threads, true);
  if (sizes[0] > 0) {
    require(!p.claimed() || *p.claimed() == observed, ErrorCode::NotEquitable,
            "base partition does not have its claimed matrix");
    return observed;
  }
  require(p.claimed().has_value(), ErrorCode::Precondition, "an empty P0 needs a claimed (formal) base matrix");
  const auto& claim = *p.claimed();
  require(claim.c() == observed.c() && claim.d() == observed.d(), ErrorCode::NotEquitable,
          "P1 row does not match the claimed base matrix");
  return claim;
}

inline label_t split_label(const Partition& p, const FacePartition& fp, word_t v, int n) {
  const word_t x = v >> n;
  const word_t y = v & low_mask(n);
  const word_t z = x ^ y;
  if (p.label_of(z) == 0) return 0;
  const word_t direction = fp.face_of(z).free_mask;
  const int sign = parity_of(x) ^ parity_of(y & direction);
  return static_cast<label_t>(1 + sign);
}

}  // namespace detail

/// Vertex (x, y) of 1/2H(2n) goes to cell 0 when x + y is in P0, otherwise to
/// cell 1 + sign(x, y) with sign = x_1 + ... + x_n + b.y, b the direction of the
/// face containing x + y. Claimed matrix
/// [[4a+n, 2b, 2b], [4c, 2d+s^2, 2d+n-s^2], [4c, 2d+n-s^2, 2d+s^2]].
[[nodiscard]] inline SignedSplit split(const Partition& p, const FacePartition& fp, const ConstructOptions& opt = {}) {
  require(fp.cell() == 1, ErrorCode::FaceCover, "faces must partition cell 1");
  const auto base = detail::split_base(p, opt.threads);
  const int n = p.graph().n();
  const std::int64_t s = fp.dimension();
  const std::int64_t nn = n;
  const CubeGraph target = CubeGraph::halved(2 * n);
  auto labels = Partition::from_function(target, 3, [&](word_t v) { return detail::split_label(p, fp, v, n); });
  const auto a = base.a(), b = base.b(), c = base.c(), d = base.d();
  const QuotientMatrix claim{{4 * a + nn, 2 * b, 2 * b},
                             {4 * c, 2 * d + s * s, 2 * d + nn - s * s},
                             {4 * c, 2 * d + nn - s * s, 2 * d + s * s}};
  return {detail::certify(std::move(labels), claim, opt, true), n, static_cast<int>(s), base};
}

/// Cells 0 and 1 of the split merged; needs s^2 = 2d + n - 2b and yields
/// [[4a+n+2b, 2b], [4c+2b, 4d+n-2b]].
[[nodiscard]] inline Construction split_merged(const Partition& p, const FacePartition& fp,
                                               const ConstructOptions& opt = {}) {
  const auto base = detail::split_base(p, opt.threads);
  const int n = p.graph().n();
  const std::int64_t s = fp.dimension();
  const auto a = base.a(), b = base.b(), c = base.c(), d = base.d();
  require(s * s == 2 * d + n - 2 * b, ErrorCode::MergeCondition,
          "s^2 = " + std::to_string(s * s) + " but 2d + n - 2b = " + std::to_string(2 * d + n - 2 * b));
  require(fp.cell() == 1, ErrorCode::FaceCover, "faces must partition cell 1");
  const CubeGraph target = CubeGraph::halved(2 * n);
  auto merged = Partition::from_function(target, 2, [&](word_t v) {
    return detail::split_label(p, fp, v, n) == 2 ? 1 : 0;
  });
  const auto claim = QuotientMatrix::two_by_two(4 * a + n + 2 * b, 2 * b, 4 * c + 2 * b, 4 * d + n - 2 * b);
  return detail::certify(std::move(merged), claim, opt);
}

struct SplitFamilyMember {
  Partition base;  ///< (P0, P1) on 1/2H(6), claimed [[c-1,16-c],[c,15-c]]
  FacePartition faces;
};

/// Base partition and edge partition of P1 giving, after split_merged, a
/// 1/2H(12) partition with [[34+2c, 32-2c], [32+2c, 34-2c]], c = 0..14.
[[nodiscard]] inline SplitFamilyMember build_n6_split_family(int c) {
  require(c >= 0 && c <= 14, ErrorCode::Index, "c must be in 0..14");
  constexpr int n = 6;
  const CubeGraph h = CubeGraph::halved(n);
  const LinearCode v(n, {0b111111, 0b000011});
  const auto cosets = v.cosets(true);

  std::vector<word_t> p1_cosets;  // representatives (smallest words) of V-cosets placed in P1
  std::vector<Face> faces;
  auto add_coset_edges = [&](const std::vector<word_t>& coset) {
    // {x, x+000011} and {x+111100, x+111111}: edges along coordinates 5 and 6.
    std::set<word_t> done;
    for (auto w : coset) {
      const auto f = Face::through(h, w, 0b000011);
      if (done.insert(f.anchor).second) faces.push_back(f);
    }
  };
  std::set<word_t> p1;
  if (c % 2 == 0) {
    for (std::size_t i = static_cast<std::size_t>(c / 2); i < cosets.size(); ++i) {
      add_coset_edges(cosets[i]);
      p1.insert(cosets[i].begin(), cosets[i].end());
    }
  } else {
    const std::vector<std::pair<word_t, word_t>> six = {
        {0b000011, 0b001100}, {0b001100, 0b110000}, {0b110000, 0b000011}};  // (vertex, free mask)
    for (auto [w, mask] : six) {
      const auto f = Face::through(h, w, mask);
      faces.push_back(f);
      for (auto x : face_vertices(f)) p1.insert(x.bits());
    }
    int needed = (13 - c) / 2;
    for (const auto& coset : cosets) {
      if (needed == 0) break;
      const bool clash = std::any_of(coset.begin(), coset.end(), [&](word_t w) {
        return p1.count(w) || v.contains(w);
      });
      if (clash) continue;
      add_coset_edges(coset);
      p1.insert(coset.begin(), coset.end());
      --needed;
    }
    require(needed == 0, ErrorCode::Precondition, "not enough cosets avoid the six-word set");
  }
  auto base = Partition::from_function(h, 2, [&](word_t w) { return p1.count(w) ? 1 : 0; });
  base.set_claimed(QuotientMatrix::two_by_two(c - 1, 16 - c, c, 15 - c));
  (void)detail::split_base(base, 1);
  FacePartition fp(base, 1, std::move(faces));
  return {std::move(base), std::move(fp)};
}

}  // namespace hcube
