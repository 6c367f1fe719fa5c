#pragma once

// Admissibility of 2x2 quotient matrices for halved cubes: the halved-cube
// spectrum, the integrality / proportion / eigenvalue conditions, the
// distance-count recursion, candidate enumeration, and the correspondence
// between minimum-eigenvalue partitions of 1/2H(n) and eigenvalue -1
// partitions of H(n-1).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/matrix.hpp"

namespace hcube {

/// Eigenvalue theta_i(n) = ((n-2i)^2 - n)/2 of the halved n-cube.
[[nodiscard]] inline std::int64_t theta(int n, int i) {
  require(n >= 2, ErrorCode::Index, "theta needs n >= 2");
  require(i >= 0 && i <= n / 2, ErrorCode::Index,
          "eigenvalue index " + std::to_string(i) + " out of range 0.." + std::to_string(n / 2));
  const std::int64_t m = n - 2 * i;
  return (m * m - n) / 2;
}

/// Distinct adjacency eigenvalues of the graph, decreasing.
[[nodiscard]] inline std::vector<std::int64_t> graph_spectrum(const CubeGraph& g) {
  std::vector<std::int64_t> out;
  if (g.is_halved()) {
    for (int i = 0; i <= g.n() / 2; ++i) out.push_back(theta(g.n(), i));
  } else {
    for (int i = 0; i <= g.n(); ++i) out.push_back(g.n() - 2 * i);
  }
  return out;
}

struct SpectrumPoint {
  int n = 0;
  int index = 0;
  std::int64_t value = 0;
};

/// (row sum, a - c) of a 2x2 quotient matrix.
[[nodiscard]] inline std::pair<std::int64_t, std::int64_t> eigenvalues_2x2(const QuotientMatrix& s) {
  require(s.k() == 2, ErrorCode::Shape, "expected a 2x2 matrix");
  const auto sum = s.common_row_sum();
  require(sum.has_value(), ErrorCode::NotStochastic, "rows of " + s.to_string() + " have different sums");
  return {*sum, s.a() - s.c()};
}

[[nodiscard]] constexpr bool is_power_of_two(std::uint64_t x) noexcept { return x != 0 && (x & (x - 1)) == 0; }

/// Cell sizes forced by double counting the edges between the two cells:
/// |C0| * b = |C1| * c. Empty when they are not integers.
[[nodiscard]] inline std::optional<std::pair<std::uint64_t, std::uint64_t>> implied_cell_sizes(
    const QuotientMatrix& s, std::uint64_t vertex_count) {
  if (s.k() != 2 || s.b() <= 0 || s.c() <= 0) return std::nullopt;
  const auto b = static_cast<std::uint64_t>(s.b());
  const auto c = static_cast<std::uint64_t>(s.c());
  const auto g = std::gcd(b, c);
  const auto parts = (b + c) / g;
  if (vertex_count % parts != 0) return std::nullopt;
  const auto unit = vertex_count / parts;
  return std::make_pair(unit * (c / g), unit * (b / g));
}

struct ConditionReport {
  bool cond1_integrality = false;
  bool cond2_proportion = false;
  bool cond3_eigenvalue = false;
  std::string detail;  ///< first failure, empty when all pass
  std::optional<SpectrumPoint> eigenvalue;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> cell_sizes;

  [[nodiscard]] bool passed() const noexcept { return cond1_integrality && cond2_proportion && cond3_eigenvalue; }
};

/// Nonnegativity / positivity / row sums, the power-of-two proportion test,
/// and membership of a - c in the graph spectrum.
[[nodiscard]] inline ConditionReport check_conditions_1_to_3(const QuotientMatrix& s, const CubeGraph& g) {
  require(s.k() == 2, ErrorCode::Shape, "conditions are stated for 2x2 matrices");
  ConditionReport r;
  const std::int64_t degree = g.degree();
  const bool nonneg = s.a() >= 0 && s.b() > 0 && s.c() > 0 && s.d() >= 0;
  const bool sums = s.row_sum(0) == degree && s.row_sum(1) == degree;
  r.cond1_integrality = nonneg && sums;
  if (!nonneg) r.detail = "entries must be nonnegative with b, c > 0";
  else if (!sums) r.detail = "row sums must equal the degree " + std::to_string(degree);

  if (s.b() > 0 && s.c() > 0) {
    const auto b = static_cast<std::uint64_t>(s.b());
    const auto c = static_cast<std::uint64_t>(s.c());
    const auto parts = (b + c) / std::gcd(b, c);
    // The vertex count is a power of two for every cube kind.
    r.cond2_proportion = is_power_of_two(parts) && parts <= g.vertex_count();
    if (!r.cond2_proportion && r.detail.empty())
      r.detail = "(b+c)/gcd(b,c) = " + std::to_string(parts) + " does not divide " + std::to_string(g.vertex_count());
  } else if (r.detail.empty()) {
    r.detail = "b and c must be positive";
  }

  const auto spectrum = graph_spectrum(g);
  const auto ev = s.a() - s.c();
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    if (spectrum[i] == ev && s.d() - s.b() == ev) r.eigenvalue = SpectrumPoint{g.n(), static_cast<int>(i), ev};
  r.cond3_eigenvalue = r.eigenvalue.has_value();
  if (!r.cond3_eigenvalue && r.detail.empty())
    r.detail = "a - c = " + std::to_string(ev) + " is not an eigenvalue of " + g.description();

  if (r.cond1_integrality && r.cond2_proportion) r.cell_sizes = implied_cell_sizes(s, g.vertex_count());
  return r;
}

/// The matrices S^(0) = Id, S^(2) = S, ..., S^(2*floor(n/2)) of cell counts at
/// Hamming distance i, obtained from
///   S S^(i) = C(n-i+2,2) S^(i-2) + i(n-i) S^(i) + C(i+2,2) S^(i+2).
struct WeightDistributionTable {
  int n = 0;
  QuotientMatrix base;
  std::vector<RationalMatrix> layers;  ///< layers[m] is S^(2m)
  std::vector<bool> integral;
  std::vector<bool> nonnegative;

  /// Hamming distance of the first matrix with a non-integral or negative entry.
  [[nodiscard]] std::optional<int> first_offending_distance() const {
    for (std::size_t m = 0; m < layers.size(); ++m)
      if (!integral[m] || !nonnegative[m]) return static_cast<int>(2 * m);
    return std::nullopt;
  }

  [[nodiscard]] bool passes() const { return !first_offending_distance().has_value(); }

  [[nodiscard]] const RationalMatrix& at_distance(int i) const {
    require(i >= 0 && i % 2 == 0 && static_cast<std::size_t>(i / 2) < layers.size(), ErrorCode::Index,
            "no S^(" + std::to_string(i) + ") in the table");
    return layers[static_cast<std::size_t>(i / 2)];
  }
};

[[nodiscard]] inline WeightDistributionTable recursion_table(const QuotientMatrix& s, int n) {
  require(n >= 2, ErrorCode::Index, "recursion needs n >= 2");
  WeightDistributionTable t;
  t.n = n;
  t.base = s;
  const int k = s.k();
  const RationalMatrix sr(s);
  t.layers.push_back(RationalMatrix::identity(k));
  if (n / 2 >= 1) t.layers.push_back(sr);
  for (int i = 2; i + 2 <= 2 * (n / 2); i += 2) {
    const auto& prev = t.layers[static_cast<std::size_t>(i / 2 - 1)];
    const auto& cur = t.layers[static_cast<std::size_t>(i / 2)];
    RationalMatrix next = sr * cur;
    const Rational back(binomial(n - i + 2, 2));
    const Rational mid(static_cast<std::int64_t>(i) * (n - i));
    const Rational fwd(binomial(i + 2, 2));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) next(r, c) = (next(r, c) - back * prev(r, c) - mid * cur(r, c)) / fwd;
    t.layers.push_back(std::move(next));
  }
  for (const auto& m : t.layers) {
    t.integral.push_back(m.is_integral());
    t.nonnegative.push_back(m.is_nonnegative());
  }
  return t;
}

/// Intersection numbers (b_j, a_j, c_j) of the distance-regular graph g, j = 0..diameter.
struct IntersectionArray {
  std::vector<std::int64_t> b, a, c;
};

[[nodiscard]] inline IntersectionArray intersection_array(const CubeGraph& g) {
  IntersectionArray out;
  const int n = g.n();
  const int diam = g.diameter();
  const std::int64_t k = g.degree();
  for (int j = 0; j <= diam; ++j) {
    std::int64_t bj = 0, cj = 0;
    if (g.is_halved()) {
      bj = static_cast<std::int64_t>(binomial(n - 2 * j, 2));
      cj = static_cast<std::int64_t>(j) * (2 * j - 1);
    } else {
      bj = n - j;
      cj = j;
    }
    if (j == diam) bj = 0;
    out.b.push_back(bj);
    out.c.push_back(cj);
    out.a.push_back(k - bj - cj);
  }
  return out;
}

/// M_j[r][s] = number of cell-s vertices at graph distance j from any cell-r
/// vertex, for j = 0..diameter, forced by A_j being a polynomial in A.
/// Halved kinds reproduce recursion_table.
[[nodiscard]] inline std::vector<RationalMatrix> sphere_count_layers(const QuotientMatrix& s, const CubeGraph& g) {
  const auto ia = intersection_array(g);
  const int k = s.k();
  const RationalMatrix sr(s);
  std::vector<RationalMatrix> layers{RationalMatrix::identity(k), sr};
  for (int j = 1; j < g.diameter(); ++j) {
    const auto& prev = layers[static_cast<std::size_t>(j - 1)];
    const auto& cur = layers[static_cast<std::size_t>(j)];
    RationalMatrix next = sr * cur;
    const Rational aj(ia.a[static_cast<std::size_t>(j)]);
    const Rational bprev(ia.b[static_cast<std::size_t>(j - 1)]);
    const Rational cnext(ia.c[static_cast<std::size_t>(j + 1)]);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) next(r, c) = (next(r, c) - aj * cur(r, c) - bprev * prev(r, c)) / cnext;
    layers.push_back(std::move(next));
  }
  return layers;
}

struct AdmissibilityReport {
  QuotientMatrix matrix;
  CubeGraph graph = CubeGraph::halved(2);
  ConditionReport conditions;
  std::optional<WeightDistributionTable> table;  ///< present when condition 4 was evaluated
  bool cond4_recursion = true;

  [[nodiscard]] bool overall() const noexcept { return conditions.passed() && cond4_recursion; }
};

/// All four conditions; the recursion is evaluated for halved kinds only.
[[nodiscard]] inline AdmissibilityReport check_admissible(const QuotientMatrix& s, const CubeGraph& g) {
  AdmissibilityReport r;
  r.matrix = s;
  r.graph = g;
  r.conditions = check_conditions_1_to_3(s, g);
  if (g.is_halved()) {
    r.table = recursion_table(s, g.n());
    r.cond4_recursion = r.table->passes();
  }
  return r;
}

/// Image of [[c-1, n-c], [c, n-c-1]] (H(n-1), eigenvalue -1) under
/// S = (S'^2 - (n-1) Id)/2 + S', the quotient of the distance-1-or-2 graph
/// of H(n-1), which is 1/2H(n) with the last coordinate dropped.
[[nodiscard]] inline QuotientMatrix thm2_forward(const QuotientMatrix& sp, int n) {
  require(sp.k() == 2, ErrorCode::Shape, "expected a 2x2 matrix");
  require(n >= 2 && n % 2 == 0, ErrorCode::Shape, "the correspondence needs even n");
  const auto c = sp.c();
  require(c >= 1 && c <= n - 1 && sp == QuotientMatrix::two_by_two(c - 1, n - c, c, n - c - 1), ErrorCode::Shape,
          sp.to_string() + " is not of the form [[c-1,n-c],[c,n-c-1]] for n = " + std::to_string(n));
  auto square = sp * sp;
  for (int i = 0; i < 2; ++i) square(i, i) -= n - 1;
  auto out = QuotientMatrix::zero(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = square(i, j) / 2 + sp(i, j);
  return out;
}

[[nodiscard]] inline QuotientMatrix thm2_source(int c, int n) {
  return QuotientMatrix::two_by_two(c - 1, n - c, c, n - c - 1);
}

/// The c with thm2_forward(thm2_source(c, n), n) == s.
[[nodiscard]] inline int thm2_inverse(const QuotientMatrix& s, int n) {
  require(s.k() == 2, ErrorCode::Shape, "expected a 2x2 matrix");
  require(n >= 2 && n % 2 == 0, ErrorCode::NoPreimage, "the correspondence needs even n");
  const auto twice = 2 * s.c();
  if (twice % n == 0) {
    const auto c = twice / n;
    if (c >= 1 && c <= n - 1 && thm2_forward(thm2_source(static_cast<int>(c), n), n) == s) return static_cast<int>(c);
  }
  fail(ErrorCode::NoPreimage, s.to_string() + " is not the image of an H(" + std::to_string(n - 1) +
                                  ") eigenvalue -1 matrix");
}

[[nodiscard]] inline bool thm2_has_preimage(const QuotientMatrix& s, int n) {
  try {
    (void)thm2_inverse(s, n);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Candidate matrices [[a,b],[c,d]] for 1/2H(n) with b >= c and eigenvalue
/// theta_i(n) that pass conditions 1-3, ordered by decreasing a. For the
/// minimum eigenvalue of even n the optional filter keeps only images of the
/// H(n-1) correspondence.
[[nodiscard]] inline std::vector<AdmissibilityReport> enumerate_admissible(int n, int i, bool apply_cond4,
                                                                          bool apply_thm2_filter,
                                                                          GraphKind kind = GraphKind::HalvedEven) {
  require(kind != GraphKind::FullCube, ErrorCode::Precondition, "enumeration is defined for halved cubes");
  require(i >= 1 && i <= n / 2, ErrorCode::Index, "eigenvalue index must be in 1..floor(n/2)");
  const CubeGraph g(kind, n);
  const std::int64_t degree = g.degree();
  const auto ev = theta(n, i);
  std::vector<AdmissibilityReport> out;
  for (std::int64_t c = degree; c >= 1; --c) {
    const auto a = c + ev;
    const auto b = degree - a;
    const auto d = degree - c;
    if (a < 0 || b < c || d < 0) continue;
    const auto s = QuotientMatrix::two_by_two(a, b, c, d);
    AdmissibilityReport r;
    r.matrix = s;
    r.graph = g;
    r.conditions = check_conditions_1_to_3(s, g);
    if (!r.conditions.passed()) continue;
    if (apply_thm2_filter && n % 2 == 0 && i == n / 2 && !thm2_has_preimage(s, n)) continue;
    if (apply_cond4) {
      r.table = recursion_table(s, n);
      r.cond4_recursion = r.table->passes();
      if (!r.cond4_recursion) continue;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hcube
