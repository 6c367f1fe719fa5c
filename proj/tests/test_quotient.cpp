#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "helpers.hpp"

using namespace hcube;

namespace {

std::set<std::string> as_strings(const std::vector<AdmissibilityReport>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(r.matrix.to_string());
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Precondition;
}

}  // namespace

TEST(Theta, MatchesCharacterSums) {
  for (int n = 2; n <= 16; ++n)
    for (int i = 0; i <= n / 2; ++i) EXPECT_EQ(theta(n, i), oracle::halved_eigenvalue(n, i)) << n << ' ' << i;
}

TEST(Theta, IndexOutOfRange) {
  EXPECT_EQ(code_of([] { (void)theta(12, 7); }), ErrorCode::Index);
  EXPECT_EQ(code_of([] { (void)theta(12, -1); }), ErrorCode::Index);
}

TEST(Theta, SpectrumIsDecreasing) {
  const auto s = graph_spectrum(CubeGraph::halved(12));
  EXPECT_EQ(s, (std::vector<std::int64_t>{66, 44, 26, 12, 2, -4, -6}));
  EXPECT_EQ(graph_spectrum(CubeGraph::full(3)), (std::vector<std::int64_t>{3, 1, -1, -3}));
}

TEST(Matrix, ParseAndFormat) {
  const auto m = QuotientMatrix::parse("[[4,62],[2,64]]");
  EXPECT_EQ(m, QuotientMatrix::two_by_two(4, 62, 2, 64));
  EXPECT_EQ(QuotientMatrix::parse("4,62;2,64"), m);
  EXPECT_EQ(m.to_string(), "[[4,62],[2,64]]");
  EXPECT_EQ(m.to_row_string(), "4,62;2,64");
  EXPECT_THROW((void)QuotientMatrix::parse("[[1,2],[3]]"), Error);
  EXPECT_THROW((void)QuotientMatrix::parse("nonsense"), Error);
}

TEST(Eigenvalues, TwoByTwo) {
  EXPECT_EQ(eigenvalues_2x2(QuotientMatrix::two_by_two(4, 62, 2, 64)), (std::pair<std::int64_t, std::int64_t>{66, 2}));
  EXPECT_EQ(code_of([] { (void)eigenvalues_2x2(QuotientMatrix::two_by_two(1, 2, 3, 4)); }), ErrorCode::NotStochastic);
}

TEST(CellSizes, ProportionalToColumnOfTheOtherCell) {
  // |C0| b = |C1| c.
  const auto sizes = implied_cell_sizes(QuotientMatrix::two_by_two(4, 62, 2, 64), 2048);
  ASSERT_TRUE(sizes);
  EXPECT_EQ(sizes->first, 64U);
  EXPECT_EQ(sizes->second, 1984U);
  const auto s2 = implied_cell_sizes(QuotientMatrix::two_by_two(0, 15, 1, 14), 32);
  ASSERT_TRUE(s2);
  EXPECT_EQ(*s2, (std::pair<std::uint64_t, std::uint64_t>{2, 30}));
  EXPECT_FALSE(implied_cell_sizes(QuotientMatrix::two_by_two(1, 2, 3, 0), 32));
}

TEST(Conditions, EachConditionFailsSeparately) {
  const auto h = CubeGraph::halved(6);
  EXPECT_TRUE(check_conditions_1_to_3(QuotientMatrix::two_by_two(0, 15, 1, 14), h).passed());
  const auto r1 = check_conditions_1_to_3(QuotientMatrix::two_by_two(0, 14, 1, 14), h);
  EXPECT_FALSE(r1.cond1_integrality);
  const auto r2 = check_conditions_1_to_3(QuotientMatrix::two_by_two(12, 3, 7, 8), h);  // 10/1 parts
  EXPECT_FALSE(r2.cond2_proportion);
  const auto r3 = check_conditions_1_to_3(QuotientMatrix::two_by_two(9, 6, 6, 9), h);  // a - c = 3
  EXPECT_TRUE(r3.cond1_integrality);
  EXPECT_TRUE(r3.cond2_proportion);
  EXPECT_FALSE(r3.cond3_eigenvalue);
}

TEST(Recursion, ExampleOneTwelve) {
  const auto s = QuotientMatrix::two_by_two(4, 62, 2, 64);
  const auto t = recursion_table(s, 12);
  const auto expected = QuotientMatrix::two_by_two(-1, 496, 16, 479);
  ASSERT_TRUE(t.at_distance(4).is_integral());
  EXPECT_EQ(t.at_distance(4).to_integer(), expected);
  EXPECT_EQ(t.at_distance(8).to_integer(), expected);
  EXPECT_FALSE(t.passes());
  EXPECT_EQ(t.first_offending_distance(), 4);
  EXPECT_FALSE(check_admissible(s, CubeGraph::halved(12)).overall());
}

TEST(Recursion, RowSumsAreSphereSizes) {
  for (int n = 4; n <= 12; n += 2)
    for (int i = 1; i <= n / 2; ++i)
      for (const auto& r : enumerate_admissible(n, i, true, true)) {
        const auto t = recursion_table(r.matrix, n);
        for (std::size_t m = 0; m < t.layers.size(); ++m) {
          const auto sizes = t.layers[m].to_integer();
          EXPECT_EQ(sizes.row_sum(0), oracle::choose(n, static_cast<std::int64_t>(2 * m)));
          EXPECT_EQ(sizes.row_sum(1), oracle::choose(n, static_cast<std::int64_t>(2 * m)));
        }
      }
}

TEST(Recursion, AgreesWithSphereCountLayers) {
  for (int n = 3; n <= 12; ++n)
    for (int i = 1; i <= n / 2; ++i)
      for (const auto& r : enumerate_admissible(n, i, false, false)) {
        const auto t = recursion_table(r.matrix, n);
        const auto layers = sphere_count_layers(r.matrix, CubeGraph::halved(n));
        ASSERT_EQ(layers.size(), t.layers.size());
        for (std::size_t m = 0; m < layers.size(); ++m) EXPECT_EQ(layers[m], t.layers[m]);
      }
}

TEST(Recursion, FullCubeLayersSumToBinomials) {
  const auto layers = sphere_count_layers(QuotientMatrix::two_by_two(4, 5, 5, 4), CubeGraph::full(9));
  ASSERT_EQ(layers.size(), 10U);
  for (std::size_t j = 0; j < layers.size(); ++j) {
    const auto m = layers[j].to_integer();
    EXPECT_EQ(m.row_sum(0), oracle::choose(9, static_cast<std::int64_t>(j)));
  }
}

TEST(Thm2, ClosedForm) {
  for (int n = 4; n <= 16; n += 2)
    for (int c = 1; c < n; ++c) {
      const auto s = thm2_forward(thm2_source(c, n), n);
      EXPECT_EQ(s, QuotientMatrix::two_by_two(n * (c - 1) / 2, (n - c) * n / 2, c * n / 2, n * (n - 1 - c) / 2));
      EXPECT_EQ(s.a() - s.c(), theta(n, n / 2));
      EXPECT_EQ(thm2_inverse(s, n), c);
    }
  EXPECT_EQ(thm2_forward(QuotientMatrix::two_by_two(4, 5, 5, 4), 10), QuotientMatrix::two_by_two(20, 25, 25, 20));
}

TEST(Thm2, Errors) {
  EXPECT_EQ(code_of([] { (void)thm2_inverse(QuotientMatrix::two_by_two(1, 5, 3, 3), 4); }), ErrorCode::NoPreimage);
  EXPECT_EQ(code_of([] { (void)thm2_forward(QuotientMatrix::two_by_two(1, 2, 1, 2), 4); }), ErrorCode::Shape);
  EXPECT_FALSE(thm2_has_preimage(QuotientMatrix::two_by_two(11, 17, 15, 13), 8));
}

TEST(Enumerate, QuarterCube) {
  EXPECT_EQ(as_strings(enumerate_admissible(4, 1, true, true)), (std::set<std::string>{"[[3,3],[3,3]]"}));
  EXPECT_EQ(as_strings(enumerate_admissible(4, 2, true, true)),
            (std::set<std::string>{"[[0,6],[2,4]]", "[[2,4],[4,2]]"}));
  EXPECT_EQ(as_strings(enumerate_admissible(4, 2, false, false)),
            (std::set<std::string>{"[[0,6],[2,4]]", "[[1,5],[3,3]]", "[[2,4],[4,2]]"}));
}

TEST(Enumerate, OrderedByDecreasingC) {
  const auto rs = enumerate_admissible(12, 4, false, true);
  for (std::size_t i = 1; i < rs.size(); ++i) EXPECT_GT(rs[i - 1].matrix.c(), rs[i].matrix.c());
}

// Independent restatement of conditions 1-3 (b >= c) and the minimum-eigenvalue filter.
TEST(Enumerate, MatchesDirectScan) {
  for (int n = 3; n <= 14; ++n) {
    const std::int64_t k = n * (n - 1) / 2;
    const std::int64_t vcount = std::int64_t{1} << (n - 1);
    for (int i = 1; i <= n / 2; ++i) {
      const auto ev = oracle::halved_eigenvalue(n, i);
      std::set<std::string> expected;
      for (std::int64_t c = 1; c <= k; ++c) {
        const auto a = c + ev, b = k - a, d = k - c;
        if (a < 0 || b < c || d < 0) continue;
        const auto g = std::gcd(b, c);
        const auto parts = (b + c) / g;
        if ((parts & (parts - 1)) != 0 || parts > vcount) continue;
        if (n % 2 == 0 && i == n / 2 && (2 * c) % n != 0) continue;
        expected.insert(QuotientMatrix::two_by_two(a, b, c, d).to_string());
      }
      EXPECT_EQ(as_strings(enumerate_admissible(n, i, false, true)), expected) << n << ' ' << i;
    }
  }
}
