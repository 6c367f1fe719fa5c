#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"

using namespace hcube;
using testing_support::oracle_quotient;

namespace {

// (V, rest) on 1/2H(6) with V = <111111, 000011>.
Partition v_partition() {
  const LinearCode v(6, {0b111111, 0b000011});
  return Partition::from_function(CubeGraph::halved(6), 2, [&](word_t w) { return v.contains(w) ? 0 : 1; });
}

Partition random_partition(const CubeGraph& g, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, k - 1);
  return Partition::from_function(g, k, [&](word_t) { return pick(rng); });
}

}  // namespace

TEST(PartitionFile, RoundTrip) {
  auto p = v_partition();
  p.set_claimed(QuotientMatrix::two_by_two(1, 14, 2, 13));
  const auto text = partition_to_string(p);
  EXPECT_EQ(text.substr(0, text.find('\n')), "n=6 kind=halved-even k=2");
  const auto q = partition_from_string(text);
  EXPECT_TRUE(q.same_labels(p));
  ASSERT_TRUE(q.claimed());
  EXPECT_EQ(*q.claimed(), *p.claimed());
  EXPECT_EQ(partition_to_string(q), text);
}

TEST(PartitionFile, ManyCellsUseCommas) {
  const auto g = CubeGraph::full(4);
  const auto p = Partition::from_function(g, 16, [](word_t w) { return static_cast<int>(w); });
  const auto text = partition_to_string(p);
  EXPECT_NE(text.find("0,1,2,3"), std::string::npos);
  EXPECT_TRUE(partition_from_string(text).same_labels(p));
}

TEST(PartitionFile, MalformedInputsRaiseParseErrors) {
  const std::vector<std::string> bad = {
      "",
      "n=6 kind=halved-even\n",
      "n=x kind=halved-even k=2\n" + std::string(32, '0') + "\n",
      "n=6 kind=folded k=2\n" + std::string(32, '0') + "\n",
      "n=6 kind=halved-even k=2\n" + std::string(31, '0') + "\n",
      "n=6 kind=halved-even k=2\n" + std::string(33, '0') + "\n",
      "n=6 kind=halved-even k=2\n" + std::string(31, '0') + "2\n",
      "n=6 kind=halved-even k=2 extra=1\n" + std::string(32, '0') + "\n",
      "n=6 kind=halved-even k=2\nS=1,2;3\n" + std::string(32, '0') + "\n",
  };
  for (const auto& text : bad) {
    try {
      (void)partition_from_string(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << e.what();
    }
  }
}

TEST(Verify, ExtractsMatrix) {
  const auto out = verify_equitable(v_partition());
  ASSERT_TRUE(out.equitable);
  EXPECT_EQ(out.matrix, QuotientMatrix::two_by_two(1, 14, 2, 13));
}

TEST(Verify, AgreesWithBruteForceOnRandomLabelings) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const CubeGraph g(static_cast<GraphKind>(trial % 3), n);
    const int k = 1 + trial % 3;
    const auto p = random_partition(g, k, rng);
    const auto out = verify_equitable(p, {1, true});
    const auto expected = oracle_quotient(p);
    EXPECT_EQ(out.equitable, expected.has_value());
    if (out.equitable && expected) {
      EXPECT_EQ(out.matrix.rows(), *expected);
    }
    if (!out.equitable) {
      ASSERT_TRUE(out.witness);
      EXPECT_TRUE(witness_holds(p, *out.witness));
    }
  }
}

TEST(Verify, TamperedLabelIsCaught) {
  auto p = v_partition();
  auto labels = p.labels();
  labels[5] ^= 1;
  Partition bad(p.graph(), 2, labels, QuotientMatrix::two_by_two(1, 14, 2, 13));
  const auto out = verify_equitable(bad);
  EXPECT_FALSE(out.equitable);
  ASSERT_TRUE(out.witness);
  EXPECT_TRUE(witness_holds(bad, *out.witness));
  EXPECT_FALSE(out.confirms());
}

TEST(Verify, WrongClaimIsAMismatch) {
  auto p = v_partition();
  p.set_claimed(QuotientMatrix::two_by_two(2, 13, 1, 14));
  const auto out = verify_equitable(p);
  EXPECT_TRUE(out.equitable);
  EXPECT_TRUE(out.claimed_mismatch);
  EXPECT_FALSE(out.confirms());
}

TEST(Verify, EmptyCellRejectedUnlessAllowed) {
  const auto g = CubeGraph::halved(4);
  const auto p = Partition::from_function(g, 2, [](word_t) { return 1; });
  try {
    (void)verify_equitable(p);
    ADD_FAILURE() << "empty cell accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateCell);
  }
  const auto out = verify_equitable(p, {1, true});
  EXPECT_TRUE(out.equitable);
  EXPECT_EQ(out.matrix, QuotientMatrix::two_by_two(0, 0, 0, 6));
}

TEST(Verify, ThreadCountDoesNotChangeTheResult) {
  std::mt19937_64 rng(11);
  const auto g = CubeGraph::halved(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_partition(g, 2, rng);
    const auto one = verify_equitable(p, {1});
    const auto four = verify_equitable(p, {4});
    EXPECT_EQ(one.equitable, four.equitable);
    ASSERT_EQ(one.witness.has_value(), four.witness.has_value());
    if (one.witness) {
      EXPECT_EQ(one.witness->vertex, four.witness->vertex);
      EXPECT_EQ(one.witness->target, four.witness->target);
      EXPECT_EQ(one.witness->observed, four.witness->observed);
    }
  }
  const auto split = build_n6_split_family(3);
  const auto merged = split_merged(split.base, split.faces);
  EXPECT_EQ(verify_equitable(merged.partition, {1}).matrix, verify_equitable(merged.partition, {4}).matrix);
}

TEST(DistancePartition, RepetitionCodeLayers) {
  for (int n = 3; n <= 10; ++n) {
    const auto d = distance_partition(CubeGraph::full(n), {0, low_mask(n)});
    EXPECT_EQ(d.covering_radius(), n / 2);
    for (int j = 0; j < (n + 1) / 2; ++j) EXPECT_EQ(d.layer_sizes()[static_cast<std::size_t>(j)], 2U * static_cast<std::uint64_t>(oracle::choose(n, j)));
    EXPECT_TRUE(is_completely_regular(CubeGraph::full(n), {0, low_mask(n)}).equitable);
  }
  EXPECT_THROW((void)distance_partition(CubeGraph::full(4), {}), Error);
}

TEST(WeightDistribution, CountsCellsPerLayer) {
  const auto p = v_partition();
  const auto d = distance_partition(p.graph(), {0});
  const auto table = weight_distribution(p, d);
  ASSERT_EQ(table.size(), 2U);
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < d.layers.size(); ++j) {
    EXPECT_EQ(table[0][j] + table[1][j], d.layers[j].size());
    total += table[0][j];
  }
  EXPECT_EQ(total, 4U);
  EXPECT_EQ(table[0][0], 1U);
}

// Empirical counts at every Hamming distance agree with the recursion and with
// a brute-force count of graph-distance spheres.
TEST(DistanceCounts, MatchRecursionAndBruteForce) {
  std::vector<Partition> cases = {v_partition()};
  for (int c : {0, 1, 6, 13}) {
    const auto f = build_n6_split_family(c);
    if (c > 0) cases.push_back(f.base);
  }
  cases.push_back(radius3_partition(UnrestrictedCode::from_linear(LinearCode(6, {0b111111}))).partition);
  for (const auto& p : cases) {
    const auto s = verify_equitable(p).matrix;
    const auto table = recursion_table(s, p.graph().n());
    const auto counts = distance_count_matrices(p);
    const auto brute = oracle::sphere_counts(testing_support::to_oracle(p.graph().kind()), p.graph().n(),
                                             [&](oracle::Word w) { return p.label_of(w); });
    for (std::size_t m = 0; m < table.layers.size(); ++m) {
      ASSERT_TRUE(counts[2 * m]) << s.to_string() << " distance " << 2 * m;
      EXPECT_EQ(*counts[2 * m], table.layers[m].to_integer());
      ASSERT_TRUE(brute[m]);
      EXPECT_EQ(counts[2 * m]->rows(), *brute[m]);
    }
  }
}
