#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"

using namespace hcube;

namespace {

SearchOutcome run(const CubeGraph& g, const QuotientMatrix& s, SearchOptions o = {}) { return search({g, s, o}); }

/// Every 2x2 matrix realized by some labeling, by enumerating all 2^V labelings.
std::set<std::string> realized_matrices(const CubeGraph& g) {
  const auto verts = oracle::vertices(testing_support::to_oracle(g.kind()), g.n());
  const auto count = verts.size();
  std::set<std::string> out;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << count); ++mask) {
    std::int64_t row[2][2] = {{-1, -1}, {-1, -1}};
    bool ok = true;
    for (std::size_t i = 0; i < count && ok; ++i) {
      const int li = mask >> i & 1U ? 0 : 1;
      std::int64_t in0 = 0, total = 0;
      for (std::size_t j = 0; j < count; ++j)
        if (oracle::adjacent(testing_support::to_oracle(g.kind()), verts[i], verts[j])) {
          ++total;
          if (mask >> j & 1U) ++in0;
        }
      if (row[li][0] < 0) {
        row[li][0] = in0;
        row[li][1] = total - in0;
      } else if (row[li][0] != in0) {
        ok = false;
      }
    }
    if (ok) out.insert(QuotientMatrix::two_by_two(row[0][0], row[0][1], row[1][0], row[1][1]).to_string());
  }
  return out;
}

}  // namespace

TEST(Search, QuarterCubeStatuses) {
  const auto g = CubeGraph::halved(4);
  EXPECT_EQ(run(g, QuotientMatrix::two_by_two(3, 3, 3, 3)).status, SearchStatus::Found);
  EXPECT_EQ(run(g, QuotientMatrix::two_by_two(2, 4, 4, 2)).status, SearchStatus::Found);
  EXPECT_EQ(run(g, QuotientMatrix::two_by_two(0, 6, 2, 4)).status, SearchStatus::Found);
  const auto filtered = run(g, QuotientMatrix::two_by_two(1, 5, 3, 3));
  EXPECT_EQ(filtered.status, SearchStatus::PreFilteredNonexistent);
  SearchOptions raw;
  raw.prefilter = false;
  EXPECT_EQ(run(g, QuotientMatrix::two_by_two(1, 5, 3, 3), raw).status, SearchStatus::ExhaustedNone);
}

// Search with and without symmetry breaking decides exactly the matrices that
// some labeling realizes.
TEST(Search, AgreesWithExhaustiveLabelings) {
  for (const auto& g : {CubeGraph::halved(4), CubeGraph::halved(5), CubeGraph::halved_odd(5), CubeGraph::full(4),
                        CubeGraph::full(3)}) {
    const auto truth = realized_matrices(g);
    const std::int64_t k = g.degree();
    for (std::int64_t a = 0; a <= k; ++a)
      for (std::int64_t c = 1; c <= k; ++c) {
        const auto s = QuotientMatrix::two_by_two(a, k - a, c, k - c);
        if (s.b() <= 0) continue;
        const bool exists = truth.count(s.to_string()) > 0;
        for (bool symmetry : {true, false}) {
          SearchOptions o;
          o.prefilter = false;
          o.symmetry_breaking = symmetry;
          const auto r = run(g, s, o);
          ASSERT_NE(r.status, SearchStatus::Aborted);
          EXPECT_EQ(r.status == SearchStatus::Found, exists) << g.description() << ' ' << s.to_string();
        }
        // The prefilter never discards a realizable matrix.
        if (exists) {
          EXPECT_EQ(run(g, s).status, SearchStatus::Found) << g.description() << ' ' << s.to_string();
        }
      }
  }
}

TEST(Search, FoundPartitionsVerify) {
  const auto r = run(CubeGraph::halved(6), QuotientMatrix::two_by_two(0, 15, 1, 14));
  ASSERT_EQ(r.status, SearchStatus::Found);
  ASSERT_FALSE(r.solutions.empty());
  EXPECT_TRUE(verify_equitable(r.solutions.front()).confirms());
  EXPECT_EQ(r.solutions.front().label_of(0), 0);
  ASSERT_TRUE(r.cell_sizes);
  EXPECT_EQ(r.cell_sizes->first, 2U);
}

TEST(Search, NineCube) {
  const auto r = run(CubeGraph::full(9), QuotientMatrix::two_by_two(4, 5, 5, 4));
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(verify_equitable(r.solutions.front()).matrix, QuotientMatrix::two_by_two(4, 5, 5, 4));
}

TEST(Search, PinnedRootDoesNotChangeTheStatus) {
  struct Case {
    CubeGraph g;
    QuotientMatrix s;
  };
  const std::vector<Case> cases = {
      {CubeGraph::halved(4), QuotientMatrix::two_by_two(1, 5, 3, 3)},
      {CubeGraph::halved(5), QuotientMatrix::two_by_two(5, 5, 3, 7)},
      {CubeGraph::halved(6), QuotientMatrix::two_by_two(3, 12, 4, 11)},
      {CubeGraph::halved(6), QuotientMatrix::two_by_two(0, 15, 1, 14)},
      {CubeGraph::halved_odd(5), QuotientMatrix::two_by_two(5, 5, 3, 7)},
  };
  for (const auto& c : cases) {
    SearchOptions base;
    base.prefilter = false;
    const auto reference = run(c.g, c.s, base).status;
    ASSERT_NE(reference, SearchStatus::Aborted);
    for (ordinal_t v : {ordinal_t{1}, c.g.vertex_count() / 3, c.g.vertex_count() - 1}) {
      auto o = base;
      o.root = c.g.vertex(v);
      const auto r = run(c.g, c.s, o);
      EXPECT_EQ(r.status, reference) << c.g.description() << ' ' << c.s.to_string() << " root " << v;
      if (r.status == SearchStatus::Found) {
        EXPECT_EQ(r.solutions.front().label_of(*o.root), 0);
      }
    }
  }
  SearchOptions bad;
  bad.root = 1;
  EXPECT_THROW((void)run(CubeGraph::halved(6), QuotientMatrix::two_by_two(0, 15, 1, 14), bad), Error);
}

TEST(Search, WorkerCountDoesNotChangeTheOutcome) {
  struct Case {
    CubeGraph g;
    QuotientMatrix s;
    bool all;
  };
  const std::vector<Case> cases = {
      {CubeGraph::halved(6), QuotientMatrix::two_by_two(3, 12, 4, 11), false},
      {CubeGraph::halved(6), QuotientMatrix::two_by_two(7, 8, 8, 7), true},
      {CubeGraph::halved(5), QuotientMatrix::two_by_two(5, 5, 3, 7), false},
      {CubeGraph::full(9), QuotientMatrix::two_by_two(4, 5, 5, 4), false},
      {CubeGraph::halved_odd(8), QuotientMatrix::two_by_two(13, 15, 15, 13), false},
  };
  for (const auto& c : cases) {
    SearchOptions one;
    one.find_all = c.all;
    one.prefilter = false;
    auto many = one;
    many.threads = 4;
    const auto a = run(c.g, c.s, one), b = run(c.g, c.s, many);
    EXPECT_EQ(a.status, b.status) << c.s.to_string();
    EXPECT_EQ(a.stats.nodes, b.stats.nodes) << c.s.to_string();
    EXPECT_EQ(a.solution_count, b.solution_count);
    ASSERT_EQ(a.solutions.size(), b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) EXPECT_TRUE(a.solutions[i].same_labels(b.solutions[i]));
  }
}

TEST(Search, FindAllCountsRootedSolutions) {
  const auto g = CubeGraph::halved(4);
  const auto s = QuotientMatrix::two_by_two(2, 4, 4, 2);
  std::uint64_t expected = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (!(mask & 1U) || mask == 255) continue;  // root (ordinal 0) in cell 0, both cells nonempty
    const auto p = Partition::from_function(g, 2, [&](word_t w) { return mask >> g.ordinal(w) & 1U ? 0 : 1; });
    const auto out = verify_equitable(p);
    if (out.equitable && out.matrix == s) ++expected;
  }
  SearchOptions o;
  o.find_all = true;
  o.symmetry_breaking = false;
  const auto r = run(g, s, o);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.solution_count, expected);
  EXPECT_GT(expected, 1U);
}

TEST(Search, ConditionFourPrefilter) {
  const auto r = run(CubeGraph::halved(12), QuotientMatrix::two_by_two(4, 62, 2, 64));
  EXPECT_EQ(r.status, SearchStatus::PreFilteredNonexistent);
  EXPECT_NE(r.reason.find("condition 4"), std::string::npos) << r.reason;
  EXPECT_EQ(run(CubeGraph::halved(6), QuotientMatrix::two_by_two(0, 14, 1, 14)).status,
            SearchStatus::PreFilteredNonexistent);
}

TEST(Search, LimitsAbortInsteadOfDeciding) {
  SearchOptions o;
  o.node_limit = 3;
  o.prefilter = false;
  const auto r = run(CubeGraph::halved_odd(8), QuotientMatrix::two_by_two(12, 16, 16, 12), o);
  EXPECT_EQ(r.status, SearchStatus::Aborted);
  EXPECT_EQ(r.reason, "node limit");
  SearchOptions t;
  t.time_limit_secs = 1e-6;
  t.prefilter = false;
  const auto q = run(CubeGraph::halved(10), QuotientMatrix::two_by_two(28, 17, 15, 30), t);
  EXPECT_EQ(q.status, SearchStatus::Aborted);
  EXPECT_EQ(q.reason, "time limit");
}

TEST(Classify, QuarterCube) {
  const auto entries = classify(4, GraphKind::HalvedEven);
  std::map<std::string, SearchStatus> got;
  for (const auto& e : entries) got[e.matrix.to_string()] = e.outcome.status;
  const std::map<std::string, SearchStatus> expected = {
      {"[[3,3],[3,3]]", SearchStatus::Found},
      {"[[2,4],[4,2]]", SearchStatus::Found},
      {"[[0,6],[2,4]]", SearchStatus::Found},
      {"[[1,5],[3,3]]", SearchStatus::PreFilteredNonexistent},
  };
  EXPECT_EQ(got, expected);
  EXPECT_THROW((void)classify(4, GraphKind::FullCube), Error);
  EXPECT_THROW((void)classify(9, GraphKind::HalvedEven), Error);
}

TEST(Classify, SixCubeEverythingFound) {
  for (auto kind : {GraphKind::HalvedEven, GraphKind::HalvedOdd})
    for (const auto& e : classify(6, kind)) {
      if (e.outcome.status == SearchStatus::PreFilteredNonexistent) continue;
      EXPECT_EQ(e.outcome.status, SearchStatus::Found) << e.matrix.to_string();
    }
  const auto text = classification_text(6, classify(6, GraphKind::HalvedEven));
  EXPECT_EQ(text.substr(0, text.find(':')), "theta_1(6)=5");
}

TEST(Export, CountsVariablesAndConstraints) {
  const auto text = export_instance({CubeGraph::halved(6), QuotientMatrix::two_by_two(0, 15, 1, 14), {}});
  std::istringstream is(text);
  std::string line;
  int vertex_rows = 0, card_rows = 0, binaries = 0;
  bool in_binary = false;
  while (std::getline(is, line)) {
    if (line.rfind(" v", 0) == 0) ++vertex_rows;
    if (line.rfind(" card:", 0) == 0) ++card_rows;
    if (line == "End") in_binary = false;
    if (in_binary) {
      std::istringstream ws(line);
      std::string tok;
      while (ws >> tok) ++binaries;
    }
    if (line == "Binary") in_binary = true;
  }
  EXPECT_EQ(vertex_rows, 32);
  EXPECT_EQ(card_rows, 1);
  EXPECT_EQ(binaries, 32);
  EXPECT_NE(text.find(" card: "), std::string::npos);
  EXPECT_NE(text.find("= 2\nBinary"), std::string::npos);
  EXPECT_EQ(text, export_instance({CubeGraph::halved(6), QuotientMatrix::two_by_two(0, 15, 1, 14), {}}));
  const auto small = export_instance({CubeGraph::halved(4), QuotientMatrix::two_by_two(2, 4, 4, 2), {}});
  EXPECT_NE(small.find(" x7\nEnd"), std::string::npos);
}
