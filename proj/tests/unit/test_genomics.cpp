#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "nmaw/error.hpp"
#include "nmaw/genomics/batch.hpp"
#include "nmaw/genomics/chip_maze.hpp"
#include "nmaw/genomics/edit_distance.hpp"
#include "nmaw/genomics/snake.hpp"
#include "nmaw/io/generate.hpp"
#include "oracles.hpp"

using namespace nmaw;
using namespace nmaw::genomics;

namespace {

DnaSequence seq(const char* s) { return DnaSequence(s); }

std::string random_dna(std::mt19937_64& rng, std::size_t m, const char* alphabet = "ACGT") {
  const std::size_t k = std::char_traits<char>::length(alphabet);
  std::string s(m, 'A');
  for (auto& c : s) c = alphabet[rng() % k];
  return s;
}

// Mutates up to `edits` positions so pairs land near the threshold.
std::string mutate(std::mt19937_64& rng, std::string s, int edits) {
  for (int e = 0; e < edits; ++e) {
    const std::size_t pos = rng() % s.size();
    switch (rng() % 3) {
      case 0: s[pos] = "ACGT"[rng() % 4]; break;
      case 1: s.insert(s.begin() + static_cast<long>(pos), "ACGT"[rng() % 4]); s.pop_back(); break;
      default: s.erase(s.begin() + static_cast<long>(pos)); s.push_back("ACGT"[rng() % 4]);
    }
  }
  return s;
}

std::vector<std::vector<int>> as_rows(const ChipMaze& maze) {
  std::vector<std::vector<int>> rows(maze.rows(), std::vector<int>(maze.cols()));
  for (std::size_t r = 0; r < maze.rows(); ++r) {
    for (std::size_t c = 0; c < maze.cols(); ++c) rows[r][c] = maze.at(r, c);
  }
  return rows;
}

const char* const kFigRef = "GGTGCAGAGCTC";
const char* const kFigQuery = "GGTGAGAGTTGT";

}  // namespace

TEST(DnaSequence, AcceptsUppercaseAcgtn) {
  EXPECT_EQ(seq("ACGTN").size(), 5u);
}

TEST(DnaSequence, RejectsLowercaseAndForeignSymbols) {
  for (const char* bad : {"ACgT", "ACUT", "AC T"}) {
    try {
      DnaSequence s(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidSymbol) << bad;
    }
  }
}

TEST(DnaSequence, RejectsEmpty) {
  try {
    DnaSequence s("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(SequencePairBatch, KeepsOrderAndRejectsRaggedPairs) {
  SequencePairBatch batch;
  batch.add(seq("ACGT"), seq("ACGA"));
  batch.add(seq("TTTT"), seq("TTTA"));
  EXPECT_EQ(batch.size(), 2u);
  EXPECT_EQ(batch[1].reference.str(), "TTTT");
  EXPECT_THROW(batch.add(seq("ACG"), seq("ACG")), Error);
  EXPECT_THROW(batch.add(seq("ACGT"), seq("ACG")), Error);
  EXPECT_EQ(batch.size(), 2u);
}

TEST(ChipMaze, PreconditionErrors) {
  const auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;  // sentinel: nothing thrown
  };
  EXPECT_EQ(kind_of([] { build_chip_maze(seq("ACGT"), seq("ACG"), 1); }),
            ErrorKind::LengthMismatch);
  // 2E+1 = 13 > 12
  EXPECT_EQ(kind_of([] { build_chip_maze(seq(kFigRef), seq(kFigQuery), 6); }),
            ErrorKind::ThresholdTooLarge);
  EXPECT_EQ(kind_of([] { build_chip_maze(seq("ACGT"), seq("ACGT"), -1); }),
            ErrorKind::InvalidArgument);
  // 2E+1 = m is allowed.
  EXPECT_NO_THROW(build_chip_maze(seq("ACGTA"), seq("ACGTA"), 2));
}

TEST(ChipMaze, WorkedExampleMainDiagonal) {
  const auto maze = build_chip_maze(seq(kFigRef), seq(kFigQuery), 3);
  ASSERT_EQ(maze.rows(), 7u);
  ASSERT_EQ(maze.cols(), 12u);
  const int expected[] = {0, 0, 0, 0, 1};
  for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(maze.at(3, c), expected[c]) << c;
}

TEST(ChipMaze, IdenticalSequencesGiveFreeMainDiagonal) {
  const auto maze = build_chip_maze(seq("ACGTTGCA"), seq("ACGTTGCA"), 0);
  ASSERT_EQ(maze.rows(), 1u);
  for (std::size_t c = 0; c < maze.cols(); ++c) EXPECT_EQ(maze.at(0, c), 0);
}

TEST(ChipMaze, MatchesDirectDefinitionOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 80;
    const std::string ref = random_dna(rng, m, "ACGTN");
    const std::string query = mutate(rng, ref, static_cast<int>(rng() % 6));
    const int max_e = static_cast<int>((m - 1) / 2);
    const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(max_e, 8) + 1));
    const auto maze = build_chip_maze(DnaSequence(ref), DnaSequence(query), e);
    for (int i = 1; i <= 2 * e + 1; ++i) {
      for (int j = 1; j <= static_cast<int>(m); ++j) {
        ASSERT_EQ(maze.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)),
                  oracle::maze_entry(ref, query, e, i, j))
            << "i=" << i << " j=" << j << " E=" << e;
      }
    }
  }
}

TEST(ChipMaze, CountersTallyInRangeComparisons) {
  const std::size_t m = 50;
  const int e = 4;
  std::mt19937_64 rng(3);
  const std::string ref = random_dna(rng, m);
  KernelCounters c;
  build_chip_maze(DnaSequence(ref), DnaSequence(ref), e, &c);
  // Row with offset d compares m - |d| positions.
  const std::uint64_t compares = (2 * e + 1) * m - static_cast<std::uint64_t>(e * (e + 1));
  EXPECT_EQ(c.flops, compares);
  EXPECT_EQ(c.bytes_read, 2 * compares);
  EXPECT_EQ(c.bytes_written, (2 * e + 1) * m);
}

TEST(SnakeSearch, WorkedExampleNeedsThreeObstacles) {
  const auto maze = build_chip_maze(seq(kFigRef), seq(kFigQuery), 3);
  std::vector<SnakeSegment> path;
  const auto d = snake_search(maze, 3, &path);
  EXPECT_EQ(d.obstacle_count, 3);
  EXPECT_EQ(d.verdict, Verdict::Accept);
  EXPECT_FALSE(d.early_exit);
  EXPECT_EQ(oracle::min_obstacles_exhaustive(as_rows(maze)), 3);
}

TEST(SnakeSearch, AllFreeMazeHasNoObstacles) {
  ChipMaze maze(2, 20);
  for (std::size_t r = 0; r < maze.rows(); ++r) {
    for (std::size_t c = 0; c < maze.cols(); ++c) maze.set(r, c, false);
  }
  const auto d = snake_search(maze, 2);
  EXPECT_EQ(d.obstacle_count, 0);
  EXPECT_TRUE(d.accepted());
}

TEST(SnakeSearch, DissimilarPairExitsEarly) {
  const auto maze = build_chip_maze(seq("AAAA"), seq("TTTT"), 1);
  std::vector<int> costs;
  oracle::all_routing_costs(as_rows(maze), 0, 0, costs);
  ASSERT_FALSE(costs.empty());
  for (const int c : costs) EXPECT_GT(c, 1);

  const auto d = snake_search(maze, 1);
  EXPECT_EQ(d.verdict, Verdict::Reject);
  EXPECT_TRUE(d.early_exit);
  EXPECT_EQ(d.obstacle_count, 2);
}

TEST(SnakeSearch, PathSegmentsAreFreeAndContiguous) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string ref = random_dna(rng, 60);
    const std::string query = mutate(rng, ref, static_cast<int>(rng() % 5));
    const auto maze = build_chip_maze(DnaSequence(ref), DnaSequence(query), 4);
    std::vector<SnakeSegment> path;
    const auto d = snake_search(maze, 4, &path);
    std::size_t next = 0;
    for (const auto& s : path) {
      ASSERT_EQ(s.start, next);
      for (std::size_t c = s.start; c < s.start + s.length; ++c) ASSERT_EQ(maze.at(s.row, c), 0);
      next = s.start + s.length + 1;  // skip the obstacle that ends the run
    }
    if (!d.early_exit) EXPECT_GE(next, maze.cols());
  }
}

// Greedy reach is optimal: the reported count equals the exhaustive minimum
// (or the search stops at E+1 when that minimum exceeds E), and it never
// exceeds the true edit distance.
TEST(SnakeSearchProperty, CountEqualsExhaustiveMinimumAndBoundsEditDistance) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 11 + rng() % 50;
    const int e = static_cast<int>(rng() % 6);
    const std::string ref = random_dna(rng, m);
    const std::string query = mutate(rng, ref, static_cast<int>(rng() % 10));
    const auto maze = build_chip_maze(DnaSequence(ref), DnaSequence(query), e);
    const auto d = snake_search(maze, e);
    const int best = oracle::min_obstacles_exhaustive(as_rows(maze));
    if (best <= e) {
      ASSERT_FALSE(d.early_exit);
      ASSERT_EQ(d.obstacle_count, best) << ref << ' ' << query << " E=" << e;
    } else {
      ASSERT_TRUE(d.early_exit);
      ASSERT_EQ(d.obstacle_count, e + 1);
    }
    const int dist = oracle::levenshtein(ref, query);
    if (dist <= e) ASSERT_LE(d.obstacle_count, dist);
    ASSERT_EQ(d.accepted(), d.obstacle_count <= e);
  }
}

TEST(FilterPair, MatchesMaterializedSearch) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t m = 1 + rng() % 200;  // crosses 64-bit word edges
    const std::string ref = random_dna(rng, m, trial % 4 == 0 ? "ACGTN" : "ACGT");
    const std::string query = mutate(rng, ref, static_cast<int>(rng() % 12));
    const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min<std::size_t>((m - 1) / 2, 12) + 1));
    const DnaSequence r(ref), q(query);
    ASSERT_EQ(filter_pair(r, q, e), snake_search(build_chip_maze(r, q, e), e))
        << ref << ' ' << query << " E=" << e;
  }
}

TEST(FilterPair, ReusedFilterGivesSameAnswers) {
  PairFilter filter(3);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 7 + rng() % 150;
    const DnaSequence r(random_dna(rng, m));
    const DnaSequence q(mutate(rng, r.str(), static_cast<int>(rng() % 6)));
    ASSERT_EQ(filter(r, q), filter_pair(r, q, 3));
  }
}

TEST(EditDistanceBanded, AgreesWithFullTableInsideBand) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 1 + rng() % 60;
    const std::string a = random_dna(rng, m);
    const std::string b = mutate(rng, a, static_cast<int>(rng() % 8));
    const int e = static_cast<int>(rng() % 8);
    const int full = oracle::levenshtein(a, b);
    const auto banded = edit_distance_banded(a, b, e);
    if (full <= e) {
      ASSERT_TRUE(banded.has_value()) << a << ' ' << b << " E=" << e;
      ASSERT_EQ(*banded, full);
    } else {
      ASSERT_FALSE(banded.has_value()) << a << ' ' << b << " E=" << e << " d=" << full;
    }
  }
}

TEST(EditDistanceBanded, LengthMismatchThrows) {
  EXPECT_THROW(edit_distance_banded(std::string_view("ACG"), std::string_view("AC"), 1), Error);
}

TEST(FilterBatch, OutcomesIndependentOfWorkerCount) {
  const auto batch = io::generate_pairs(1500, 100, {0, 12, 0.5, 0.25, 0.25}, 99);
  const auto base = filter_batch(batch, 5, 1);
  for (const unsigned w : {2u, 3u, 8u, 64u}) {
    const auto other = filter_batch(batch, 5, w);
    ASSERT_EQ(other.outcomes.size(), base.outcomes.size());
    for (std::size_t i = 0; i < base.outcomes.size(); ++i) {
      ASSERT_EQ(other.outcomes[i].decision, base.outcomes[i].decision) << "pair " << i;
    }
  }
  EXPECT_EQ(base.stats.pairs, 1500u);
  EXPECT_EQ(base.stats.accepted + base.stats.rejected, 1500u);
  EXPECT_DOUBLE_EQ(base.stats.accept_rate + base.stats.reject_rate, 1.0);
}

TEST(FilterBatch, RecordsPerPairErrors) {
  SequencePairBatch batch;
  batch.add(seq("ACGT"), seq("ACGT"));
  const auto result = filter_batch(batch, 2, 1);  // 2E+1 = 5 > 4
  ASSERT_EQ(result.outcomes.size(), 1u);
  EXPECT_FALSE(result.outcomes[0].ok());
  EXPECT_FALSE(result.outcomes[0].error.empty());
  EXPECT_EQ(result.stats.errors, 1u);
}
