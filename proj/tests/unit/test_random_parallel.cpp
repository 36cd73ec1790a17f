#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "semion/errors.hpp"
#include "semion/parallel.hpp"
#include "semion/random.hpp"

using namespace semion;

TEST(Substream, SameKeyReproducesSequence) {
  Rng a = substream(42, 7, StreamPurpose::Visons);
  Rng b = substream(42, 7, StreamPurpose::Visons);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(Substream, DifferentKeysDiffer) {
  const auto first = [](std::uint64_t seed, std::uint64_t idx, StreamPurpose p) {
    Rng r = substream(seed, idx, p);
    return r();
  };
  const auto base = first(42, 7, StreamPurpose::Visons);
  EXPECT_NE(base, first(43, 7, StreamPurpose::Visons));
  EXPECT_NE(base, first(42, 8, StreamPurpose::Visons));
  EXPECT_NE(base, first(42, 7, StreamPurpose::Disorder));
}

TEST(Splitmix, IsInjectiveOnSample) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < 1000; ++i) out.push_back(splitmix64(i));
  std::sort(out.begin(), out.end());
  EXPECT_EQ(std::adjacent_find(out.begin(), out.end()), out.end());
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (std::size_t workers : {1u, 3u, 8u}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), workers, [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST(ParallelFor, RethrowsBodyException) {
  EXPECT_THROW(parallel_for(100, 4,
                            [](std::size_t i) {
                              if (i == 37) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(ParallelFor, ZeroItemsIsNoop) {
  bool called = false;
  parallel_for(0, 4, [&](std::size_t) { called = true; });
  EXPECT_FALSE(called);
}

TEST(WorkerCount, EnvOverride) {
  ::setenv("SEMION_WORKERS", "3", 1);
  EXPECT_EQ(default_worker_count(), 3u);
  ::setenv("SEMION_WORKERS", "zero", 1);
  EXPECT_THROW(default_worker_count(), ParameterError);
  ::setenv("SEMION_WORKERS", "-2", 1);
  EXPECT_THROW(default_worker_count(), ParameterError);
  ::unsetenv("SEMION_WORKERS");
  EXPECT_GE(default_worker_count(), 1u);
}
