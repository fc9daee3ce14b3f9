#include "doctest.h"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "exseq/parallel.hpp"

using namespace exseq;

TEST_CASE("every index runs once") {
    std::vector<std::atomic<int>> hits(200);
    parallel_for(hits.size(), [&](std::size_t k) { hits[k]++; }, 4);
    for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("exceptions reach the caller") {
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t k) { if (k == 7) throw std::runtime_error("boom"); }, 3), std::runtime_error);
}

TEST_CASE("thread count") {
    CHECK(thread_count(3) == 3);
    CHECK(thread_count(0) >= 1);
    setenv("EXSEQ_THREADS", "2", 1);
    CHECK(thread_count(0) == 2);
    unsetenv("EXSEQ_THREADS");
}
