#pragma once

#include <cstddef>
#include <functional>

namespace exseq {

// EXSEQ_THREADS, 0 or unset = hardware concurrency
unsigned thread_count(unsigned requested = 0);

// runs body(k) for k in [0, n) on worker threads; exceptions are rethrown
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace exseq
