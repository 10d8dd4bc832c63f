#pragma once

#include <cstddef>
#include <functional>

namespace effkit {

// Worker count: EFFKIT_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Calls body(i) for i in [0, n) across worker_count() threads. Exceptions are
// rethrown on the calling thread (the first one raised wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace effkit
