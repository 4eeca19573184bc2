#pragma once

#include <cstddef>
#include <functional>

namespace nlft {

/// Worker count: NLFT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Each index
/// must write only its own output slot. If any call throws, the exception
/// from the smallest failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nlft
