#pragma once

#include <cstddef>
#include <functional>

namespace cheb {

/// Worker count for data-parallel kernels. Initialised from CHEB_THREADS,
/// falling back to std::thread::hardware_concurrency().
unsigned thread_count();
void set_thread_count(unsigned n);

/// Upper bound on bytes a single counting request may allocate.
std::size_t memory_budget_bytes();
void set_memory_budget_bytes(std::size_t bytes);

/// Runs body(i) for i in [0, n) across thread_count() workers. Each index is
/// visited exactly once; callers write into per-index slots and reduce in order
/// afterwards so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cheb
