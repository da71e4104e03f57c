#pragma once
// Bounded thread pool helpers. CY4_THREADS caps the worker count.

#include <cstddef>
#include <functional>

namespace cy4 {

int thread_count();
void set_thread_count(int n);  // n <= 0 restores the environment default

// Runs f(0..n-1) on up to thread_count() threads; rethrows the first exception.
void parallel_for(size_t n, const std::function<void(size_t)>& f);

}  // namespace cy4
