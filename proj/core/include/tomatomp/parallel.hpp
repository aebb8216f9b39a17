#pragma once

#include <cstddef>
#include <functional>

namespace tomatomp {

// Worker count used by the per-line and per-tuple loops. Defaults to the
// TOMATOMP_THREADS environment variable when set, else hardware concurrency.
std::size_t thread_limit();
void set_thread_limit(std::size_t threads);

// Runs body(i) for every i in [0, n). Each index is visited exactly once;
// bodies must not share mutable state. Exceptions propagate (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tomatomp
