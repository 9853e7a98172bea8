#pragma once

#include <cstddef>
#include <functional>

namespace commlab {

/// Number of worker threads used by parallel_for. Defaults to 1; results of
/// every parallel region in this library are independent of this setting.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Split [0, count) into contiguous chunks and run body(begin, end) on each,
/// one chunk per worker thread. Chunks never share output slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace commlab
