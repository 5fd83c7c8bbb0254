#pragma once

#include <cstddef>
#include <functional>

namespace symnet {

// Worker cap for library-internal parallel loops. Defaults to the
// SYMNET_THREADS environment variable, else the hardware concurrency.
void SetThreadCount(std::size_t threads);
std::size_t ThreadCount();

// Runs body(i) for i in [0, count). The first exception is rethrown.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace symnet
