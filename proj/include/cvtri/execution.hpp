#pragma once

#include <cstddef>
#include <functional>

namespace cvtri {

/// Serial runs are the reference; Parallel distributes grid points over
/// OpenMP threads. Each point writes only its own output slot, so both
/// produce identical results.
enum class Execution { Serial, Parallel };

/// Calls body(i) for i in [0, n). In parallel mode the first exception
/// thrown by any iteration is rethrown after the loop completes.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body);

}  // namespace cvtri
