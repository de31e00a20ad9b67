#pragma once

#include <omp.h>

namespace hallforge {

enum class Exec { serial, parallel };

/// Parallel only when requested and not already inside a parallel region.
inline bool run_parallel(Exec e) { return e == Exec::parallel && !omp_in_parallel(); }

}  // namespace hallforge
