#pragma once

#include <ctime>

namespace stylo {

// Process CPU time in seconds. Prefers the POSIX process-cputime clock
// (nanosecond granularity); std::clock is the fallback.
inline double cpu_seconds() {
#if defined(CLOCK_PROCESS_CPUTIME_ID)
    timespec ts;
    if (clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts) == 0) {
        return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
    }
#endif
    return static_cast<double>(std::clock()) / CLOCKS_PER_SEC;
}

} // namespace stylo
