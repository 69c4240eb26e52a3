#pragma once

#include <omp.h>

#include <atomic>

namespace madlat {

// Execution mode for the scan kernels.  Every parallel kernel in this library
// has a serial reference twin; tests compare the two and the bench target
// times them side by side.
enum class ExecMode { Serial, OpenMP };

inline std::atomic<ExecMode>& exec_mode_flag() {
    static std::atomic<ExecMode> mode{ExecMode::OpenMP};
    return mode;
}

inline ExecMode exec_mode() { return exec_mode_flag().load(std::memory_order_relaxed); }
inline void set_exec_mode(ExecMode m) { exec_mode_flag().store(m, std::memory_order_relaxed); }

inline void set_thread_count(int n) {
    if (n > 0) omp_set_num_threads(n);
}

}  // namespace madlat
