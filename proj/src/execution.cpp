#include "ladderlab/execution.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace ladderlab {

int configure_threads_from_env() {
  const char* raw = std::getenv("LADDERLAB_THREADS");
  if (raw == nullptr) return 0;
  try {
    const int n = std::stoi(raw);
    if (n <= 0) return 0;
    omp_set_num_threads(n);
    return n;
  } catch (const std::exception&) {
    return 0;
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace ladderlab
