#pragma once

#include <exception>

#include "ladderlab/execution.hpp"

namespace ladderlab::detail {

// fn(i) for i in [0, n). An exception from any iteration is rethrown on the
// calling thread once the loop is done; with several, the lowest index wins.
template <class Fn>
void for_each_index(long n, Execution execution, Fn&& fn) {
  if (execution == Execution::serial || n < 2) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  long error_index = n;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(ladderlab_for_each_index)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ladderlab::detail
