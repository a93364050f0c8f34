#pragma once

namespace ladderlab {

// Every data-parallel kernel has a serial reference path. Both produce
// bitwise-identical results: work is split into fixed blocks whose partial
// results are merged in index order.
enum class Execution { serial, parallel };

// Reads LADDERLAB_THREADS and caps the OpenMP team size; returns the cap in
// effect (0 when the variable is unset or invalid).
int configure_threads_from_env();

int max_threads();

}  // namespace ladderlab
