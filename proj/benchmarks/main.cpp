#include <benchmark/benchmark.h>

// The distribution's libbenchmark_main.a is LTO bytecode tied to one exact
// compiler release, so the entry point is built here instead.
BENCHMARK_MAIN();
