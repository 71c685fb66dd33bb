#include <benchmark/benchmark.h>

// The packaged benchmark_main archive is LTO bytecode tied to another
// compiler build, so the entry point is provided here.
BENCHMARK_MAIN();
