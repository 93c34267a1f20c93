# HTTP routes: health, solve, benchmarks
