// Compares the serial and the OpenMP scan over a generated system with a
// dense loop structure. Both runs must produce identical reports; the
// point of the benchmark is the per-loop fan-out.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "holarb/market_spec.hpp"

using namespace holarb;

namespace {

double run_once(const Filtration& filtration, const std::string& base, std::size_t max_len,
                bool parallel, std::size_t& loops, LoopClass& verdict) {
    ScanOptions options;
    options.allow_repeat_arrows = true;
    options.parallel = parallel;
    options.max_loops = 5000000;
    auto start = std::chrono::steady_clock::now();
    ScanResult result = scan(filtration, base, max_len, Rat(0), options);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    loops = result.reports.size();
    verdict = result.verdict;
    return seconds;
}

} // namespace

int main(int argc, char** argv) {
    GenOptions gen;
    gen.seed = 42;
    gen.objects = 4;
    gen.max_points = 5;
    gen.arrows = 12;
    std::size_t max_len = 9;
    int iters = 3;

    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto value = [&]() -> long { return i + 1 < argc ? std::atol(argv[++i]) : 0; };
        if (arg == "--seed") gen.seed = static_cast<std::uint64_t>(value());
        else if (arg == "--objects") gen.objects = static_cast<std::size_t>(value());
        else if (arg == "--arrows") gen.arrows = static_cast<std::size_t>(value());
        else if (arg == "--points") gen.max_points = static_cast<std::size_t>(value());
        else if (arg == "--max-len") max_len = static_cast<std::size_t>(value());
        else if (arg == "--iters") iters = static_cast<int>(value());
        else {
            std::fprintf(stderr,
                         "usage: bench_scan [--seed N] [--objects K] [--arrows A] [--points P] "
                         "[--max-len L] [--iters N]\n");
            return 2;
        }
    }

    Filtration filtration = build_validated_filtration(generate_random_system(gen));
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::size_t loops = 0;
    LoopClass verdict = LoopClass::trivial;
    double serial_best = 1e300, parallel_best = 1e300;
    for (int it = 0; it < iters; ++it) {
        std::size_t loops_s = 0, loops_p = 0;
        LoopClass verdict_s{}, verdict_p{};
        double s = run_once(filtration, "t0", max_len, false, loops_s, verdict_s);
        double p = run_once(filtration, "t0", max_len, true, loops_p, verdict_p);
        if (loops_s != loops_p || verdict_s != verdict_p) {
            std::fprintf(stderr, "serial and parallel scans disagree\n");
            return 1;
        }
        loops = loops_s;
        verdict = verdict_s;
        serial_best = std::min(serial_best, s);
        parallel_best = std::min(parallel_best, p);
    }

    std::printf("loops: %zu  verdict: %s\n", loops, to_string(verdict).c_str());
    std::printf("serial:   %8.3f ms\n", serial_best * 1e3);
    std::printf("parallel: %8.3f ms\n", parallel_best * 1e3);
    std::printf("speedup:  %8.2fx\n", serial_best / parallel_best);
    return 0;
}
