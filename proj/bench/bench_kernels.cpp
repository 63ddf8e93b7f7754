// Timing comparison of the parallel kernels against their serial references.
//
// Both routes must produce identical results; the bench asserts that before
// reporting. Wall times are the best of --repeat runs.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mono/code_model.hpp"
#include "mono/lta.hpp"
#include "mono/monomial.hpp"
#include "mono/oracle.hpp"

using namespace mono;

namespace {

template <typename F>
double best_of(int repeat, F&& fn) {
    double best = 1e30;
    for (int i = 0; i < repeat; ++i) {
        auto start = std::chrono::steady_clock::now();
        fn();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s < best) best = s;
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel timings"};
    int orbit_m = 5;
    int rm_r = 2, rm_m = 5;
    int repeat = 3;
    app.add_option("--orbit-m", orbit_m, "ambient variables for the orbit kernel (max 6)")
        ->capture_default_str();
    app.add_option("--rm-r", rm_r, "Reed-Muller order for the spectrum kernel")
        ->capture_default_str();
    app.add_option("--rm-m", rm_m, "Reed-Muller variables for the spectrum kernel")
        ->capture_default_str();
    app.add_option("--repeat", repeat, "runs per kernel, best wall time wins")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    int failures = 0;

    {
        // orbit of a two-tail kernel: the group walk dominates
        Poly seed = parse_poly("x0*x1 + x2*x3", orbit_m);
        OrbitOptions serial_opt, parallel_opt;
        serial_opt.keep_elements = parallel_opt.keep_elements = true;
        OrbitSummary s, p;
        double ts = best_of(repeat, [&] { s = orbit_serial(seed, serial_opt); });
        double tp = best_of(repeat, [&] { p = orbit(seed, parallel_opt); });
        bool agree = s.size == p.size && s.elements == p.elements;
        if (!agree) ++failures;
        std::printf("orbit of %s at m=%d: %s elements\n", to_string(seed).c_str(), orbit_m,
                    s.size.str().c_str());
        report("  group walk", ts, tp, agree);
    }

    {
        DecreasingSet I = reed_muller(rm_r, rm_m);
        std::printf("spectrum of rm(%d,%d): dimension %zu, %d points\n", rm_r, rm_m, I.dimension(),
                    1 << rm_m);
        OracleOptions serial_opt, parallel_opt;
        serial_opt.parallel = false;
        WeightDistribution s, p;
        double ts = best_of(repeat, [&] { s = full_weight_distribution(I, serial_opt); });
        double tp = best_of(repeat, [&] { p = full_weight_distribution(I, parallel_opt); });
        bool agree = s.entries == p.entries;
        if (!agree) ++failures;
        report("  gray-code walk", ts, tp, agree);
    }

    return failures == 0 ? 0 : 1;
}
