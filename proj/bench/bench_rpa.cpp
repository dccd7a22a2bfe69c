// Timing comparison between the serial reference decoder and the
// OpenMP-parallel kernels: per-subspace parallelism inside one decode, and
// trial-level parallelism in the simulation loop.
//
//   bench_rpa [decodes-per-config]

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rmdec/rpa.hpp"
#include "rmdec/sim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rmdec;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<LlrVector> make_inputs(const RmCode& code, int count, std::uint64_t seed) {
    ChannelParams ch;
    ch.sigma = ebn0_to_sigma(2.0, static_cast<double>(code.k) / code.n);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<LlrVector> inputs;
    inputs.reserve(count);
    for (int t = 0; t < count; ++t) {
        MessageBits msg(code.k);
        for (auto& b : msg) b = coin(rng) ? 1 : 0;
        inputs.push_back(transmit(encode(code, msg), ch, rng));
    }
    return inputs;
}

void bench_decode(int m, int r, int count) {
    const RmCode code = build_code(m, r);
    const auto inputs = make_inputs(code, count, 1234);

    RpaConfig serial;
    serial.parallel = false;
    RpaConfig parallel;
    parallel.parallel = true;

    double t_serial = 0.0, t_parallel = 0.0;
    for (int pass = 0; pass < 2; ++pass) {  // pass 0 warms up, pass 1 is timed
        auto t0 = clock_type::now();
        for (const auto& llr : inputs) {
            BudgetReport b;
            rpa_decode(code, llr, serial, b);
        }
        t_serial = seconds_since(t0);

        t0 = clock_type::now();
        for (const auto& llr : inputs) {
            BudgetReport b;
            rpa_decode(code, llr, parallel, b);
        }
        t_parallel = seconds_since(t0);
    }
    std::printf("RM(%d,%d)  %4d decodes   serial %8.3f s   parallel %8.3f s   speedup %.2fx\n",
                m, r, count, t_serial, t_parallel, t_serial / t_parallel);
}

void bench_sweep(int workers_a, int workers_b) {
    SimConfig cfg;
    cfg.m = 7;
    cfg.r = 2;
    cfg.ebn0_db = {2.0};
    cfg.max_trials = 4096;
    cfg.min_block_errors = 4096;
    cfg.master_seed = 77;
    DecoderSpec full;
    cfg.decoders = {full};

    auto run = [&](int workers) {
        cfg.workers = workers;
        const auto t0 = clock_type::now();
        run_sweep(cfg);
        return seconds_since(t0);
    };
    run(workers_a);  // warm-up
    const double ta = run(workers_a);
    const double tb = run(workers_b);
    std::printf("sweep RM(7,2) 4096 trials   %d worker(s) %8.3f s   %d worker(s) %8.3f s   "
                "speedup %.2fx\n",
                workers_a, ta, workers_b, tb, ta / tb);
}

}  // namespace

int main(int argc, char** argv) {
    const int count = argc > 1 ? std::stoi(argv[1]) : 64;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
    const int threads = omp_get_max_threads();
#else
    std::printf("OpenMP not available; parallel paths run serially\n");
    const int threads = 1;
#endif
    bench_decode(7, 2, count);
    bench_decode(8, 2, count);
    bench_decode(6, 3, std::max(1, count / 8));
    bench_sweep(1, threads);
    return 0;
}
