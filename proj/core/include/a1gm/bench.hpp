#ifndef A1GM_BENCH_HPP
#define A1GM_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "a1gm/baselines.hpp"
#include "a1gm/dataset.hpp"

namespace a1gm {

struct BenchReport {
    std::string dataset;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t n_missing = 0;
    double increase_rate = 1.0;
    double relative_error = 1.0;
    double runtime_a1gm = 0.0; // seconds, median over trials
    double runtime_wnmf = 0.0; // seconds, median over trials
    double relative_runtime = 0.0;
    std::vector<std::uint64_t> seeds; // per-trial baseline seeds
    std::size_t trials = 1;
};

// Times the closed-form pipeline against the multiplicative-update baseline
// over `trials` repetitions (baseline seed = cfg.seed + trial index), after
// one untimed warm-up run of each. Reports median wall-clock runtimes from a
// monotonic clock, their ratio, and the masked-cost ratio on the ORIGINAL
// mask, taking the baseline trial with the lowest final cost.
BenchReport run_compare(const Dataset& ds, const IterativeConfig& cfg, std::size_t trials);

// One JSON object with fixed keys; floats carry 17 significant digits
// (non-finite values are emitted as null).
std::string to_json(const BenchReport& report);

} // namespace a1gm

#endif
