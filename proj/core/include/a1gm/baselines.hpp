#ifndef A1GM_BASELINES_HPP
#define A1GM_BASELINES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "a1gm/matrix.hpp"

namespace a1gm {

struct IterativeConfig {
    std::size_t max_iter = 200;
    double tol = 1e-4;
    std::size_t check_every = 10;
    std::uint64_t seed = 0;
    double eps_guard = 1e-12;
};

struct IterativeResult {
    Rank1Factors factors; // w, h only; a, b stay empty
    std::size_t iterations = 0;
    std::vector<double> cost_trace; // masked cost at init, each check, and the end
    bool converged = false;
};

// Rank-1 weighted NMF under masked KL by multiplicative updates. w and h are
// drawn i.i.d. uniform on (0,1) from cfg.seed (w first, then h), then updated
// alternately (h first) with eps_guard in every numerator term and
// denominator. The cost is evaluated at initialization and every
// cfg.check_every iterations; the run stops once
// (cost_prev_check - cost_now)/cost_first < cfg.tol, or at max_iter.
// Masked entries of T are never read.
IterativeResult wnmf_rank1(const MaskMatrix& Phi, const DenseMatrix& T, const IterativeConfig& cfg);

// Alternating imputation: fill missing entries (with the mean of observed
// entries by default, or fill_value when given), then repeat { refit the
// closed-form rank-1 factors of the filled matrix; overwrite the missing
// entries with the new reconstruction } until the masked cost changes by
// less than cfg.tol relative to its initial value, or max_iter.
IterativeResult em_rank1(const MaskMatrix& Phi, const DenseMatrix& T, const IterativeConfig& cfg,
                         std::optional<double> fill_value = std::nullopt);

// Ratio of masked KL costs of two reconstructions of the same data:
// masked_kl(Phi,T,recon_a1gm) / masked_kl(Phi,T,recon_wnmf). Both costs
// zero means both fit exactly and the ratio is 1 by convention.
double relative_error(const MaskMatrix& Phi, const DenseMatrix& T,
                      const DenseMatrix& recon_a1gm, const DenseMatrix& recon_wnmf);

} // namespace a1gm

#endif
