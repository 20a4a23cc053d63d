#include "a1gm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "a1gm/errors.hpp"
#include "a1gm/rng.hpp"

namespace a1gm {

namespace {

void require_shape(const char* who, const MaskMatrix& Phi, const DenseMatrix& T) {
    if (Phi.rows != T.rows || Phi.cols != T.cols) {
        std::ostringstream os;
        os << who << ": mask is " << Phi.rows << "x" << Phi.cols << " but data is " << T.rows
           << "x" << T.cols;
        throw input_error(os.str());
    }
}

void require_config(const char* who, const IterativeConfig& cfg) {
    if (cfg.max_iter < 1)
        throw input_error(std::string(who) + ": max_iter must be at least 1");
    if (!(cfg.tol > 0.0))
        throw input_error(std::string(who) + ": tol must be positive");
    if (cfg.check_every < 1)
        throw input_error(std::string(who) + ": check_every must be at least 1");
    if (!(cfg.eps_guard > 0.0))
        throw input_error(std::string(who) + ": eps_guard must be positive");
}

void require_observed(const char* who, const MaskMatrix& Phi) {
    if (Phi.zero_count() == Phi.size()) {
        std::ostringstream os;
        os << who << ": mask has no observed entries";
        throw mask_error(os.str());
    }
}

// Masked KL cost of the rank-1 reconstruction w⊗h without materializing it.
// Same conventions and error categories as masked_kl.
double factor_cost(const char* who, const MaskMatrix& Phi, const DenseMatrix& T,
                   const std::vector<double>& w, const std::vector<double>& h) {
    double acc = 0.0;
    for (std::size_t i = 0; i < T.rows; ++i) {
        for (std::size_t j = 0; j < T.cols; ++j) {
            if (Phi(i, j) == 0)
                continue;
            const double x = T(i, j);
            const double y = w[i] * h[j];
            if (!(x >= 0.0)) {
                std::ostringstream os;
                os << who << ": observed entries must be nonnegative; found " << x << " at (" << i
                   << ", " << j << ")";
                throw input_error(os.str());
            }
            if (x == 0.0) {
                acc += y;
                continue;
            }
            if (!(y > 0.0)) {
                std::ostringstream os;
                os << who << ": reconstruction not positive at observed (" << i << ", " << j
                   << ")";
                throw numeric_error(os.str());
            }
            acc += x * std::log(x / y) - x + y;
        }
    }
    return acc;
}

} // namespace

IterativeResult wnmf_rank1(const MaskMatrix& Phi, const DenseMatrix& T,
                           const IterativeConfig& cfg) {
    require_shape("wnmf_rank1", Phi, T);
    require_config("wnmf_rank1", cfg);
    require_observed("wnmf_rank1", Phi);

    const std::size_t I = T.rows, J = T.cols;
    const double eps = cfg.eps_guard;

    SplitMix64 rng(cfg.seed);
    std::vector<double> w(I), h(J);
    for (double& v : w)
        v = rng.next_unit_open();
    for (double& v : h)
        v = rng.next_unit_open();

    IterativeResult res;
    const double cost_first = factor_cost("wnmf_rank1", Phi, T, w, h);
    res.cost_trace.push_back(cost_first);
    const double denom = std::max(cost_first, std::numeric_limits<double>::min());
    double prev_check = cost_first;

    std::vector<double> num(std::max(I, J)), den(std::max(I, J));
    std::size_t t = 0;
    for (t = 1; t <= cfg.max_iter; ++t) {
        // Column factor first, then the row factor against the fresh h.
        std::fill(num.begin(), num.begin() + J, 0.0);
        std::fill(den.begin(), den.begin() + J, 0.0);
        for (std::size_t i = 0; i < I; ++i) {
            const double wi = w[i];
            for (std::size_t j = 0; j < J; ++j)
                if (Phi(i, j) != 0) {
                    num[j] += T(i, j) * wi / (wi * h[j] + eps);
                    den[j] += wi;
                }
        }
        for (std::size_t j = 0; j < J; ++j)
            h[j] *= num[j] / (den[j] + eps);

        for (std::size_t i = 0; i < I; ++i) {
            double ni = 0.0, di = 0.0;
            const double wi = w[i];
            for (std::size_t j = 0; j < J; ++j)
                if (Phi(i, j) != 0) {
                    ni += T(i, j) * h[j] / (wi * h[j] + eps);
                    di += h[j];
                }
            w[i] *= ni / (di + eps);
        }

        if (t % cfg.check_every == 0 || t == cfg.max_iter) {
            const double now = factor_cost("wnmf_rank1", Phi, T, w, h);
            res.cost_trace.push_back(now);
            if ((prev_check - now) / denom < cfg.tol) {
                res.converged = true;
                break;
            }
            prev_check = now;
        }
    }
    res.iterations = std::min(t, cfg.max_iter);
    res.factors.w = std::move(w);
    res.factors.h = std::move(h);
    return res;
}

IterativeResult em_rank1(const MaskMatrix& Phi, const DenseMatrix& T, const IterativeConfig& cfg,
                         std::optional<double> fill_value) {
    require_shape("em_rank1", Phi, T);
    require_config("em_rank1", cfg);
    require_observed("em_rank1", Phi);
    if (fill_value && (!std::isfinite(*fill_value) || *fill_value < 0.0))
        throw input_error("em_rank1: fill value must be finite and nonnegative");

    // Observed entries must be strictly positive for the refit to be exact.
    double observed_sum = 0.0;
    std::size_t observed_count = 0;
    for (std::size_t i = 0; i < T.rows; ++i)
        for (std::size_t j = 0; j < T.cols; ++j)
            if (Phi(i, j) != 0) {
                const double v = T(i, j);
                if (!(v > 0.0) || !std::isfinite(v)) {
                    std::ostringstream os;
                    os << "em_rank1: observed entries must be strictly positive; found " << v
                       << " at (" << i << ", " << j << ")";
                    throw input_error(os.str());
                }
                observed_sum += v;
                ++observed_count;
            }

    DenseMatrix filled = T;
    const double fill = fill_value ? *fill_value
                                   : observed_sum / static_cast<double>(observed_count);
    for (std::size_t i = 0; i < T.rows; ++i)
        for (std::size_t j = 0; j < T.cols; ++j)
            if (Phi(i, j) == 0)
                filled(i, j) = fill;

    // Closed-form refit of the filled matrix; tolerates zeros in the fill.
    std::vector<double> w(T.rows), h(T.cols);
    auto refit = [&]() {
        const std::vector<double> rs = row_sums(filled);
        const std::vector<double> cs = col_sums(filled);
        const double root = std::sqrt(total_sum(rs));
        for (std::size_t i = 0; i < T.rows; ++i)
            w[i] = rs[i] / root;
        for (std::size_t j = 0; j < T.cols; ++j)
            h[j] = cs[j] / root;
    };

    refit();
    IterativeResult res;
    res.iterations = 1;
    double prev = factor_cost("em_rank1", Phi, T, w, h);
    res.cost_trace.push_back(prev);
    const double denom = std::max(prev, std::numeric_limits<double>::min());

    if (Phi.zero_count() == 0) {
        res.converged = true; // nothing to impute: one refit is the answer
    } else {
        for (std::size_t t = 1; t <= cfg.max_iter; ++t) {
            for (std::size_t i = 0; i < T.rows; ++i)
                for (std::size_t j = 0; j < T.cols; ++j)
                    if (Phi(i, j) == 0)
                        filled(i, j) = w[i] * h[j];
            refit();
            ++res.iterations;
            const double now = factor_cost("em_rank1", Phi, T, w, h);
            res.cost_trace.push_back(now);
            if (std::fabs(prev - now) < cfg.tol * denom) {
                res.converged = true;
                break;
            }
            prev = now;
        }
    }
    res.factors.w = std::move(w);
    res.factors.h = std::move(h);
    return res;
}

double relative_error(const MaskMatrix& Phi, const DenseMatrix& T, const DenseMatrix& recon_a1gm,
                      const DenseMatrix& recon_wnmf) {
    const double num = masked_kl(Phi, T, recon_a1gm);
    const double den = masked_kl(Phi, T, recon_wnmf);
    if (den == 0.0)
        return num == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return num / den;
}

} // namespace a1gm
