#include "a1gm/nmmf.hpp"

#include <cmath>
#include <sstream>

#include "a1gm/errors.hpp"

namespace a1gm {

namespace {

struct BlockSums {
    std::vector<double> row;
    std::vector<double> col;
    double total = 0.0;
};

// Accumulate row sums, column sums and the total of one block in a single
// sweep, validating (or clamping) entries as they stream by.
BlockSums sweep_block(const DenseMatrix& M, const char* block, ZeroPolicy policy,
                      double clamp_eps) {
    BlockSums s;
    s.row.assign(M.rows, 0.0);
    s.col.assign(M.cols, 0.0);
    for (std::size_t i = 0; i < M.rows; ++i) {
        for (std::size_t j = 0; j < M.cols; ++j) {
            double v = M(i, j);
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << block << ": entries must be finite; found " << v << " at (" << i << ", "
                   << j << ")";
                throw input_error(os.str());
            }
            if (policy == ZeroPolicy::clamp) {
                if (v < clamp_eps)
                    v = clamp_eps;
            } else if (!(v > 0.0)) {
                std::ostringstream os;
                os << block << ": entries must be strictly positive; found " << v << " at (" << i
                   << ", " << j << ")";
                throw input_error(os.str());
            }
            s.row[i] += v;
            s.col[j] += v;
            s.total += v;
        }
    }
    return s;
}

} // namespace

Rank1Factors best_rank1_nmmf(const MatrixTriple& T, double alpha, double beta, ZeroPolicy policy,
                             double clamp_eps) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha) || !(beta >= 0.0) || !std::isfinite(beta))
        throw input_error("best_rank1_nmmf: block weights must be finite and nonnegative");
    if (policy == ZeroPolicy::clamp && !(clamp_eps > 0.0))
        throw input_error("best_rank1_nmmf: clamp threshold must be positive");
    validate_triple_shapes(T);
    if (T.X.empty())
        throw input_error("best_rank1_nmmf: main block must have at least one entry");

    const BlockSums sx = sweep_block(T.X, "main block", policy, clamp_eps);
    BlockSums sy, sz;
    if (!T.Y.empty())
        sy = sweep_block(T.Y, "extra-row block", policy, clamp_eps);
    if (!T.Z.empty())
        sz = sweep_block(T.Z, "extra-column block", policy, clamp_eps);

    if (!(sx.total > 0.0))
        throw input_error("best_rank1_nmmf: main block must have positive total sum");

    const std::size_t I = T.X.rows, J = T.X.cols;
    const std::size_t N = T.Y.empty() ? 0 : T.Y.rows;
    const std::size_t M = T.Z.empty() ? 0 : T.Z.cols;

    const double sqrt_sx = std::sqrt(sx.total);
    const double w_scale = sqrt_sx / (sx.total + beta * sz.total);
    const double h_scale = sqrt_sx / (sx.total + alpha * sy.total);

    Rank1Factors F;
    F.w.resize(I);
    F.h.resize(J);
    F.a.resize(N);
    F.b.resize(M);
    for (std::size_t i = 0; i < I; ++i)
        F.w[i] = w_scale * (sx.row[i] + (M ? beta * sz.row[i] : 0.0));
    for (std::size_t j = 0; j < J; ++j)
        F.h[j] = h_scale * (sx.col[j] + (N ? alpha * sy.col[j] : 0.0));
    for (std::size_t n = 0; n < N; ++n)
        F.a[n] = sy.row[n] / sqrt_sx;
    for (std::size_t m = 0; m < M; ++m)
        F.b[m] = sz.col[m] / sqrt_sx;
    return F;
}

Rank1Factors best_rank1_nmf(const DenseMatrix& X, ZeroPolicy policy, double clamp_eps) {
    MatrixTriple T;
    T.X = X;
    return best_rank1_nmmf(T, 1.0, 1.0, policy, clamp_eps);
}

} // namespace a1gm
