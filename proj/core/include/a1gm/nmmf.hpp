#ifndef A1GM_NMMF_HPP
#define A1GM_NMMF_HPP

#include "a1gm/matrix.hpp"

namespace a1gm {

// How nonpositive entries are treated by the closed-form solvers.
//   strict: any entry <= 0 in a nonempty block is rejected with an error
//           naming the first offending index (the optimality guarantee
//           holds only for positive data).
//   clamp:  entries below clamp_eps are raised to clamp_eps before solving,
//           for callers who accept approximate handling of zeros.
enum class ZeroPolicy { strict, clamp };

inline constexpr double kDefaultClampEps = 1e-12;

// Closed-form global minimizer of the shared-factor rank-1 cost
// D(X,w⊗h) + alpha*D(Y,a⊗h) + beta*D(Z,w⊗b) over nonnegative factors:
//
//   w_i = sqrt(S(X))/(S(X)+beta*S(Z)) * (rowsum_X(i) + beta*rowsum_Z(i))
//   h_j = sqrt(S(X))/(S(X)+alpha*S(Y)) * (colsum_X(j) + alpha*colsum_Y(j))
//   a_n = rowsum_Y(n)/sqrt(S(X))
//   b_m = colsum_Z(m)/sqrt(S(X))
//
// One pass over each block: O(IJ + NJ + IM). Factors are returned in the
// canonical scaling S(w) = S(h) = sqrt(S(X)).
Rank1Factors best_rank1_nmmf(const MatrixTriple& T, double alpha, double beta,
                             ZeroPolicy policy = ZeroPolicy::strict,
                             double clamp_eps = kDefaultClampEps);

// Specialization with no extra rows or columns: w_i = rowsum(i)/sqrt(S(X)),
// h_j = colsum(j)/sqrt(S(X)), so (w⊗h)_ij = rowsum_i*colsum_j/S(X).
// Identical by construction to best_rank1_nmmf with empty Y and Z.
Rank1Factors best_rank1_nmf(const DenseMatrix& X,
                            ZeroPolicy policy = ZeroPolicy::strict,
                            double clamp_eps = kDefaultClampEps);

} // namespace a1gm

#endif
