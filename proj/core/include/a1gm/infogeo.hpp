#ifndef A1GM_INFOGEO_HPP
#define A1GM_INFOGEO_HPP

#include <cstddef>
#include <vector>

#include "a1gm/matrix.hpp"

namespace a1gm {

// Log-linear distribution on the L-shaped index domain
//
//   Omega = [1..I]×[1..J]  ∪  [I+1..I+N]×[1..J]  ∪  [1..I]×[J+1..J+M]
//           (main block)      (extra rows)          (extra columns)
//
// ordered componentwise: (s,t) <= (k,l) iff s <= k and t <= l. Extra-row and
// extra-column elements are mutually incomparable. The domain is a down-set
// of the full (I+N)×(J+M) grid: every element below an Omega element is
// itself in Omega, so the natural parameters computed here agree with the
// full grid's wherever both are defined.
//
// p holds the normalized masses, theta the natural parameters (log-space
// interactions solved from p), eta the expectation parameters (up-set sums
// of p). All three are indexed by the same flattened Omega layout: the first
// I rows carry J+M entries each, the next N rows carry J entries each.
// Indices in the API are 1-based, matching the order-theoretic convention
// that (1,1) is the global minimum.
struct PosetModel {
    std::size_t I = 0, J = 0, N = 0, M = 0;
    std::vector<double> p;
    std::vector<double> theta;
    std::vector<double> eta;

    std::size_t omega_size() const { return I * (J + M) + N * J; }
    bool contains(std::size_t k, std::size_t l) const {
        return (k >= 1 && k <= I && l >= 1 && l <= J + M) ||
               (k > I && k <= I + N && l >= 1 && l <= J);
    }
    // Flattened position of (k,l); callers must check contains() first.
    std::size_t index_of(std::size_t k, std::size_t l) const {
        return k <= I ? (k - 1) * (J + M) + (l - 1)
                      : I * (J + M) + (k - I - 1) * J + (l - 1);
    }
};

// Result of the two dual rank-1 characterizations. theta_ok checks that all
// interaction (two-body) natural parameters vanish; eta_ok checks that all
// two-body expectation parameters factor into products of one-body ones.
// The two verdicts agree on every valid model.
struct Rank1CheckReport {
    bool theta_ok = false;
    bool eta_ok = false;
    double max_theta_violation = 0.0;
    double max_eta_violation = 0.0;
    double max_violation = 0.0;
};

// Builds the model from positive blocks: masses are the block entries
// divided by S(X)+S(Y)+S(Z), then theta and eta are computed and stored.
// Requires every nonempty block to be strictly positive and X nonempty.
PosetModel model_from_triple(const MatrixTriple& T);

// Expectation parameter at (k,l): the total mass of the up-set
// {(s,t) in Omega : s >= k, t >= l}. eta(1,1) = 1 exactly.
double eta_of(const PosetModel& model, std::size_t k, std::size_t l);

// The full natural-parameter map in Omega's flattened layout.
const std::vector<double>& theta_of(const PosetModel& model);

// Rebuilds masses from the stored natural parameters by exponentiating
// down-set sums; a roundtrip consistency probe for the solved theta.
std::vector<double> p_from_theta(const PosetModel& model);

// Tests both rank-1 characterizations at the given tolerance.
//
// The theta side reads the stored interaction parameters directly. The eta
// side first pads the missing bottom-right corner of the domain with the
// unique interaction-free completion (corner mass (I+n, J+m) =
// p(I+n,J)*p(I,J+m)/p(I,J)) and renormalizes to unit mass; on the padded
// full grid, vanishing interactions and the product form of two-body
// expectations are exactly equivalent, which makes the two verdicts agree
// in both directions. Testing the product form on the raw L-shaped domain
// would reject valid rank-1 models: truncated up-sets break the product
// identity even when every interaction parameter is zero.
Rank1CheckReport check_simultaneous_rank1(const PosetModel& model, double tol);

// True iff every one-body expectation parameter (eta(k,1) for all k,
// eta(1,l) for all l) of the two models agrees within tol (relative).
// Models must share block dimensions.
bool conservation_check(const PosetModel& input_model, const PosetModel& projected_model,
                        double tol);

} // namespace a1gm

#endif
