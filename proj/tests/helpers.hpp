#ifndef A1GM_TESTS_HELPERS_HPP
#define A1GM_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "a1gm/matrix.hpp"
#include "a1gm/rng.hpp"

namespace testutil {

inline a1gm::DenseMatrix matrix(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    a1gm::DenseMatrix out(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row)
            out(i, j++) = v;
        ++i;
    }
    return out;
}

inline a1gm::MaskMatrix mask(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    a1gm::MaskMatrix out(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row)
            out(i, j++) = static_cast<std::uint8_t>(v != 0);
        ++i;
    }
    return out;
}

inline std::vector<double> random_vector(std::size_t n, a1gm::SplitMix64& rng, double lo = 0.1) {
    std::vector<double> v(n);
    for (double& x : v)
        x = rng.next_unit_open() + lo;
    return v;
}

inline a1gm::DenseMatrix random_positive(std::size_t r, std::size_t c, a1gm::SplitMix64& rng,
                                         double lo = 0.1) {
    a1gm::DenseMatrix M(r, c);
    for (double& x : M.data)
        x = rng.next_unit_open() + lo;
    return M;
}

inline a1gm::MatrixTriple random_triple(std::size_t I, std::size_t J, std::size_t N,
                                        std::size_t M, a1gm::SplitMix64& rng, double lo = 0.1) {
    a1gm::MatrixTriple T;
    T.X = random_positive(I, J, rng, lo);
    if (N > 0)
        T.Y = random_positive(N, J, rng, lo);
    if (M > 0)
        T.Z = random_positive(I, M, rng, lo);
    return T;
}

// Triple that is simultaneously rank-1 by construction: X = w⊗h, Y = a⊗h,
// Z = w⊗b.
inline a1gm::MatrixTriple rank1_triple(const std::vector<double>& w, const std::vector<double>& h,
                                       const std::vector<double>& a,
                                       const std::vector<double>& b) {
    a1gm::MatrixTriple T;
    T.X = a1gm::outer(w, h);
    if (!a.empty())
        T.Y = a1gm::outer(a, h);
    if (!b.empty())
        T.Z = a1gm::outer(w, b);
    return T;
}

inline double rel_diff(double got, double want) {
    const double scale = std::max({1e-300, std::fabs(got), std::fabs(want)});
    return std::fabs(got - want) / scale;
}

inline double max_rel_diff(const a1gm::DenseMatrix& A, const a1gm::DenseMatrix& B) {
    double worst = 0.0;
    for (std::size_t k = 0; k < A.data.size(); ++k)
        worst = std::max(worst, rel_diff(A.data[k], B.data[k]));
    return worst;
}

inline double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        worst = std::max(worst, rel_diff(a[k], b[k]));
    return worst;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, a1gm::SplitMix64& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next() % (n - i));
        std::swap(p[i], p[j]);
    }
    return p;
}

} // namespace testutil

#endif
