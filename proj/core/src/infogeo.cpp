#include "a1gm/infogeo.hpp"

#include <cmath>
#include <sstream>

#include "a1gm/errors.hpp"

namespace a1gm {

namespace {

void require_positive_block(const DenseMatrix& B, const char* name) {
    for (std::size_t i = 0; i < B.rows; ++i)
        for (std::size_t j = 0; j < B.cols; ++j)
            if (!(B(i, j) > 0.0) || !std::isfinite(B(i, j))) {
                std::ostringstream os;
                os << "model_from_triple: " << name
                   << " must be strictly positive and finite; found " << B(i, j) << " at (" << i
                   << ", " << j << ")";
                throw input_error(os.str());
            }
}

// Natural parameters solved inductively in lexicographic order (a linear
// extension of the componentwise order): theta(k,l) = log p(k,l) minus the
// sum of theta over every domain element strictly below (k,l). Quadratic in
// the domain size, which is all the oracle needs.
std::vector<double> solve_theta(const PosetModel& m) {
    std::vector<double> theta(m.omega_size(), 0.0);
    const std::size_t kmax = m.I + m.N;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const std::size_t lmax = k <= m.I ? m.J + m.M : m.J;
        for (std::size_t l = 1; l <= lmax; ++l) {
            double below = 0.0;
            for (std::size_t s = 1; s <= k; ++s) {
                const std::size_t tmax = std::min(l, s <= m.I ? m.J + m.M : m.J);
                for (std::size_t t = 1; t <= tmax; ++t) {
                    if (s == k && t == l)
                        continue;
                    below += theta[m.index_of(s, t)];
                }
            }
            theta[m.index_of(k, l)] = std::log(m.p[m.index_of(k, l)]) - below;
        }
    }
    return theta;
}

// Expectation parameters as up-set sums, via two suffix-sum sweeps: one over
// the top I x (J+M) rectangle, one over the extra-row block.
std::vector<double> solve_eta(const PosetModel& m) {
    const std::size_t wide = m.J + m.M;
    // suff_top(k,l) = mass of the top rectangle at rows >= k, cols >= l.
    DenseMatrix suff_top(m.I + 1, wide + 1, 0.0);
    for (std::size_t k = m.I; k >= 1; --k)
        for (std::size_t l = wide; l >= 1; --l)
            suff_top(k - 1, l - 1) = m.p[m.index_of(k, l)] + suff_top(k, l - 1) +
                                     suff_top(k - 1, l) - suff_top(k, l);
    DenseMatrix suff_y(m.N + 1, m.J + 1, 0.0);
    for (std::size_t n = m.N; n >= 1; --n)
        for (std::size_t l = m.J; l >= 1; --l)
            suff_y(n - 1, l - 1) = m.p[m.index_of(m.I + n, l)] + suff_y(n, l - 1) +
                                   suff_y(n - 1, l) - suff_y(n, l);

    std::vector<double> eta(m.omega_size(), 0.0);
    for (std::size_t k = 1; k <= m.I; ++k)
        for (std::size_t l = 1; l <= wide; ++l) {
            double v = suff_top(k - 1, l - 1);
            if (l <= m.J)
                v += suff_y(0, l - 1); // every extra row sits above row k <= I
            eta[m.index_of(k, l)] = v;
        }
    for (std::size_t n = 1; n <= m.N; ++n)
        for (std::size_t l = 1; l <= m.J; ++l)
            eta[m.index_of(m.I + n, l)] = suff_y(n - 1, l - 1);
    // The up-set of the minimum is the whole domain and the masses are
    // normalized, so the exact value is 1; the sweep only gets there up to
    // summation rounding.
    eta[m.index_of(1, 1)] = 1.0;
    return eta;
}

} // namespace

PosetModel model_from_triple(const MatrixTriple& T) {
    validate_triple_shapes(T);
    if (T.X.empty())
        throw input_error("model_from_triple: main block must be nonempty");
    require_positive_block(T.X, "main block");
    require_positive_block(T.Y, "extra-row block");
    require_positive_block(T.Z, "extra-column block");

    PosetModel m;
    m.I = T.X.rows;
    m.J = T.X.cols;
    m.N = T.Y.empty() ? 0 : T.Y.rows;
    m.M = T.Z.empty() ? 0 : T.Z.cols;
    m.p.assign(m.omega_size(), 0.0);

    const double total = total_sum(T.X) + total_sum(T.Y) + total_sum(T.Z);
    for (std::size_t i = 0; i < m.I; ++i)
        for (std::size_t j = 0; j < m.J; ++j)
            m.p[m.index_of(i + 1, j + 1)] = T.X(i, j) / total;
    for (std::size_t n = 0; n < m.N; ++n)
        for (std::size_t j = 0; j < m.J; ++j)
            m.p[m.index_of(m.I + n + 1, j + 1)] = T.Y(n, j) / total;
    for (std::size_t i = 0; i < m.I; ++i)
        for (std::size_t mm = 0; mm < m.M; ++mm)
            m.p[m.index_of(i + 1, m.J + mm + 1)] = T.Z(i, mm) / total;

    m.theta = solve_theta(m);
    m.eta = solve_eta(m);
    return m;
}

double eta_of(const PosetModel& model, std::size_t k, std::size_t l) {
    if (!model.contains(k, l)) {
        std::ostringstream os;
        os << "eta_of: (" << k << ", " << l << ") is outside the domain";
        throw input_error(os.str());
    }
    return model.eta[model.index_of(k, l)];
}

const std::vector<double>& theta_of(const PosetModel& model) { return model.theta; }

std::vector<double> p_from_theta(const PosetModel& model) {
    std::vector<double> out(model.omega_size(), 0.0);
    const std::size_t kmax = model.I + model.N;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const std::size_t lmax = k <= model.I ? model.J + model.M : model.J;
        for (std::size_t l = 1; l <= lmax; ++l) {
            double acc = 0.0;
            for (std::size_t s = 1; s <= k; ++s) {
                const std::size_t tmax = std::min(l, s <= model.I ? model.J + model.M : model.J);
                for (std::size_t t = 1; t <= tmax; ++t)
                    acc += model.theta[model.index_of(s, t)];
            }
            out[model.index_of(k, l)] = std::exp(acc);
        }
    }
    return out;
}

Rank1CheckReport check_simultaneous_rank1(const PosetModel& model, double tol) {
    Rank1CheckReport rep;

    // Interaction side: every natural parameter off the first row and first
    // column of the domain must vanish.
    const std::size_t kmax = model.I + model.N;
    for (std::size_t k = 2; k <= kmax; ++k) {
        const std::size_t lmax = k <= model.I ? model.J + model.M : model.J;
        for (std::size_t l = 2; l <= lmax; ++l) {
            const double v = std::fabs(model.theta[model.index_of(k, l)]);
            if (v > rep.max_theta_violation)
                rep.max_theta_violation = v;
        }
    }

    // Expectation side: pad the absent bottom-right corner with the unique
    // interaction-free completion, renormalize, and test the product form of
    // two-body expectations on the resulting full grid.
    const std::size_t R = model.I + model.N, C = model.J + model.M;
    DenseMatrix q(R, C, 0.0);
    for (std::size_t k = 1; k <= R; ++k) {
        const std::size_t lmax = k <= model.I ? C : model.J;
        for (std::size_t l = 1; l <= lmax; ++l)
            q(k - 1, l - 1) = model.p[model.index_of(k, l)];
    }
    if (model.N > 0 && model.M > 0) {
        const double pivot = model.p[model.index_of(model.I, model.J)];
        for (std::size_t n = 1; n <= model.N; ++n)
            for (std::size_t mm = 1; mm <= model.M; ++mm)
                q(model.I + n - 1, model.J + mm - 1) =
                    model.p[model.index_of(model.I + n, model.J)] *
                    model.p[model.index_of(model.I, model.J + mm)] / pivot;
    }
    const double mass = total_sum(q);
    for (double& v : q.data)
        v /= mass;

    DenseMatrix suff(R + 1, C + 1, 0.0);
    for (std::size_t k = R; k >= 1; --k)
        for (std::size_t l = C; l >= 1; --l)
            suff(k - 1, l - 1) =
                q(k - 1, l - 1) + suff(k, l - 1) + suff(k - 1, l) - suff(k, l);
    for (std::size_t k = 2; k <= R; ++k)
        for (std::size_t l = 2; l <= C; ++l) {
            const double v =
                std::fabs(suff(k - 1, l - 1) - suff(k - 1, 0) * suff(0, l - 1));
            if (v > rep.max_eta_violation)
                rep.max_eta_violation = v;
        }

    rep.theta_ok = rep.max_theta_violation <= tol;
    rep.eta_ok = rep.max_eta_violation <= tol;
    rep.max_violation = std::max(rep.max_theta_violation, rep.max_eta_violation);
    return rep;
}

bool conservation_check(const PosetModel& input_model, const PosetModel& projected_model,
                        double tol) {
    if (input_model.I != projected_model.I || input_model.J != projected_model.J ||
        input_model.N != projected_model.N || input_model.M != projected_model.M)
        throw input_error("conservation_check: models have different block dimensions");

    auto agree = [tol](double x, double y) {
        return std::fabs(x - y) <= tol * std::max({1.0, std::fabs(x), std::fabs(y)});
    };
    for (std::size_t k = 1; k <= input_model.I + input_model.N; ++k)
        if (!agree(eta_of(input_model, k, 1), eta_of(projected_model, k, 1)))
            return false;
    for (std::size_t l = 1; l <= input_model.J + input_model.M; ++l)
        if (!agree(eta_of(input_model, 1, l), eta_of(projected_model, 1, l)))
            return false;
    return true;
}

} // namespace a1gm
