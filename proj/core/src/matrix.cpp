#include "a1gm/matrix.hpp"

#include <cmath>
#include <sstream>

#include "a1gm/errors.hpp"

namespace a1gm {

namespace {

std::string shape_str(std::size_t r, std::size_t c) {
    std::ostringstream os;
    os << r << "x" << c;
    return os.str();
}

void require_same_shape(const char* who, std::size_t r1, std::size_t c1, std::size_t r2,
                        std::size_t c2) {
    if (r1 != r2 || c1 != c2) {
        std::ostringstream os;
        os << who << ": shape mismatch (" << shape_str(r1, c1) << " vs " << shape_str(r2, c2)
           << ")";
        throw input_error(os.str());
    }
}

// One generalized-KL summand with eager validation. x = 0 contributes y
// alone (the 0*log(0) limit); x > 0 with y <= 0 has no finite divergence.
inline double kl_term(const char* who, double x, double y, std::size_t i, std::size_t j) {
    if (!(x >= 0.0)) { // negatives and NaN both land here
        std::ostringstream os;
        os << who << ": first operand must be nonnegative; found " << x << " at (" << i << ", "
           << j << ")";
        throw input_error(os.str());
    }
    if (x == 0.0) {
        if (!(y >= 0.0)) {
            std::ostringstream os;
            os << who << ": second operand must be nonnegative; found " << y << " at (" << i
               << ", " << j << ")";
            throw input_error(os.str());
        }
        return y;
    }
    if (!(y > 0.0)) {
        std::ostringstream os;
        os << who << ": divergence undefined at (" << i << ", " << j << "): first operand " << x
           << " > 0 but second operand is " << y;
        throw numeric_error(os.str());
    }
    return x * std::log(x / y) - x + y;
}

} // namespace

std::size_t MaskMatrix::zero_count() const {
    std::size_t n = 0;
    for (std::uint8_t b : bits)
        if (b == 0) ++n;
    return n;
}

DenseMatrix outer(const std::vector<double>& u, const std::vector<double>& v) {
    DenseMatrix out(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double ui = u[i];
        for (std::size_t j = 0; j < v.size(); ++j)
            out(i, j) = ui * v[j];
    }
    return out;
}

double kl_div(const DenseMatrix& X, const DenseMatrix& Yh) {
    require_same_shape("kl_div", X.rows, X.cols, Yh.rows, Yh.cols);
    double acc = 0.0;
    for (std::size_t i = 0; i < X.rows; ++i)
        for (std::size_t j = 0; j < X.cols; ++j)
            acc += kl_term("kl_div", X(i, j), Yh(i, j), i, j);
    return acc;
}

double masked_kl(const MaskMatrix& Phi, const DenseMatrix& X, const DenseMatrix& Yh) {
    require_same_shape("masked_kl", Phi.rows, Phi.cols, X.rows, X.cols);
    require_same_shape("masked_kl", X.rows, X.cols, Yh.rows, Yh.cols);
    double acc = 0.0;
    for (std::size_t i = 0; i < X.rows; ++i)
        for (std::size_t j = 0; j < X.cols; ++j)
            if (Phi(i, j) != 0)
                acc += kl_term("masked_kl", X(i, j), Yh(i, j), i, j);
    return acc;
}

double nmmf_cost(const MatrixTriple& T, const Rank1Factors& F, double alpha, double beta) {
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw input_error("nmmf_cost: block weights must be nonnegative");
    validate_triple_shapes(T);
    if (F.w.size() != T.X.rows || F.h.size() != T.X.cols)
        throw input_error("nmmf_cost: factor lengths do not match the main block");
    if (!T.Y.empty() && F.a.size() != T.Y.rows)
        throw input_error("nmmf_cost: row-factor length does not match the extra-row block");
    if (!T.Z.empty() && F.b.size() != T.Z.cols)
        throw input_error("nmmf_cost: column-factor length does not match the extra-column block");

    double cost = kl_div(T.X, outer(F.w, F.h));
    if (alpha > 0.0 && !T.Y.empty())
        cost += alpha * kl_div(T.Y, outer(F.a, F.h));
    if (beta > 0.0 && !T.Z.empty())
        cost += beta * kl_div(T.Z, outer(F.w, F.b));
    return cost;
}

double total_sum(const DenseMatrix& M) {
    double acc = 0.0;
    for (double v : M.data)
        acc += v;
    return acc;
}

double total_sum(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v)
        acc += x;
    return acc;
}

std::vector<double> row_sums(const DenseMatrix& M) {
    std::vector<double> out(M.rows, 0.0);
    for (std::size_t i = 0; i < M.rows; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < M.cols; ++j)
            acc += M(i, j);
        out[i] = acc;
    }
    return out;
}

std::vector<double> col_sums(const DenseMatrix& M) {
    std::vector<double> out(M.cols, 0.0);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j)
            out[j] += M(i, j);
    return out;
}

void validate_triple_shapes(const MatrixTriple& T) {
    if (!T.Y.empty() && T.Y.cols != T.X.cols) {
        std::ostringstream os;
        os << "triple: extra-row block has " << T.Y.cols << " columns but the main block has "
           << T.X.cols;
        throw input_error(os.str());
    }
    if (!T.Z.empty() && T.Z.rows != T.X.rows) {
        std::ostringstream os;
        os << "triple: extra-column block has " << T.Z.rows << " rows but the main block has "
           << T.X.rows;
        throw input_error(os.str());
    }
}

} // namespace a1gm
