#ifndef A1GM_MATRIX_HPP
#define A1GM_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace a1gm {

// Dense row-major matrix of 64-bit floats. Zero rows or columns are valid;
// an empty block is an ordinary value, not a special case.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // row-major, length rows*cols

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::size_t size() const { return rows * cols; }
    bool empty() const { return rows == 0 || cols == 0; }
};

// Binary observation weights: 1 = observed, 0 = missing. Same layout as
// DenseMatrix so the two can be indexed in lockstep.
struct MaskMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> bits; // row-major, entries 0 or 1

    MaskMatrix() = default;
    MaskMatrix(std::size_t r, std::size_t c, std::uint8_t fill = 1)
        : rows(r), cols(c), bits(r * c, fill) {}

    std::uint8_t& operator()(std::size_t i, std::size_t j) { return bits[i * cols + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return bits[i * cols + j]; }
    std::size_t size() const { return rows * cols; }
    std::size_t zero_count() const;
};

// Shared-factor rank-1 decomposition: w⊗h reconstructs the main block,
// a⊗h the extra rows, w⊗b the extra columns. a and b may be empty.
struct Rank1Factors {
    std::vector<double> w;
    std::vector<double> h;
    std::vector<double> a;
    std::vector<double> b;
};

// Input blocks for the shared-factor decomposition: X is I×J, Y stacks N
// extra rows under X's columns, Z hangs M extra columns off X's rows.
// Y and/or Z may be empty.
struct MatrixTriple {
    DenseMatrix X;
    DenseMatrix Y;
    DenseMatrix Z;
};

// result[i][j] = u[i] * v[j]
DenseMatrix outer(const std::vector<double>& u, const std::vector<double>& v);

// Generalized Kullback-Leibler divergence: sum of X*log(X/Yh) - X + Yh with
// the 0*log(0) = 0 convention (the -X + Yh part still contributes).
// Requires X >= 0 everywhere and Yh > 0 wherever X > 0.
double kl_div(const DenseMatrix& X, const DenseMatrix& Yh);

// kl_div restricted to observed entries; masked positions are skipped
// entirely, so their values (even NaN) never influence the result.
double masked_kl(const MaskMatrix& Phi, const DenseMatrix& X, const DenseMatrix& Yh);

// Weighted sum of the three blocks' divergences from their reconstructions:
// D(X, w⊗h) + alpha*D(Y, a⊗h) + beta*D(Z, w⊗b). An empty block, or one whose
// weight is 0, contributes nothing and is not evaluated.
double nmmf_cost(const MatrixTriple& T, const Rank1Factors& F, double alpha, double beta);

double total_sum(const DenseMatrix& M);
double total_sum(const std::vector<double>& v);
std::vector<double> row_sums(const DenseMatrix& M);
std::vector<double> col_sums(const DenseMatrix& M);

// Shape-compatibility check for a triple (throws input_error): Y must share
// X's column count when nonempty, Z must share X's row count when nonempty.
void validate_triple_shapes(const MatrixTriple& T);

} // namespace a1gm

#endif
