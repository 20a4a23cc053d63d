#include "a1gm/grid.hpp"

#include <sstream>

#include "a1gm/errors.hpp"
#include "a1gm/nmmf.hpp"

namespace a1gm {

namespace {

// Rows [r0, r0+nr) x columns [c0, c0+nc) of M as a fresh matrix.
DenseMatrix block_of(const DenseMatrix& M, std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) {
    DenseMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out(i, j) = M(r0 + i, c0 + j);
    return out;
}

std::vector<double> concat(const std::vector<double>& u, const std::vector<double>& v) {
    std::vector<double> out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

// Self-inverse permutation on [0, n) moving the members of S (sorted) into
// the tail block B = [n-|S|, n): the kth smallest member of S outside B is
// swapped with the kth smallest non-member inside B.
std::vector<std::size_t> tail_swap_permutation(const std::vector<std::size_t>& S, std::size_t n) {
    std::vector<std::size_t> perm = identity_permutation(n);
    if (S.empty())
        return perm;
    std::vector<char> in_s(n, 0);
    for (std::size_t idx : S)
        in_s[idx] = 1;
    const std::size_t cutoff = n - S.size();
    std::vector<std::size_t> movers; // S ∩ [0, cutoff), ascending
    for (std::size_t i = 0; i < cutoff; ++i)
        if (in_s[i])
            movers.push_back(i);
    std::vector<std::size_t> slots; // complement of S ∩ [cutoff, n), ascending
    for (std::size_t i = cutoff; i < n; ++i)
        if (!in_s[i])
            slots.push_back(i);
    for (std::size_t k = 0; k < movers.size(); ++k)
        std::swap(perm[movers[k]], perm[slots[k]]);
    return perm;
}

void require_mask_shape(const MaskMatrix& Phi, const DenseMatrix& T) {
    if (Phi.rows != T.rows || Phi.cols != T.cols) {
        std::ostringstream os;
        os << "a1gm: mask is " << Phi.rows << "x" << Phi.cols << " but data is " << T.rows << "x"
           << T.cols;
        throw input_error(os.str());
    }
}

} // namespace

GridSets grid_sets(const MaskMatrix& Phi) {
    std::vector<char> row_hit(Phi.rows, 0), col_hit(Phi.cols, 0);
    for (std::size_t i = 0; i < Phi.rows; ++i)
        for (std::size_t j = 0; j < Phi.cols; ++j)
            if (Phi(i, j) == 0) {
                row_hit[i] = 1;
                col_hit[j] = 1;
            }
    GridSets G;
    for (std::size_t i = 0; i < Phi.rows; ++i)
        if (row_hit[i])
            G.s1.push_back(i);
    for (std::size_t j = 0; j < Phi.cols; ++j)
        if (col_hit[j])
            G.s2.push_back(j);
    return G;
}

bool is_grid_like(const MaskMatrix& Phi) {
    const GridSets G = grid_sets(Phi);
    return Phi.zero_count() == G.s1.size() * G.s2.size();
}

std::pair<MaskMatrix, double> expand_to_grid(const MaskMatrix& Phi) {
    const std::size_t zeros = Phi.zero_count();
    if (zeros == 0)
        return {Phi, 1.0};
    const GridSets G = grid_sets(Phi);
    if (G.s1.size() == Phi.rows || G.s2.size() == Phi.cols) {
        std::ostringstream os;
        os << "expand_to_grid: too many missing values ("
           << (G.s1.size() == Phi.rows ? "every row" : "every column")
           << " contains one); no complete block would remain";
        throw mask_error(os.str());
    }
    MaskMatrix out(Phi.rows, Phi.cols, 1);
    for (std::size_t i : G.s1)
        for (std::size_t j : G.s2)
            out(i, j) = 0;
    const double rate =
        static_cast<double>(G.s1.size() * G.s2.size()) / static_cast<double>(zeros);
    return {std::move(out), rate};
}

PermutationPair build_permutations(const GridSets& G, std::size_t rows, std::size_t cols) {
    if (G.s1.size() > rows || G.s2.size() > cols)
        throw input_error("build_permutations: index set larger than the dimension");
    PermutationPair P;
    P.perm1 = tail_swap_permutation(G.s1, rows);
    P.perm2 = tail_swap_permutation(G.s2, cols);
    return P;
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    return p;
}

std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& p) {
    std::vector<std::size_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[p[i]] = i;
    return inv;
}

std::vector<double> permute_vector(const std::vector<double>& v,
                                   const std::vector<std::size_t>& p) {
    if (v.size() != p.size())
        throw input_error("permute_vector: length mismatch");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[p[i]];
    return out;
}

DenseMatrix permute_rows_cols(const DenseMatrix& M, const std::vector<std::size_t>& rp,
                              const std::vector<std::size_t>& cp) {
    if (rp.size() != M.rows || cp.size() != M.cols)
        throw input_error("permute_rows_cols: permutation length mismatch");
    DenseMatrix out(M.rows, M.cols);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j)
            out(i, j) = M(rp[i], cp[j]);
    return out;
}

MaskMatrix permute_rows_cols(const MaskMatrix& Phi, const std::vector<std::size_t>& rp,
                             const std::vector<std::size_t>& cp) {
    if (rp.size() != Phi.rows || cp.size() != Phi.cols)
        throw input_error("permute_rows_cols: permutation length mismatch");
    MaskMatrix out(Phi.rows, Phi.cols);
    for (std::size_t i = 0; i < Phi.rows; ++i)
        for (std::size_t j = 0; j < Phi.cols; ++j)
            out(i, j) = Phi(rp[i], cp[j]);
    return out;
}

A1gmDecomposition a1gm_decompose(const MaskMatrix& Phi, const DenseMatrix& T) {
    require_mask_shape(Phi, T);

    A1gmDecomposition D;
    auto [expanded, rate] = expand_to_grid(Phi);
    D.expanded = std::move(expanded);
    D.sets = grid_sets(D.expanded);
    D.perms = build_permutations(D.sets, T.rows, T.cols);

    // A mask whose grid sets already sit at the bottom/right (corner masks in
    // particular) gets identity permutations; skip the gather copy then.
    const auto is_identity = [](const std::vector<std::size_t>& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != i)
                return false;
        return true;
    };
    DenseMatrix permuted;
    const bool trivial_perms = is_identity(D.perms.perm1) && is_identity(D.perms.perm2);
    if (!trivial_perms)
        permuted = permute_rows_cols(T, D.perms.perm1, D.perms.perm2);
    const DenseMatrix& Tp = trivial_perms ? T : permuted;
    const std::size_t N = D.sets.s1.size(), M = D.sets.s2.size();
    const std::size_t I = T.rows - N, J = T.cols - M;
    D.triple.X = block_of(Tp, 0, 0, I, J);
    D.triple.Y = block_of(Tp, I, 0, N, J);
    D.triple.Z = block_of(Tp, 0, J, I, M);
    D.factors = best_rank1_nmmf(D.triple, 1.0, 1.0);

    const auto inv1 = invert_permutation(D.perms.perm1);
    const auto inv2 = invert_permutation(D.perms.perm2);
    D.result.c = permute_vector(concat(D.factors.w, D.factors.a), inv1);
    D.result.d = permute_vector(concat(D.factors.h, D.factors.b), inv2);
    D.result.increase_rate = rate;

    const DenseMatrix recon = outer(D.result.c, D.result.d);
    D.result.masked_cost = masked_kl(Phi, T, recon);
    // An expansion that removed nothing leaves the same observed set, so the
    // expanded cost is the same sum; skip the second pass.
    D.result.masked_cost_expanded =
        rate == 1.0 ? D.result.masked_cost : masked_kl(D.expanded, T, recon);
    return D;
}

A1gmResult a1gm(const MaskMatrix& Phi, const DenseMatrix& T) {
    return a1gm_decompose(Phi, T).result;
}

} // namespace a1gm
