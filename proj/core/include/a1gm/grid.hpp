#ifndef A1GM_GRID_HPP
#define A1GM_GRID_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "a1gm/matrix.hpp"

namespace a1gm {

// Row and column index sets touched by at least one missing entry,
// each sorted ascending. Derived solely from the mask.
struct GridSets {
    std::vector<std::size_t> s1; // rows containing >= 1 zero
    std::vector<std::size_t> s2; // columns containing >= 1 zero
};

// A pair of self-inverse permutations (each a product of disjoint
// transpositions) moving all missing rows/columns to the end.
// Stored in gather form: permuted(i, j) = original(perm1[i], perm2[j]).
struct PermutationPair {
    std::vector<std::size_t> perm1; // rows
    std::vector<std::size_t> perm2; // columns
};

// Output of the grid pipeline: dominant factors for the full input shape,
// the missing-value increase rate of the grid expansion, and the masked
// reconstruction cost on the original mask (the expanded-mask cost is kept
// as a diagnostic for how much the expansion discarded).
struct A1gmResult {
    std::vector<double> c; // row factor, length rows
    std::vector<double> d; // column factor, length cols
    double increase_rate = 1.0;
    double masked_cost = 0.0;          // against the original mask
    double masked_cost_expanded = 0.0; // against the expanded mask
};

// Intermediate artifacts of the pipeline, for verification tools that need
// to inspect the permuted blocks or the factors before re-permutation.
struct A1gmDecomposition {
    MaskMatrix expanded;
    GridSets sets;
    PermutationPair perms;
    MatrixTriple triple;  // permuted observed blocks X (I×J), Y (N×J), Z (I×M)
    Rank1Factors factors; // solver output in the permuted frame
    A1gmResult result;
};

GridSets grid_sets(const MaskMatrix& Phi);

// True iff the zero set of Phi is exactly s1 × s2. Since every zero lies in
// the product set by construction, equality of counts decides it.
bool is_grid_like(const MaskMatrix& Phi);

// Returns a mask whose zeros are exactly s1 × s2, together with the
// increase rate |s1|*|s2| / (original zero count), 1 when there are no
// zeros. Throws mask_error when the product set would cover every row or
// every column (too many missing values for the pipeline to proceed).
std::pair<MaskMatrix, double> expand_to_grid(const MaskMatrix& Phi);

// Builds the self-inverse permutations that move the rows in G.s1 into the
// last |s1| positions and the columns in G.s2 into the last |s2| positions:
// the kth smallest member of s1 not already in the tail block is swapped
// with the kth smallest tail index not in s1 (and likewise for columns).
PermutationPair build_permutations(const GridSets& G, std::size_t rows, std::size_t cols);

// End-to-end pipeline: expand the mask to grid form, permute the missing
// block to the bottom-right corner, split off the observed blocks X, Y, Z,
// apply the closed-form solver with unit block weights, concatenate and
// re-permute the factors. O(rows * cols) total.
A1gmResult a1gm(const MaskMatrix& Phi, const DenseMatrix& T);

// Same pipeline, returning every intermediate stage.
A1gmDecomposition a1gm_decompose(const MaskMatrix& Phi, const DenseMatrix& T);

// Permutation helpers (gather semantics: out[i] = in[perm[i]]).
std::vector<std::size_t> identity_permutation(std::size_t n);
std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& p);
std::vector<double> permute_vector(const std::vector<double>& v, const std::vector<std::size_t>& p);
DenseMatrix permute_rows_cols(const DenseMatrix& M, const std::vector<std::size_t>& rp,
                              const std::vector<std::size_t>& cp);
MaskMatrix permute_rows_cols(const MaskMatrix& Phi, const std::vector<std::size_t>& rp,
                             const std::vector<std::size_t>& cp);

} // namespace a1gm

#endif
