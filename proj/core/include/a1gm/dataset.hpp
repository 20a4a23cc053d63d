#ifndef A1GM_DATASET_HPP
#define A1GM_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "a1gm/matrix.hpp"

namespace a1gm {

enum class Provenance { csv, synthetic_corner, synthetic_grid };

struct Dataset {
    std::string name;
    DenseMatrix T;
    MaskMatrix Phi;
    Provenance provenance = Provenance::csv;
};

// {"", "NA", "NaN", "?"} — compared after whitespace trimming, before any
// numeric parse. The empty string is always treated as missing, even when a
// custom token list omits it.
const std::vector<std::string>& default_missing_tokens();

// Loads a rectangular numeric CSV and applies the positivity preprocessing,
// in this order: (1) cells matching a missing token are masked out;
// (2) negative values are replaced by their absolute value; (3) observed
// zeros are replaced by the mean of the observed nonzero absolute values.
// Errors on ragged rows, unparsable or non-finite cells, an all-missing
// table, and observed zeros with no nonzero value to average.
Dataset load_csv(const std::string& path,
                 const std::vector<std::string>& missing_tokens = default_missing_tokens(),
                 char delimiter = ',');

// Writes observed values with 17 significant digits and missing cells as
// empty fields, so load_csv(save_csv(ds)) reproduces T and Phi exactly.
void save_csv(const Dataset& ds, const std::string& path, char delimiter = ',');

// n×n matrix of uniform(0,1)+1e-6 entries with a ceil(n*sqrt(frac))-sided
// all-missing block in the bottom-right corner. frac = 0 gives a fully
// observed mask. Deterministic in seed.
Dataset gen_corner_missing(std::size_t n, double frac_missing, std::uint64_t seed);

// n×n matrix of uniform(0,1)+1e-6 entries whose missing set is a random
// product set S1×S2 with |S1| = |S2| = min(ceil(n*sqrt(frac)), n-1), so the
// mask is grid-like by construction. Deterministic in seed.
Dataset gen_grid_missing(std::size_t n, double frac_missing, std::uint64_t seed);

} // namespace a1gm

#endif
