#include "a1gm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "a1gm/errors.hpp"
#include "a1gm/rng.hpp"

namespace a1gm {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\f\v";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == delimiter) {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

bool parse_double(const std::string& token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

// Random k-subset of [0, n): the first k slots of a partially shuffled
// identity, returned sorted.
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, SplitMix64& rng) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i)
        pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next() % (n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

DenseMatrix uniform_positive(std::size_t n, SplitMix64& rng) {
    DenseMatrix T(n, n);
    for (double& v : T.data)
        v = rng.next_unit_open() + 1e-6;
    return T;
}

std::string frac_str(double frac) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", frac);
    return buf;
}

void require_gen_args(const char* who, std::size_t n, double frac) {
    if (n < 1)
        throw input_error(std::string(who) + ": size must be at least 1");
    if (!(frac >= 0.0) || frac >= 1.0)
        throw input_error(std::string(who) + ": missing fraction must lie in [0, 1)");
}

} // namespace

const std::vector<std::string>& default_missing_tokens() {
    static const std::vector<std::string> tokens = {"", "NA", "NaN", "?"};
    return tokens;
}

Dataset load_csv(const std::string& path, const std::vector<std::string>& missing_tokens,
                 char delimiter) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("load_csv: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0)
        text.erase(0, 3); // UTF-8 byte-order mark

    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        lines.push_back(cur);
    while (!lines.empty() && trim(lines.back()).empty())
        lines.pop_back();
    if (lines.empty())
        throw input_error("load_csv: '" + path + "' has no rows");

    const std::size_t rows = lines.size();
    const std::size_t cols = split(lines[0], delimiter).size();
    DenseMatrix T(rows, cols);
    MaskMatrix Phi(rows, cols, 1);

    for (std::size_t i = 0; i < rows; ++i) {
        const std::vector<std::string> cells = split(lines[i], delimiter);
        if (cells.size() != cols) {
            std::ostringstream os;
            os << "load_csv: row " << i << " has " << cells.size() << " cells but row 0 has "
               << cols;
            throw input_error(os.str());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const std::string token = trim(cells[j]);
            const bool missing =
                token.empty() || std::find(missing_tokens.begin(), missing_tokens.end(), token) !=
                                     missing_tokens.end();
            if (missing) {
                Phi(i, j) = 0;
                T(i, j) = 0.0;
                continue;
            }
            double value = 0.0;
            if (!parse_double(token, value)) {
                std::ostringstream os;
                os << "load_csv: cell (" << i << ", " << j << ") is not numeric: '" << token
                   << "'";
                throw input_error(os.str());
            }
            if (!std::isfinite(value)) {
                std::ostringstream os;
                os << "load_csv: cell (" << i << ", " << j << ") is not finite: '" << token
                   << "'";
                throw input_error(os.str());
            }
            T(i, j) = value;
        }
    }

    if (Phi.zero_count() == Phi.size())
        throw input_error("load_csv: every cell of '" + path + "' is missing");

    // Positivity preprocessing: negatives become absolute values, then
    // observed zeros become the mean of the observed nonzero values.
    double nonzero_sum = 0.0;
    std::size_t nonzero_count = 0;
    bool has_zero = false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (Phi(i, j) == 0)
                continue;
            const double v = std::fabs(T(i, j));
            T(i, j) = v;
            if (v == 0.0) {
                has_zero = true;
            } else {
                nonzero_sum += v;
                ++nonzero_count;
            }
        }
    if (has_zero) {
        if (nonzero_count == 0)
            throw input_error("load_csv: every observed cell of '" + path +
                              "' is zero; no value to average");
        const double mean = nonzero_sum / static_cast<double>(nonzero_count);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (Phi(i, j) != 0 && T(i, j) == 0.0)
                    T(i, j) = mean;
    }

    Dataset ds;
    ds.name = std::filesystem::path(path).stem().string();
    ds.T = std::move(T);
    ds.Phi = std::move(Phi);
    ds.provenance = Provenance::csv;
    return ds;
}

void save_csv(const Dataset& ds, const std::string& path, char delimiter) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("save_csv: cannot open '" + path + "' for writing");
    char buf[64];
    for (std::size_t i = 0; i < ds.T.rows; ++i) {
        for (std::size_t j = 0; j < ds.T.cols; ++j) {
            if (j > 0)
                out << delimiter;
            if (ds.Phi(i, j) != 0) {
                std::snprintf(buf, sizeof(buf), "%.17g", ds.T(i, j));
                out << buf;
            }
        }
        out << '\n';
    }
    if (!out)
        throw input_error("save_csv: write to '" + path + "' failed");
}

Dataset gen_corner_missing(std::size_t n, double frac_missing, std::uint64_t seed) {
    require_gen_args("gen_corner_missing", n, frac_missing);
    SplitMix64 rng(seed);
    Dataset ds;
    ds.T = uniform_positive(n, rng);
    ds.Phi = MaskMatrix(n, n, 1);
    const auto side =
        static_cast<std::size_t>(std::ceil(static_cast<double>(n) * std::sqrt(frac_missing)));
    for (std::size_t i = n - side; i < n; ++i)
        for (std::size_t j = n - side; j < n; ++j)
            ds.Phi(i, j) = 0;
    std::ostringstream name;
    name << "corner-n" << n << "-f" << frac_str(frac_missing) << "-s" << seed;
    ds.name = name.str();
    ds.provenance = Provenance::synthetic_corner;
    return ds;
}

Dataset gen_grid_missing(std::size_t n, double frac_missing, std::uint64_t seed) {
    require_gen_args("gen_grid_missing", n, frac_missing);
    SplitMix64 rng(seed);
    Dataset ds;
    ds.T = uniform_positive(n, rng);
    ds.Phi = MaskMatrix(n, n, 1);
    const auto raw =
        static_cast<std::size_t>(std::ceil(static_cast<double>(n) * std::sqrt(frac_missing)));
    const std::size_t k = std::min(raw, n - 1);
    const std::vector<std::size_t> s1 = random_subset(n, k, rng);
    const std::vector<std::size_t> s2 = random_subset(n, k, rng);
    for (std::size_t i : s1)
        for (std::size_t j : s2)
            ds.Phi(i, j) = 0;
    std::ostringstream name;
    name << "grid-n" << n << "-f" << frac_str(frac_missing) << "-s" << seed;
    ds.name = name.str();
    ds.provenance = Provenance::synthetic_grid;
    return ds;
}

} // namespace a1gm
