// a1gm command-line tool: closed-form rank-1 factorization of CSV matrices
// with missing values, baseline comparison, synthetic benchmarks, and the
// dual-coordinate verification checks.
//
// Exit codes: 0 success, 2 invalid input or usage, 3 infeasible mask
// (too many missing values), 4 numeric failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "a1gm/baselines.hpp"
#include "a1gm/bench.hpp"
#include "a1gm/dataset.hpp"
#include "a1gm/errors.hpp"
#include "a1gm/grid.hpp"
#include "a1gm/infogeo.hpp"
#include "a1gm/json_writer.hpp"

namespace {

struct CsvOptions {
    std::string input;
    std::vector<std::string> missing_tokens;
    std::string delimiter = ",";
};

struct SolveOptions {
    std::size_t trials = 5;
    std::uint64_t seed = 0;
    double tol = 1e-4;
    std::size_t max_iter = 200;
    std::size_t check_every = 10;
};

void add_csv_options(CLI::App* cmd, CsvOptions& opts) {
    cmd->add_option("--input", opts.input, "Input CSV file")->required();
    cmd->add_option("--missing-token", opts.missing_tokens,
                    "Cell token marking a missing value (repeatable; replaces the default "
                    "list NA, NaN, ?; an empty cell is always missing)");
    cmd->add_option("--delimiter", opts.delimiter, "Field delimiter (single character)")
        ->default_str(",");
}

void add_solve_options(CLI::App* cmd, SolveOptions& opts) {
    cmd->add_option("--trials", opts.trials, "Timed repetitions per solver")
        ->default_val(opts.trials);
    cmd->add_option("--seed", opts.seed, "Base seed; trial t uses seed+t")
        ->default_val(opts.seed);
    cmd->add_option("--tol", opts.tol, "Baseline relative stopping tolerance")
        ->default_val(opts.tol);
    cmd->add_option("--max-iter", opts.max_iter, "Baseline iteration cap")
        ->default_val(opts.max_iter);
    cmd->add_option("--check-every", opts.check_every, "Baseline cost-check interval")
        ->default_val(opts.check_every);
}

char parse_delimiter(const std::string& d) {
    if (d.size() != 1)
        throw a1gm::input_error("delimiter must be a single character, got '" + d + "'");
    return d[0];
}

a1gm::Dataset load_dataset(const CsvOptions& opts) {
    std::vector<std::string> tokens =
        opts.missing_tokens.empty() ? a1gm::default_missing_tokens() : opts.missing_tokens;
    if (!opts.missing_tokens.empty())
        tokens.insert(tokens.begin(), ""); // empty cells stay missing
    return a1gm::load_csv(opts.input, tokens, parse_delimiter(opts.delimiter));
}

a1gm::IterativeConfig to_config(const SolveOptions& opts) {
    a1gm::IterativeConfig cfg;
    cfg.max_iter = opts.max_iter;
    cfg.tol = opts.tol;
    cfg.check_every = opts.check_every;
    cfg.seed = opts.seed;
    return cfg;
}

void emit(const std::string& json, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << json << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw a1gm::input_error("cannot open '" + out_path + "' for writing");
    out << json << "\n";
    if (!out)
        throw a1gm::input_error("write to '" + out_path + "' failed");
}

int run_factorize(const CsvOptions& csv, const std::string& out_path) {
    namespace jw = a1gm::jsonw;
    const a1gm::Dataset ds = load_dataset(csv);
    const a1gm::A1gmResult r = a1gm::a1gm(ds.Phi, ds.T);
    std::ostringstream os;
    os << "{"
       << "\"dataset\":" << jw::quote(ds.name) << ","
       << "\"rows\":" << jw::number(static_cast<std::uint64_t>(ds.T.rows)) << ","
       << "\"cols\":" << jw::number(static_cast<std::uint64_t>(ds.T.cols)) << ","
       << "\"n_missing\":" << jw::number(static_cast<std::uint64_t>(ds.Phi.zero_count())) << ","
       << "\"increase_rate\":" << jw::number(r.increase_rate) << ","
       << "\"masked_cost\":" << jw::number(r.masked_cost) << ","
       << "\"masked_cost_expanded\":" << jw::number(r.masked_cost_expanded) << ","
       << "\"c\":" << jw::array(r.c) << ","
       << "\"d\":" << jw::array(r.d) << "}";
    emit(os.str(), out_path);
    return 0;
}

int run_compare(const CsvOptions& csv, const SolveOptions& solve) {
    const a1gm::Dataset ds = load_dataset(csv);
    const a1gm::BenchReport rep = a1gm::run_compare(ds, to_config(solve), solve.trials);
    std::cout << a1gm::to_json(rep) << "\n";
    return 0;
}

int run_bench(const std::string& kind, const std::vector<std::size_t>& sizes, double frac,
              const SolveOptions& solve) {
    for (std::size_t n : sizes) {
        const a1gm::Dataset ds = kind == "corner"
                                     ? a1gm::gen_corner_missing(n, frac, solve.seed)
                                     : a1gm::gen_grid_missing(n, frac, solve.seed);
        const a1gm::BenchReport rep = a1gm::run_compare(ds, to_config(solve), solve.trials);
        std::cout << a1gm::to_json(rep) << "\n" << std::flush;
    }
    return 0;
}

std::string report_json(const a1gm::Rank1CheckReport& rep) {
    namespace jw = a1gm::jsonw;
    std::ostringstream os;
    os << "{"
       << "\"theta_ok\":" << (rep.theta_ok ? "true" : "false") << ","
       << "\"eta_ok\":" << (rep.eta_ok ? "true" : "false") << ","
       << "\"max_theta_violation\":" << jw::number(rep.max_theta_violation) << ","
       << "\"max_eta_violation\":" << jw::number(rep.max_eta_violation) << "}";
    return os.str();
}

int run_verify(const CsvOptions& csv, double tol) {
    namespace jw = a1gm::jsonw;
    const a1gm::Dataset ds = load_dataset(csv);
    const a1gm::A1gmDecomposition D = a1gm::a1gm_decompose(ds.Phi, ds.T);

    a1gm::MatrixTriple recon;
    recon.X = a1gm::outer(D.factors.w, D.factors.h);
    recon.Y = a1gm::outer(D.factors.a, D.factors.h);
    recon.Z = a1gm::outer(D.factors.w, D.factors.b);

    const a1gm::PosetModel input_model = a1gm::model_from_triple(D.triple);
    const a1gm::PosetModel output_model = a1gm::model_from_triple(recon);
    const a1gm::Rank1CheckReport rep_out = a1gm::check_simultaneous_rank1(output_model, tol);
    const a1gm::Rank1CheckReport rep_in = a1gm::check_simultaneous_rank1(input_model, tol);
    const bool conserved = a1gm::conservation_check(input_model, output_model, tol);
    const bool ok = rep_out.theta_ok && rep_out.eta_ok && conserved;

    std::ostringstream os;
    os << "{"
       << "\"dataset\":" << jw::quote(ds.name) << ","
       << "\"tol\":" << jw::number(tol) << ","
       << "\"reconstruction\":" << report_json(rep_out) << ","
       << "\"input\":" << report_json(rep_in) << ","
       << "\"one_body_conserved\":" << (conserved ? "true" : "false") << ","
       << "\"ok\":" << (ok ? "true" : "false") << "}";
    std::cout << os.str() << "\n";
    if (!ok) {
        std::cerr << "error: reconstruction failed verification (max violation "
                  << jw::number(rep_out.max_violation) << ")\n";
        return 4;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form rank-1 factorization of nonnegative matrices with "
                 "grid-expandable missing values"};
    app.require_subcommand(1);

    CsvOptions fact_csv;
    std::string fact_out;
    CLI::App* fact = app.add_subcommand(
        "factorize", "Factorize a CSV matrix; print factors and masked cost as JSON");
    add_csv_options(fact, fact_csv);
    fact->add_option("--out", fact_out, "Write the JSON report to a file instead of stdout");

    CsvOptions cmp_csv;
    SolveOptions cmp_solve;
    CLI::App* cmp = app.add_subcommand(
        "compare", "Compare against the multiplicative-update baseline on a CSV matrix");
    add_csv_options(cmp, cmp_csv);
    add_solve_options(cmp, cmp_solve);

    std::string bench_kind;
    std::vector<std::size_t> bench_sizes;
    double bench_frac = 0.05;
    SolveOptions bench_solve;
    CLI::App* bench = app.add_subcommand(
        "bench", "Benchmark on synthetic data; one JSON report per size, one per line");
    bench->add_option("--synthetic", bench_kind, "Mask shape: corner or grid")
        ->required()
        ->check(CLI::IsMember({"corner", "grid"}));
    bench->add_option("--size", bench_sizes, "Matrix sizes to sweep (comma-separated)")
        ->required()
        ->delimiter(',');
    bench->add_option("--frac", bench_frac, "Missing fraction in [0, 1)")
        ->default_val(bench_frac);
    add_solve_options(bench, bench_solve);

    CsvOptions ver_csv;
    double ver_tol = 1e-8;
    CLI::App* ver = app.add_subcommand(
        "verify", "Check the dual-coordinate optimality certificates of the factorization");
    add_csv_options(ver, ver_csv);
    ver->add_option("--tol", ver_tol, "Violation tolerance")->default_val(ver_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fact->parsed())
            return run_factorize(fact_csv, fact_out);
        if (cmp->parsed())
            return run_compare(cmp_csv, cmp_solve);
        if (bench->parsed())
            return run_bench(bench_kind, bench_sizes, bench_frac, bench_solve);
        if (ver->parsed())
            return run_verify(ver_csv, ver_tol);
    } catch (const a1gm::mask_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const a1gm::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const a1gm::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
