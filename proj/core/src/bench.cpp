#include "a1gm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "a1gm/errors.hpp"
#include "a1gm/grid.hpp"
#include "a1gm/json_writer.hpp"

namespace a1gm {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Re-throw solver errors with the dataset named, preserving the category.
template <typename Fn>
auto with_context(const std::string& name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const mask_error& e) {
        throw mask_error("dataset '" + name + "': " + e.what());
    } catch (const numeric_error& e) {
        throw numeric_error("dataset '" + name + "': " + e.what());
    } catch (const input_error& e) {
        throw input_error("dataset '" + name + "': " + e.what());
    }
}

} // namespace

BenchReport run_compare(const Dataset& ds, const IterativeConfig& cfg, std::size_t trials) {
    if (trials < 1)
        throw input_error("run_compare: trials must be at least 1");

    BenchReport rep;
    rep.dataset = ds.name;
    rep.rows = ds.T.rows;
    rep.cols = ds.T.cols;
    rep.n_missing = ds.Phi.zero_count();
    rep.trials = trials;

    // Warm-up runs: touch every code path and page once, untimed.
    A1gmResult closed = with_context(ds.name, [&] { return a1gm(ds.Phi, ds.T); });
    with_context(ds.name, [&] { return wnmf_rank1(ds.Phi, ds.T, cfg); });

    std::vector<double> t_a1gm, t_wnmf;
    t_a1gm.reserve(trials);
    t_wnmf.reserve(trials);
    Rank1Factors best;
    double best_cost = 0.0;
    bool have_best = false;

    for (std::size_t t = 0; t < trials; ++t) {
        auto start = std::chrono::steady_clock::now();
        closed = with_context(ds.name, [&] { return a1gm(ds.Phi, ds.T); });
        t_a1gm.push_back(seconds_since(start));

        IterativeConfig trial_cfg = cfg;
        trial_cfg.seed = cfg.seed + t;
        rep.seeds.push_back(trial_cfg.seed);
        start = std::chrono::steady_clock::now();
        IterativeResult base =
            with_context(ds.name, [&] { return wnmf_rank1(ds.Phi, ds.T, trial_cfg); });
        t_wnmf.push_back(seconds_since(start));

        const double final_cost = base.cost_trace.back();
        if (!have_best || final_cost < best_cost) {
            best = std::move(base.factors);
            best_cost = final_cost;
            have_best = true;
        }
    }

    rep.increase_rate = closed.increase_rate;
    rep.runtime_a1gm = median(std::move(t_a1gm));
    rep.runtime_wnmf = median(std::move(t_wnmf));
    rep.relative_runtime = rep.runtime_a1gm / rep.runtime_wnmf;
    rep.relative_error = with_context(ds.name, [&] {
        return relative_error(ds.Phi, ds.T, outer(closed.c, closed.d), outer(best.w, best.h));
    });
    return rep;
}

std::string to_json(const BenchReport& report) {
    std::ostringstream os;
    os << "{"
       << "\"dataset\":" << jsonw::quote(report.dataset) << ","
       << "\"rows\":" << jsonw::number(static_cast<std::uint64_t>(report.rows)) << ","
       << "\"cols\":" << jsonw::number(static_cast<std::uint64_t>(report.cols)) << ","
       << "\"n_missing\":" << jsonw::number(static_cast<std::uint64_t>(report.n_missing)) << ","
       << "\"increase_rate\":" << jsonw::number(report.increase_rate) << ","
       << "\"relative_error\":" << jsonw::number(report.relative_error) << ","
       << "\"runtime_a1gm\":" << jsonw::number(report.runtime_a1gm) << ","
       << "\"runtime_wnmf\":" << jsonw::number(report.runtime_wnmf) << ","
       << "\"relative_runtime\":" << jsonw::number(report.relative_runtime) << ","
       << "\"seeds\":" << jsonw::array(report.seeds) << ","
       << "\"trials\":" << jsonw::number(static_cast<std::uint64_t>(report.trials)) << "}";
    return os.str();
}

} // namespace a1gm
