// Command-line front end: entropy computations, profile export,
// monotonicity experiments, and the separation oracle, over JSON/CSV files.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "entrogeo/contractions.hpp"
#include "entrogeo/entropy.hpp"
#include "entrogeo/io.hpp"
#include "entrogeo/oracle.hpp"
#include "entrogeo/profile.hpp"
#include "entrogeo/rng.hpp"
#include "entrogeo/spectral.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_falsified = 1;
constexpr int exit_parse = 2;
constexpr int exit_discrepancy = 3;
constexpr int exit_io = 4;
constexpr int exit_precondition = 5;

int exit_code_for(const entrogeo::error& e) {
    switch (e.code()) {
        case entrogeo::errc::not_contractive:
        case entrogeo::errc::output_not_distribution:
            return exit_precondition;
        case entrogeo::errc::no_convergence:
            return exit_discrepancy;
        case entrogeo::errc::io_failure:
            return exit_io;
        default:
            return exit_parse;
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) entrogeo::fail(entrogeo::errc::io_failure, "cannot open " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
    out.flush();
    if (!out) entrogeo::fail(entrogeo::errc::io_failure, "cannot write " + out_path);
}

std::size_t thread_cap() {
    std::size_t cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("ENTROPY_PROFILE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) cap = static_cast<std::size_t>(v);
    }
    return std::min<std::size_t>(cap, 256);
}

// Runs fn(0..count-1), possibly on several threads. Results must be
// written into pre-sized slots so the output is independent of scheduling.
template <class Fn>
void run_trials(std::size_t count, const Fn& fn) {
    const std::size_t workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

entrogeo::Spectrum state_spectrum(const entrogeo::io::State& state, double tol) {
    if (const auto* w = std::get_if<entrogeo::DiscreteDistribution>(&state))
        return entrogeo::spectrum_of(*w, tol);
    return entrogeo::spectrum_of(std::get<entrogeo::DensityOperator>(state), tol);
}

// Per-segment trapezoid steps: enough for the composite error bound
// sum n (dL)^3 / (12 steps^2 L^2) to clear 1e-12, within a whole-profile
// evaluation budget.
std::int64_t quadrature_steps(const entrogeo::EntropyProfile& p) {
    const auto& bp = p.breakpoints();
    const auto& muls = p.multiplicities();
    double c = 0.0;
    for (std::size_t k = 0; k + 1 < muls.size(); ++k) {
        const double span = bp[k].rinf - bp[k + 1].rinf;
        const double low = bp[k + 1].rinf;
        c += muls[k] * span * span * span / (12.0 * low * low);
    }
    const std::size_t nonfinal = muls.size() - 1;
    const std::int64_t budget =
        std::max<std::int64_t>(100000, 30000000 / static_cast<std::int64_t>(std::max<std::size_t>(1, nonfinal)));
    std::int64_t steps = 100000;
    if (c > 0.0) {
        const double want = std::ceil(std::sqrt(c / 1e-12));
        if (want > static_cast<double>(steps)) steps = static_cast<std::int64_t>(want);
    }
    return std::max<std::int64_t>(2, std::min(steps, budget));
}

int cmd_entropy(const std::string& state_path, double tol, const std::string& out_path) {
    const entrogeo::io::State state = entrogeo::io::load_state(state_path, tol);
    const entrogeo::Spectrum spec = state_spectrum(state, tol);
    const entrogeo::EntropyProfile profile = entrogeo::build_profile(spec);
    entrogeo::io::EntropyRecord record;
    record.direct = entrogeo::entropy_direct(spec).nats;
    record.boundary = entrogeo::entropy_boundary(profile).nats;
    record.quadrature = entrogeo::entropy_quadrature(profile, quadrature_steps(profile)).nats;
    record.max_discrepancy = std::max({std::abs(record.direct - record.boundary),
                                       std::abs(record.direct - record.quadrature),
                                       std::abs(record.boundary - record.quadrature)});
    emit(entrogeo::io::to_json(record), out_path);
    return record.max_discrepancy <= 1e-8 ? exit_ok : exit_discrepancy;
}

int cmd_profile(const std::string& state_path, double tol, const std::string& out_path) {
    const entrogeo::io::State state = entrogeo::io::load_state(state_path, tol);
    const entrogeo::EntropyProfile profile = entrogeo::build_profile(state_spectrum(state, tol));
    emit(entrogeo::io::profile_csv(profile), out_path);
    return exit_ok;
}

int cmd_check_monotone(const std::string& state_path, const std::string& transform_path,
                       const std::vector<std::int64_t>& random_nk, std::uint64_t seed,
                       std::size_t trials, double tol, const std::string& out_path) {
    const entrogeo::io::State state = entrogeo::io::load_state(state_path, tol);
    std::vector<entrogeo::MonotonicityReport> reports;

    if (!random_nk.empty()) {
        if (random_nk.size() != 2 || random_nk[0] < 1 || random_nk[1] < 1)
            entrogeo::fail(entrogeo::errc::bad_argument, "--random needs N >= 1 and K >= 1");
        const auto* w = std::get_if<entrogeo::DiscreteDistribution>(&state);
        if (!w)
            entrogeo::fail(entrogeo::errc::kind_mismatch,
                           "--random draws doubly stochastic maps; the state must be a distribution");
        const auto n = static_cast<std::size_t>(random_nk[0]);
        const auto k = static_cast<std::size_t>(random_nk[1]);
        if (w->dim() != n)
            entrogeo::fail(entrogeo::errc::dimension_mismatch,
                           "--random N must match the distribution dimension");
        reports.resize(trials);
        run_trials(trials, [&](std::size_t i) {
            const entrogeo::SequenceMap t =
                entrogeo::random_doubly_stochastic(n, k, entrogeo::derive_seed(seed, i));
            reports[i] = entrogeo::monotonicity_report(t, *w);
        });
    } else if (!transform_path.empty()) {
        const entrogeo::io::Transform transform = entrogeo::io::load_transform(transform_path);
        const entrogeo::MonotonicityReport report = std::visit(
            [&](const auto& tr) -> entrogeo::MonotonicityReport {
                using T = std::decay_t<decltype(tr)>;
                if constexpr (std::is_same_v<T, entrogeo::BlockStructure>) {
                    const auto* rho = std::get_if<entrogeo::DensityOperator>(&state);
                    if (!rho)
                        entrogeo::fail(entrogeo::errc::kind_mismatch,
                                       "a block structure applies to a density state");
                    return entrogeo::monotonicity_report(tr, *rho);
                } else {
                    const auto* w = std::get_if<entrogeo::DiscreteDistribution>(&state);
                    if (!w)
                        entrogeo::fail(entrogeo::errc::kind_mismatch,
                                       "this transform applies to a distribution state");
                    return entrogeo::monotonicity_report(tr, *w);
                }
            },
            transform);
        reports.push_back(report);
    } else {
        entrogeo::fail(entrogeo::errc::bad_argument,
                       "check-monotone needs a transform file or --random N K");
    }

    emit(entrogeo::io::to_json(reports), out_path);
    const bool all_ok = std::all_of(reports.begin(), reports.end(),
                                    [](const entrogeo::MonotonicityReport& r) { return r.verdict; });
    return all_ok ? exit_ok : exit_falsified;
}

int cmd_oracle(const std::string& state_path, double r1, double rinf, std::size_t samples,
               std::uint64_t seed, double tol, const std::string& out_path) {
    const entrogeo::io::State state = entrogeo::io::load_state(state_path, tol);
    const entrogeo::SeparationVerdict verdict = std::visit(
        [&](const auto& s) { return entrogeo::witness_search(s, r1, rinf, samples, seed); }, state);
    emit(entrogeo::io::to_json(verdict), out_path);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy of states via the geometry of a ball-separation region"};
    app.require_subcommand(1);

    double tol = entrogeo::default_tol;
    app.add_option("--tol", tol, "validation tolerance for states")->capture_default_str();

    std::string state_path, transform_path, out_path;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t samples = 1000;
    std::vector<std::int64_t> random_nk;
    double r1 = 0.0, rinf = 0.0;

    CLI::App* entropy = app.add_subcommand("entropy", "direct, boundary and quadrature entropy");
    entropy->add_option("state", state_path, "state JSON file")->required();
    entropy->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* profile = app.add_subcommand("profile", "breakpoint CSV of the region boundary");
    profile->add_option("state", state_path, "state JSON file")->required();
    profile->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* check = app.add_subcommand("check-monotone", "entropy monotonicity reports");
    check->add_option("state", state_path, "state JSON file")->required();
    check->add_option("transform", transform_path, "transform JSON file");
    check->add_option("--random", random_nk, "draw random doubly stochastic N x N maps from K permutations")
        ->expected(2);
    check->add_option("--seed", seed, "base seed for trial sub-seeds")->capture_default_str();
    check->add_option("--trials", trials, "number of random trials")->capture_default_str();
    check->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* oracle = app.add_subcommand("oracle", "sampled ball-intersection search");
    oracle->add_option("state", state_path, "state JSON file")->required();
    oracle->add_option("r1", r1, "radius of the open 1-norm ball")->required();
    oracle->add_option("rinf", rinf, "radius of the open inf-norm ball")->required();
    oracle->add_option("--samples", samples, "decompositions to try")->capture_default_str();
    oracle->add_option("--seed", seed, "search seed")->capture_default_str();
    oracle->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse;
    }

    try {
        if (entropy->parsed()) return cmd_entropy(state_path, tol, out_path);
        if (profile->parsed()) return cmd_profile(state_path, tol, out_path);
        if (check->parsed())
            return cmd_check_monotone(state_path, transform_path, random_nk, seed, trials, tol,
                                      out_path);
        return cmd_oracle(state_path, r1, rinf, samples, seed, tol, out_path);
    } catch (const entrogeo::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
}
