// cauchydet: exact determinant, LU factors and identity checks for the
// matrix 1/((2l)^2 - t^2 (2i-1)^2).
//
// Exit status: 0 success, 1 failed check or math error, 2 bad invocation.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

#include <cauchydet/cauchydet.hpp>

namespace {

using namespace cauchydet;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Size caps for the elimination cross-check printed next to closed forms.
constexpr std::size_t kNumericOracleCap = 12;
constexpr std::size_t kSymbolicOracleCap = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::size_t s = 0;
    std::string t_text;
    bool symbolic = false;
    bool json = false;
    std::string fault;
};

Perturbation parse_fault(const std::string& name) {
    Perturbation p;
    if (name.empty())
        return p;
    if (name == "u16")
        p.u_power_base = 15;
    else if (name == "e3")
        p = Perturbation{.e3_power_base = 32, .e3_power_offset = 0};
    else if (name == "e3-printed")
        p = Perturbation::printed_line3();
    else if (name == "gamma-sign")
        p.gamma_left_sign = false;
    else
        throw UsageError("unknown fault '" + name + "'");
    return p;
}

Rational parse_t(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(e.what()) + " (t must be an exact fraction p/q)");
    }
}

void add_fault_option(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--inject-fault", opts.fault, "Corrupt one formula constant (testing)")->group("");
}

CLI::Option* add_size(CLI::App* cmd, CommonOptions& opts, const std::string& help) {
    return cmd->add_option("--s", opts.s, help)->required()->check(CLI::PositiveNumber);
}

void add_mode_options(CLI::App* cmd, CommonOptions& opts) {
    auto* t = cmd->add_option("--t", opts.t_text, "Numeric t as an exact fraction p/q");
    auto* sym = cmd->add_flag("--symbolic", opts.symbolic, "Keep t as an indeterminate");
    t->excludes(sym);
}

template <ExactField F>
ordered_json matrix_json(const Matrix<F>& m) {
    return ordered_json(m.to_strings());
}

// ---- det -------------------------------------------------------------------

template <ExactField F>
int run_det(const CommonOptions& o, const F& t, const std::optional<Rational>& t_value, std::size_t cap) {
    const Perturbation p = parse_fault(o.fault);
    const F closed = det_closed(o.s, t, p);
    std::optional<F> elim;
    if (o.s <= cap)
        elim = det_elimination(build_matrix(o.s, t));
    const bool match = !elim || *elim == closed;

    if (o.json) {
        ordered_json j;
        j["s"] = o.s;
        j["t"] = t_value ? ordered_json(t_value->to_string()) : ordered_json(nullptr);
        j["mode"] = t_value ? "numeric" : "symbolic";
        j["det"] = closed.to_string();
        j["elimination"] = elim ? ordered_json(elim->to_string()) : ordered_json(nullptr);
        j["match"] = elim ? ordered_json(match) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << closed.to_string() << "\n";
        if (elim)
            std::cout << "elimination: " << elim->to_string() << " (" << (match ? "match" : "MISMATCH") << ")\n";
        else
            std::cout << "elimination: skipped (s > " << cap << ")\n";
    }
    if (!match) {
        std::cerr << "error: closed form and elimination disagree\n";
        return kExitFail;
    }
    return kExitOk;
}

int cmd_det(const CommonOptions& o) {
    if (o.symbolic)
        return run_det(o, symbolic_t(), std::nullopt, kSymbolicOracleCap);
    const Rational t = o.t_text.empty() ? Rational(1) : parse_t(o.t_text);
    return run_det(o, t, t, kNumericOracleCap);
}

// ---- lu --------------------------------------------------------------------

template <ExactField F>
int run_lu(const CommonOptions& o, bool compare, const F& t, const std::optional<Rational>& t_value) {
    const Perturbation p = parse_fault(o.fault);
    const Matrix<F> L = build_L(o.s, t);
    const Matrix<F> U = build_U(o.s, t, p);
    std::optional<LUFactors<F>> doolittle;
    if (compare)
        doolittle = lu_doolittle(build_matrix(o.s, t));
    const bool match = !doolittle || (doolittle->L == L && doolittle->U == U);

    if (o.json) {
        ordered_json j;
        j["s"] = o.s;
        j["t"] = t_value ? ordered_json(t_value->to_string()) : ordered_json(nullptr);
        j["mode"] = t_value ? "numeric" : "symbolic";
        j["L"] = matrix_json(L);
        j["U"] = matrix_json(U);
        if (doolittle) {
            j["doolittle"] = {{"L", matrix_json(doolittle->L)}, {"U", matrix_json(doolittle->U)}};
            j["verdict"] = match ? "match" : "mismatch";
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "L = " << L.to_string() << "\n";
        std::cout << "U = " << U.to_string() << "\n";
        if (doolittle) {
            std::cout << "doolittle L = " << doolittle->L.to_string() << "\n";
            std::cout << "doolittle U = " << doolittle->U.to_string() << "\n";
            std::cout << "verdict: " << (match ? "match" : "mismatch") << "\n";
        }
    }
    return match ? kExitOk : kExitFail;
}

int cmd_lu(const CommonOptions& o, bool compare) {
    if (!o.t_text.empty()) {
        const Rational t = parse_t(o.t_text);
        return run_lu(o, compare, t, t);
    }
    return run_lu(o, compare, symbolic_t(), std::nullopt);
}

// ---- chain -----------------------------------------------------------------

int cmd_chain(const CommonOptions& o) {
    const Perturbation p = parse_fault(o.fault);
    bool all_agree = true;
    ordered_json rows = ordered_json::array();
    if (!o.json)
        std::cout << "s\tE1\tE2\tE3\tE4\tE5\tE6\tverdict\n";
    for (std::size_t s = 1; s <= o.s; ++s) {
        const ChainValues c = chain_t1(s, p);
        const bool agree = c.all_equal();
        all_agree = all_agree && agree;
        if (o.json) {
            ordered_json row;
            row["s"] = s;
            row["values"] = ordered_json::array();
            for (const auto& v : c.values)
                row["values"].push_back(v.to_string());
            row["agree"] = agree;
            rows.push_back(row);
        } else {
            std::cout << s;
            for (const auto& v : c.values)
                std::cout << "\t" << v;
            std::cout << "\t" << (agree ? "agree" : "DISAGREE") << "\n";
        }
    }
    if (o.json)
        std::cout << rows.dump(2) << "\n";
    if (!all_agree)
        std::cerr << "error: chain expressions disagree\n";
    return all_agree ? kExitOk : kExitFail;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    VerifyConfig cfg;
    bool timings = false;
    bool sequential = false;
};

std::string describe_range(const VerificationReport& r) {
    std::string out;
    for (const auto& [k, v] : r.range)
        out += (out.empty() ? "" : ", ") + k + "=" + std::to_string(v);
    return out;
}

int cmd_verify(const CommonOptions& o, VerifyOptions v) {
    v.cfg.perturbation = parse_fault(o.fault);
    v.cfg.parallel = !v.sequential;
    const auto reports = run_all(v.cfg);
    const bool ok = all_passed(reports);

    if (o.json) {
        ordered_json j;
        j["seed"] = v.cfg.seed;
        j["passed"] = ok;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports)
            j["reports"].push_back(to_json(r, v.timings));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
            std::cout << status << "  " << r.suite << " [" << to_string(r.mode) << "] (" << describe_range(r) << ")";
            if (!r.t_samples.empty() && r.mode == Mode::numeric)
                std::cout << " t_samples=" << r.t_samples.size() << " discarded=" << r.discarded_samples.size();
            if (!r.skipped)
                std::cout << "  " << r.elapsed_ms << " ms";
            std::cout << "\n";
            if (r.counterexample) {
                const auto& c = *r.counterexample;
                std::cout << "      counterexample " << c.label << " at";
                for (const auto& [k, val] : c.indices)
                    std::cout << " " << k << "=" << val;
                if (c.t)
                    std::cout << " t=" << *c.t;
                std::cout << ": " << c.lhs << " != " << c.rhs << "\n";
            }
            if (r.error)
                std::cout << "      error: " << *r.error << "\n";
        }
        std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitFail;
}

// ---- bench -----------------------------------------------------------------

constexpr int kWarmup = 3;
constexpr int kMeasured = 5;

template <typename Fn>
double median_micros(Fn&& fn) {
    for (int i = 0; i < kWarmup; ++i)
        fn();
    std::vector<double> samples;
    for (int i = 0; i < kMeasured; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        samples.push_back(
            std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

int cmd_bench(const CommonOptions& o) {
    const Perturbation p = parse_fault(o.fault);
    const Rational one(1);
    // All values are checked before any timing is printed.
    for (std::size_t s = 1; s <= o.s; ++s) {
        const Rational closed = det_closed(s, one, p);
        const Rational elim = det_elimination(build_matrix(s, one));
        if (closed != elim) {
            std::cerr << "error: det_closed(" << s << ", 1) = " << closed << " but elimination gives " << elim
                      << "\n";
            return kExitFail;
        }
    }
    ordered_json rows = ordered_json::array();
    if (!o.json)
        std::cout << "s\tclosed_us\telimination_us\tratio\n";
    for (std::size_t s = 1; s <= o.s; ++s) {
        volatile bool sink = false;
        const double closed_us = median_micros([&] { sink = det_closed(s, one, p).is_zero(); });
        const double elim_us = median_micros([&] { sink = det_elimination(build_matrix(s, one)).is_zero(); });
        (void)sink;
        const double ratio = closed_us > 0 ? elim_us / closed_us : 0.0;
        if (o.json) {
            rows.push_back({{"s", s}, {"closed_us", closed_us}, {"elimination_us", elim_us}, {"ratio", ratio}});
        } else {
            std::cout << s << "\t" << closed_us << "\t" << elim_us << "\t" << ratio << "\n";
        }
    }
    if (o.json)
        std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinant and LU factors of the matrix 1/((2l)^2 - t^2 (2i-1)^2)"};
    app.require_subcommand(1);

    CommonOptions det_o, lu_o, chain_o, verify_o, bench_o;
    bool compare = false;
    VerifyOptions vopts;

    auto* det = app.add_subcommand("det", "Determinant D_s as the product of the closed-form U diagonal");
    add_size(det, det_o, "Matrix size");
    add_mode_options(det, det_o);
    det->add_flag("--json", det_o.json, "JSON output");
    add_fault_option(det, det_o);

    auto* lu = app.add_subcommand("lu", "Closed-form L and U factors");
    add_size(lu, lu_o, "Matrix size");
    add_mode_options(lu, lu_o);
    lu->add_flag("--compare", compare, "Also compute Doolittle factors and compare");
    lu->add_flag("--json", lu_o.json, "JSON output");
    add_fault_option(lu, lu_o);

    auto* chain = app.add_subcommand("chain", "The six t = 1 expressions for s = 1..S");
    add_size(chain, chain_o, "Largest s");
    chain->add_flag("--json", chain_o.json, "JSON output");
    add_fault_option(chain, chain_o);

    auto* verify = app.add_subcommand("verify", "Run every identity check");
    auto& cfg = vopts.cfg;
    verify->add_option("--seed", cfg.seed, "Seed for numeric t samples")->capture_default_str();
    verify->add_option("--s-max-symbolic", cfg.s_max_symbolic, "Symbolic size bound (0 skips)")
        ->capture_default_str();
    verify->add_option("--s-max-numeric", cfg.s_max_numeric, "Numeric L U = M size bound (0 skips)")
        ->capture_default_str();
    verify->add_option("--s-max-factors-numeric", cfg.s_max_factors_numeric,
                       "Numeric factor-match size bound (0 skips)")
        ->capture_default_str();
    verify->add_option("--samples", cfg.t_sample_count, "Number of numeric t samples")->capture_default_str();
    verify->add_option("--gamma-max", cfg.gamma_max, "Index bound for the Gamma identities (0 skips)")
        ->capture_default_str();
    verify->add_option("--chain-s-max", cfg.chain_s_max, "Largest s for the t = 1 chain (0 skips)")
        ->capture_default_str();
    verify->add_option("--elimination-cap", cfg.elimination_cap, "Largest s cross-checked by elimination")
        ->capture_default_str();
    verify->add_flag("--timings", vopts.timings, "Include elapsed_ms in JSON output");
    verify->add_flag("--sequential", vopts.sequential, "Run suites one after another");
    verify->add_flag("--json", verify_o.json, "JSON output");
    add_fault_option(verify, verify_o);

    auto* bench = app.add_subcommand("bench", "Time det_closed against elimination at t = 1");
    add_size(bench, bench_o, "Largest s");
    bench->add_flag("--json", bench_o.json, "JSON output");
    add_fault_option(bench, bench_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (det->parsed())
            return cmd_det(det_o);
        if (lu->parsed())
            return cmd_lu(lu_o, compare);
        if (chain->parsed())
            return cmd_chain(chain_o);
        if (verify->parsed())
            return cmd_verify(verify_o, vopts);
        if (bench->parsed())
            return cmd_bench(bench_o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cauchydet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
