#pragma once

#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "closed_form.hpp"
#include "determinant.hpp"
#include "lu.hpp"
#include "matrix_family.hpp"

namespace cauchydet {

enum class Mode { symbolic, numeric };

inline const char* to_string(Mode m) { return m == Mode::symbolic ? "symbolic" : "numeric"; }

struct Counterexample {
    std::string label;                                  // what was compared, e.g. "L", "E3", "lhs=rhs"
    std::vector<std::pair<std::string, long>> indices;  // ordered, 1-based
    std::optional<Rational> t;                          // numeric mode only
    std::string lhs;
    std::string rhs;
};

/// Outcome of one suite. passed == false implies counterexample or error is set.
struct VerificationReport {
    std::string suite;
    Mode mode = Mode::symbolic;
    std::vector<std::pair<std::string, std::size_t>> range;
    std::vector<Rational> t_samples;
    std::vector<Rational> discarded_samples;
    bool passed = false;
    bool skipped = false;
    std::optional<Counterexample> counterexample;
    std::optional<std::string> error;
    double elapsed_ms = 0.0;
};

/// Accepted and rejected numeric t values.
struct SampleSet {
    std::vector<Rational> accepted;
    std::vector<Rational> discarded;
};

inline constexpr long kSampleHeight = 50;
inline constexpr int kMaxAttemptsPerSample = 100;

/// True when M(s, t) has no singular entry and all its leading principal
/// minors are nonzero. M(s', t) is the leading block of M(s, t) for s' <= s,
/// so one check covers every smaller size.
inline bool is_generic_t(std::size_t s, const Rational& t) {
    try {
        (void)lu_doolittle(build_matrix(s, t));
        return true;
    } catch (const SingularEntry&) {
        return false;
    } catch (const ZeroPivot&) {
        return false;
    }
}

/// Draws `count` distinct t = p/q, 1 <= p, q <= 50, keeping those `accept`
/// approves. Rejected draws are kept in `discarded`; throws RetriesExhausted
/// after 100 consecutive rejections.
template <std::predicate<const Rational&> Accept>
SampleSet draw_t_samples(std::size_t count, std::uint64_t seed, Accept&& accept) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> height(1, kSampleHeight);
    SampleSet out;
    std::set<Rational> seen;
    while (out.accepted.size() < count) {
        bool found = false;
        for (int attempt = 0; attempt < kMaxAttemptsPerSample; ++attempt) {
            const long p = height(rng);
            const long q = height(rng);
            Rational t{BigInt(p), BigInt(q)};
            if (seen.contains(t))
                continue;
            seen.insert(t);
            if (accept(t)) {
                out.accepted.push_back(t);
                found = true;
                break;
            }
            out.discarded.push_back(t);
        }
        if (!found)
            throw RetriesExhausted("no non-singular t sample found in " + std::to_string(kMaxAttemptsPerSample) +
                                   " attempts");
    }
    return out;
}

/// Samples valid for every size up to s_max.
inline SampleSet draw_t_samples(std::size_t count, std::size_t s_max, std::uint64_t seed) {
    return draw_t_samples(count, seed, [s_max](const Rational& t) { return is_generic_t(s_max, t); });
}

namespace detail {

template <typename Body>
VerificationReport timed(VerificationReport report, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body(report);
    } catch (const std::exception& e) {
        report.passed = false;
        report.error = e.what();
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Compares two equal-shape matrices; fills the counterexample on the first
/// differing entry.
template <ExactField F>
bool same_matrix(const Matrix<F>& lhs, const Matrix<F>& rhs, const std::string& label, std::size_t s,
                 const std::optional<Rational>& t, VerificationReport& report) {
    for (std::size_t i = 1; i <= lhs.rows(); ++i)
        for (std::size_t l = 1; l <= lhs.cols(); ++l)
            if (!(lhs.at(i, l) == rhs.at(i, l))) {
                report.passed = false;
                report.counterexample = Counterexample{label,
                                                       {{"s", static_cast<long>(s)},
                                                        {"i", static_cast<long>(i)},
                                                        {"l", static_cast<long>(l)}},
                                                       t,
                                                       lhs.at(i, l).to_string(),
                                                       rhs.at(i, l).to_string()};
                return false;
            }
    return true;
}

template <ExactField F>
bool check_lu_product(std::size_t s, const F& t, const std::optional<Rational>& t_value, const Perturbation& p,
                      VerificationReport& report) {
    return same_matrix(matmul(build_L(s, t), build_U(s, t, p)), build_matrix(s, t), "LU=M", s, t_value, report);
}

template <ExactField F>
bool check_factors(std::size_t s, const F& t, const std::optional<Rational>& t_value, const Perturbation& p,
                   VerificationReport& report) {
    const auto lu = lu_doolittle(build_matrix(s, t));
    return same_matrix(build_L(s, t), lu.L, "L", s, t_value, report) &&
           same_matrix(build_U(s, t, p), lu.U, "U", s, t_value, report);
}

/// Runs `check` for s = 1..s_max, symbolically or over every numeric sample.
/// A sample that turns out singular is moved to discarded_samples.
template <typename SymbolicCheck, typename NumericCheck>
VerificationReport run_sized_suite(std::string name, std::size_t s_max, Mode mode, const SampleSet& samples,
                                   SymbolicCheck symbolic, NumericCheck numeric) {
    VerificationReport report;
    report.suite = std::move(name);
    report.mode = mode;
    report.range = {{"s_min", 1}, {"s_max", s_max}};
    if (s_max == 0) {
        report.skipped = true;
        return report;
    }
    return timed(std::move(report), [&](VerificationReport& r) {
        r.passed = true;
        r.discarded_samples = samples.discarded;
        if (mode == Mode::symbolic) {
            const RationalFunction t = symbolic_t();
            for (std::size_t s = 1; s <= s_max; ++s)
                if (!symbolic(s, t, r))
                    return;
            return;
        }
        for (const Rational& t : samples.accepted) {
            try {
                for (std::size_t s = 1; s <= s_max; ++s)
                    if (!numeric(s, t, r)) {
                        r.t_samples.push_back(t);
                        return;
                    }
                r.t_samples.push_back(t);
            } catch (const SingularEntry&) {
                r.discarded_samples.push_back(t);
            } catch (const ZeroPivot&) {
                r.discarded_samples.push_back(t);
            }
        }
        if (r.t_samples.empty()) {
            r.passed = false;
            r.error = "no usable numeric t sample";
        }
    });
}

} // namespace detail

/// L U = M entrywise for s = 1..s_max.
inline VerificationReport verify_lu_product(std::size_t s_max, Mode mode, const SampleSet& samples = {},
                                            const Perturbation& p = {}) {
    return detail::run_sized_suite(
        "lu_product", s_max, mode, samples,
        [&](std::size_t s, const RationalFunction& t, VerificationReport& r) {
            return detail::check_lu_product(s, t, std::nullopt, p, r);
        },
        [&](std::size_t s, const Rational& t, VerificationReport& r) {
            return detail::check_lu_product(s, t, t, p, r);
        });
}

/// Closed-form L, U equal the Doolittle factors of M for s = 1..s_max.
inline VerificationReport verify_factors_match(std::size_t s_max, Mode mode, const SampleSet& samples = {},
                                               const Perturbation& p = {}) {
    return detail::run_sized_suite(
        "factors_match", s_max, mode, samples,
        [&](std::size_t s, const RationalFunction& t, VerificationReport& r) {
            return detail::check_factors(s, t, std::nullopt, p, r);
        },
        [&](std::size_t s, const Rational& t, VerificationReport& r) {
            return detail::check_factors(s, t, t, p, r);
        });
}

/// Both product-to-Pochhammer identities over the full index grid.
inline VerificationReport verify_gamma_identities(std::size_t i_max, std::size_t j_max, std::size_t l_max,
                                                  const Perturbation& p = {}) {
    VerificationReport report;
    report.suite = "gamma_identities";
    report.mode = Mode::symbolic;
    report.range = {{"i_max", i_max}, {"j_max", j_max}, {"l_max", l_max}};
    if (i_max == 0 || j_max == 0 || l_max == 0) {
        report.skipped = true;
        return report;
    }
    auto fail = [](VerificationReport& r, std::string label, std::vector<std::pair<std::string, long>> idx,
                   const IdentitySides& sides) {
        r.passed = false;
        r.counterexample =
            Counterexample{std::move(label), std::move(idx), std::nullopt, sides.lhs.to_string(), sides.rhs.to_string()};
    };
    return detail::timed(std::move(report), [&](VerificationReport& r) {
        r.passed = true;
        for (std::size_t i = 1; i <= i_max; ++i)
            for (std::size_t j = 1; j <= j_max; ++j) {
                auto sides = gamma_identity_left(i, j, p);
                if (sides.lhs != sides.rhs)
                    return fail(r, "left", {{"i", long(i)}, {"j", long(j)}}, sides);
            }
        for (std::size_t j = 1; j <= j_max; ++j)
            for (std::size_t l = 1; l <= l_max; ++l) {
                auto sides = gamma_identity_right(j, l);
                if (sides.lhs != sides.rhs)
                    return fail(r, "right", {{"j", long(j)}, {"l", long(l)}}, sides);
            }
    });
}

inline constexpr std::size_t kDefaultChainEliminationCap = 12;

/// E1 = ... = E6 = det_closed(s, 1) (= det_elimination(M(s, 1)) up to
/// elimination_cap) and E6 > 0, for s = 1..s_max.
inline VerificationReport verify_chain(std::size_t s_max, std::size_t elimination_cap = kDefaultChainEliminationCap,
                                       const Perturbation& p = {}) {
    VerificationReport report;
    report.suite = "chain";
    report.mode = Mode::numeric;
    report.range = {{"s_min", 1}, {"s_max", s_max}, {"elimination_cap", elimination_cap}};
    if (s_max == 0) {
        report.skipped = true;
        return report;
    }
    report.t_samples = {Rational(1)};
    return detail::timed(std::move(report), [&](VerificationReport& r) {
        r.passed = true;
        auto fail = [&](std::size_t s, std::string label, const Rational& lhs, const Rational& rhs) {
            r.passed = false;
            r.counterexample =
                Counterexample{std::move(label), {{"s", static_cast<long>(s)}}, Rational(1), lhs.to_string(),
                               rhs.to_string()};
        };
        for (std::size_t s = 1; s <= s_max; ++s) {
            const ChainValues chain = chain_t1(s, p);
            for (std::size_t k = 1; k < chain.values.size(); ++k)
                if (chain.values[k] != chain.values[0])
                    return fail(s, "E" + std::to_string(k + 1) + " vs E1", chain.values[k], chain.values[0]);
            const Rational& e6 = chain.values[5];
            if (e6.sign() <= 0)
                return fail(s, "E6 > 0", e6, Rational(0));
            const Rational closed = det_closed(s, Rational(1), p);
            if (closed != e6)
                return fail(s, "det_closed vs E6", closed, e6);
            if (s <= elimination_cap) {
                const Rational elim = det_elimination(build_matrix(s, Rational(1)));
                if (elim != e6)
                    return fail(s, "det_elimination vs E6", elim, e6);
            }
        }
    });
}

struct VerifyConfig {
    std::size_t s_max_symbolic = 6;
    std::size_t s_max_numeric = 12;
    std::size_t s_max_factors_numeric = 10;
    std::size_t t_sample_count = 20;
    std::size_t gamma_max = 8;
    std::size_t chain_s_max = 20;
    std::size_t elimination_cap = kDefaultChainEliminationCap;
    std::uint64_t seed = 42;
    bool parallel = true;
    Perturbation perturbation;
};

/// Every suite, in a fixed order. Suites are independent: an error in one is
/// recorded in its report and does not stop the others.
inline std::vector<VerificationReport> run_all(const VerifyConfig& cfg) {
    const Perturbation& p = cfg.perturbation;

    auto numeric_suite = [&](auto verify, std::size_t s_max) {
        return [&cfg, &p, verify, s_max] {
            if (s_max == 0 || cfg.t_sample_count == 0)
                return verify(0, Mode::numeric, SampleSet{}, p);
            SampleSet samples;
            try {
                samples = draw_t_samples(cfg.t_sample_count, s_max, cfg.seed);
            } catch (const RetriesExhausted& e) {
                VerificationReport r = verify(0, Mode::numeric, SampleSet{}, p);
                r.skipped = false;
                r.error = e.what();
                return r;
            }
            return verify(s_max, Mode::numeric, samples, p);
        };
    };
    auto lu = [](std::size_t s, Mode m, const SampleSet& ss, const Perturbation& pp) {
        return verify_lu_product(s, m, ss, pp);
    };
    auto fm = [](std::size_t s, Mode m, const SampleSet& ss, const Perturbation& pp) {
        return verify_factors_match(s, m, ss, pp);
    };

    std::vector<std::function<VerificationReport()>> suites = {
        [&] { return verify_lu_product(cfg.s_max_symbolic, Mode::symbolic, {}, p); },
        numeric_suite(lu, cfg.s_max_numeric),
        [&] { return verify_factors_match(cfg.s_max_symbolic, Mode::symbolic, {}, p); },
        numeric_suite(fm, cfg.s_max_factors_numeric),
        [&] { return verify_gamma_identities(cfg.gamma_max, cfg.gamma_max, cfg.gamma_max, p); },
        [&] { return verify_chain(cfg.chain_s_max, cfg.elimination_cap, p); },
    };

    std::vector<VerificationReport> reports;
    if (cfg.parallel) {
        std::vector<std::future<VerificationReport>> pending;
        for (auto& suite : suites)
            pending.push_back(std::async(std::launch::async, suite));
        for (auto& f : pending)
            reports.push_back(f.get());
    } else {
        for (auto& suite : suites)
            reports.push_back(suite());
    }
    return reports;
}

/// Skipped suites count as neither passed nor failed.
inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.skipped && !r.passed)
            return false;
    return true;
}

/// Stable-key-order JSON. elapsed_ms is null unless include_timing, so that
/// identical inputs give byte-identical output.
inline nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = false) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["mode"] = to_string(r.mode);
    nlohmann::ordered_json range = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.range)
        range[k] = v;
    j["range"] = range;
    j["t_samples"] = nlohmann::ordered_json::array();
    for (const auto& t : r.t_samples)
        j["t_samples"].push_back(t.to_string());
    j["discarded_samples"] = nlohmann::ordered_json::array();
    for (const auto& t : r.discarded_samples)
        j["discarded_samples"].push_back(t.to_string());
    j["passed"] = r.passed;
    j["skipped"] = r.skipped;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        nlohmann::ordered_json cj;
        cj["label"] = c.label;
        nlohmann::ordered_json idx = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.indices)
            idx[k] = v;
        cj["indices"] = idx;
        cj["t"] = c.t ? nlohmann::ordered_json(c.t->to_string()) : nlohmann::ordered_json(nullptr);
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        j["counterexample"] = cj;
    } else {
        j["counterexample"] = nullptr;
    }
    j["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json(nullptr);
    j["elapsed_ms"] = include_timing ? nlohmann::ordered_json(r.elapsed_ms) : nlohmann::ordered_json(nullptr);
    return j;
}

} // namespace cauchydet
