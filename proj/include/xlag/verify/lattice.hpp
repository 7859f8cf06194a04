#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "xlag/regularity/sturm.hpp"
#include "xlag/wronskian/compute_g.hpp"
#include "xlag/wronskian/recurrence.hpp"
#include "xlag/wronskian/wronskian_direct.hpp"

namespace xlag {

struct LatticeOptions {
    int max_k = 4;
    int max_m = 6;
    int alpha_grid = 4;        ///< alpha' values per index configuration
    int wronskian_max_k = 4;   ///< direct Wronskian oracle up to this k
    bool negate_sign_fault = false;  ///< fault injection: flips the predicted constant
};

namespace detail {

inline void increasing_subsets(int max_m, int size, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int m = start; m <= max_m; ++m) {
        cur.push_back(m);
        increasing_subsets(max_m, size, m + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> increasing_subsets(int max_m, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    increasing_subsets(max_m, size, 1, cur, out);
    return out;
}

} // namespace detail

/// Admissible lattice: k in 1..max_k, every q, strictly increasing indices
/// in 1..max_m per type, and alpha' = b + 1/2, b + 3/2, ... (alpha_grid
/// values) with b = max(mII), or b = 1 without type-II seeds. Ordered by
/// k, q, mI, mII, alpha'.
inline std::vector<ExtensionSpec> enumerate_lattice(const LatticeOptions& opt) {
    std::vector<ExtensionSpec> specs;
    for (int k = 1; k <= opt.max_k; ++k) {
        for (int q = 0; q <= k; ++q) {
            const auto firsts = detail::increasing_subsets(opt.max_m, q);
            const auto seconds = detail::increasing_subsets(opt.max_m, k - q);
            for (const auto& mI : firsts) {
                for (const auto& mII : seconds) {
                    const int base = mII.empty() ? 1 : mII.back();
                    for (int j = 0; j < opt.alpha_grid; ++j) {
                        const Rational ap = Rational(2 * (base + j) + 1, 2);
                        specs.push_back(ExtensionSpec::from_alpha_prime(ap, Rational(1), mI, mII));
                    }
                }
            }
        }
    }
    return specs;
}

struct InvariantOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SpecVerdict {
    std::string spec;
    std::vector<InvariantOutcome> outcomes;

    bool passed() const {
        return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
    }
};

/// Invariant names in reporting order.
inline const std::vector<std::string>& invariant_names() {
    static const std::vector<std::string> names{"divisible",        "degree",  "leading",        "constant",
                                                "sign_theorem",     "regular", "endpoint_signs", "origin_recurrence",
                                                "wronskian_oracle"};
    return names;
}

/// Runs every exact invariant on one spec. Inapplicable checks are omitted.
inline SpecVerdict verify_spec(const ExtensionSpec& spec, const LatticeOptions& opt = {}) {
    SpecVerdict v{spec.describe(), {}};
    auto add = [&](const std::string& name, bool ok, std::string detail = {}) {
        v.outcomes.push_back({name, ok, std::move(detail)});
    };
    GReport r;
    try {
        r = compute_g(spec);
    } catch (const NotDivisible& e) {
        add("divisible", false, e.what());
        return v;
    }
    if (opt.negate_sign_fault) r.const_predicted = -r.const_predicted;
    add("divisible", r.divisible);
    add("degree", r.mu_computed && *r.mu_computed == r.mu_predicted,
        "computed " + (r.mu_computed ? std::to_string(*r.mu_computed) : std::string("none")) + " predicted " +
            std::to_string(r.mu_predicted));
    add("leading", r.lead_computed == r.lead_predicted,
        "computed " + r.lead_computed.to_string() + " predicted " + r.lead_predicted.to_string());
    add("constant", r.const_computed == r.const_predicted,
        "computed " + r.const_computed.to_string() + " predicted " + r.const_predicted.to_string());

    const int expected_sign = r.sigma % 2 == 0 ? 1 : -1;
    add("sign_theorem", r.const_computed.sign() == expected_sign && r.lead_computed.sign() == expected_sign,
        "sigma " + std::to_string(r.sigma));

    const RegularityCertificate cert = certify(r);
    add("regular", cert.regular, "positive roots " + std::to_string(cert.root_count_positive_axis));
    add("endpoint_signs", cert.same_sign_at_ends() && cert.sign_at_zero == expected_sign);

    if (spec.k() - spec.q() >= 2) {
        const auto rec = origin_recurrence(spec, r.const_computed);
        add("origin_recurrence", rec.holds(), "lhs " + rec.lhs.to_string() + " rhs " + rec.rhs.to_string());
    }
    if (spec.k() <= opt.wronskian_max_k) {
        try {
            wronskian_direct(spec, r);
            add("wronskian_oracle", true);
        } catch (const OracleMismatch& e) {
            add("wronskian_oracle", false, e.what());
        }
    }
    return v;
}

struct InvariantTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct LatticeSummary {
    std::size_t specs = 0;
    std::size_t failed_specs = 0;
    std::map<std::string, InvariantTally> tally;
    std::optional<SpecVerdict> first_failure;  ///< in lattice order

    bool passed() const { return failed_specs == 0; }
};

/// Worker count: the XLAG_THREADS cap if set, else the hardware count.
inline unsigned worker_count(bool parallel) {
    if (!parallel) return 1;
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("XLAG_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, static_cast<unsigned>(c));
    }
    return n;
}

/// Verifies every spec; workers pull indices from a shared counter and
/// results are merged in lattice order.
inline LatticeSummary run_lattice(const std::vector<ExtensionSpec>& specs, const LatticeOptions& opt, unsigned workers = 1) {
    std::vector<SpecVerdict> verdicts(specs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) verdicts[i] = verify_spec(specs[i], opt);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    LatticeSummary s;
    s.specs = specs.size();
    for (const auto& name : invariant_names()) s.tally[name];
    for (auto& v : verdicts) {
        for (const auto& o : v.outcomes) {
            auto& t = s.tally[o.name];
            (o.passed ? t.passed : t.failed)++;
        }
        if (!v.passed()) {
            ++s.failed_specs;
            if (!s.first_failure) s.first_failure = v;
        }
    }
    return s;
}

} // namespace xlag
