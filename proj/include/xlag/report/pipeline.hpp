#pragma once

#include <algorithm>
#include <cmath>

#include "xlag/regularity/sturm.hpp"
#include "xlag/report/report.hpp"
#include "xlag/spectral/eop.hpp"
#include "xlag/spectral/numeric_spectrum.hpp"
#include "xlag/spectral/orthogonality.hpp"
#include "xlag/spectral/potential.hpp"
#include "xlag/wronskian/compute_g.hpp"
#include "xlag/wronskian/recurrence.hpp"
#include "xlag/wronskian/wronskian_direct.hpp"

namespace xlag {

struct PipelineOptions {
    int nu_max = 3;
    bool numeric = true;
    int spectrum_levels = 4;
    int wronskian_max_k = 5;
};

/// compute_g -> certify -> origin recurrence -> direct Wronskian ->
/// potential -> exceptional family -> numeric checks. The exceptional
/// family and numeric checks only run when g is certified regular.
/// OracleMismatch from the Wronskian route propagates.
inline ReportDocument run_extension(const ExtensionSpec& spec, const PipelineOptions& opt = {}) {
    ReportDocument doc;
    doc.spec = {spec.alpha(), spec.omega(), spec.mI(), spec.mII(), spec.k(), spec.q(), spec.alpha_prime()};

    doc.g = compute_g(spec);
    doc.certificate = certify(doc.g);
    doc.g.regular = doc.certificate.regular;

    if (spec.k() - spec.q() >= 2) {
        const auto rec = origin_recurrence(spec, doc.g.const_computed);
        doc.recurrence = {true, rec.holds(), rec.lhs, rec.rhs};
    }

    if (spec.k() >= 1 && spec.k() <= opt.wronskian_max_k) {
        wronskian_direct(spec, doc.g);
        doc.wronskian = {true, true};
    }

    const ExtendedPotential potential = build_potential(spec, doc.g);
    const auto num = potential.rational_numerator().coefficients();
    const auto den = potential.rational_denominator().coefficients();
    doc.potential = {potential.shift(), {num.begin(), num.end()}, {den.begin(), den.end()}};

    if (!doc.g.regular) return doc;

    const EOPFamily fam = solve_eop(spec, doc.g, opt.nu_max);
    for (std::size_t nu = 0; nu < fam.polys.size(); ++nu) {
        const auto c = fam.polys[nu].coefficients();
        doc.eop.push_back({static_cast<int>(nu), static_cast<int>(*fam.polys[nu].degree()), {c.begin(), c.end()}});
    }

    if (opt.numeric) {
        NumericEcho n;
        n.orthogonality_max_offdiag = max_off_diagonal(fam);
        const auto spec_result =
            numeric_spectrum_detailed(potential, opt.spectrum_levels, default_grid(potential, opt.spectrum_levels));
        n.spectrum_computed = spec_result.levels;
        n.spectrum_expected = expected_levels(potential, opt.spectrum_levels);
        for (std::size_t i = 0; i < n.spectrum_computed.size(); ++i)
            n.spectrum_max_relative_deviation =
                std::max(n.spectrum_max_relative_deviation,
                         std::fabs(n.spectrum_computed[i] - n.spectrum_expected[i]) / std::fabs(n.spectrum_expected[i]));
        n.grid_halving_change = spec_result.halving_change;
        doc.numeric = n;
    }
    return doc;
}

/// Exact consistency of a finished report: closed forms reproduced, the
/// recurrence and Wronskian routes agree, and admissible specs are regular
/// with matching endpoint signs.
inline bool report_consistent(const ReportDocument& r) {
    if (!r.g.predictions_match()) return false;
    if (r.recurrence.applicable && !r.recurrence.holds) return false;
    if (r.wronskian.checked && !r.wronskian.match) return false;
    if (r.g.admissible && (!r.certificate.regular || !r.certificate.same_sign_at_ends())) return false;
    return true;
}

} // namespace xlag
