#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "xlag/report/pipeline.hpp"
#include "xlag/spectral/wavefunction.hpp"
#include "xlag/verify/lattice.hpp"

namespace xlag::cli {

/// Process exit codes.
enum ExitCode : int { ok = 0, verification_failure = 1, bad_input = 2, internal_inconsistency = 3 };

struct SpecFlags {
    std::string alpha;
    std::string l;
    std::string omega = "1";
    std::string seeds;

    void attach(CLI::App& app) {
        auto* a = app.add_option("--alpha", alpha, "final alpha = l + 1/2 (rational, e.g. 5/2)");
        auto* b = app.add_option("--l", l, "final angular momentum l (rational)");
        a->excludes(b);
        app.add_option("--omega", omega, "oscillator frequency (rational)")->capture_default_str();
        app.add_option("--seeds", seeds, "seed list such as I:1,I:3,II:2 (empty for none)");
    }

    ExtensionSpec build() const {
        if (alpha.empty() == l.empty()) throw SpecInvalid("give exactly one of --alpha or --l");
        const Rational a = alpha.empty() ? Rational::parse(l) + Rational(1, 2) : Rational::parse(alpha);
        const SeedLists s = parse_seed_list(seeds);
        return ExtensionSpec(a, Rational::parse(omega), s.mI, s.mII);
    }
};

namespace detail {

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw SpecInvalid("cannot open output file " + path);
    f << text;
}

inline std::vector<std::size_t> parse_nu_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4)
            throw SpecInvalid("bad wavefunction index '" + item + "'");
        out.push_back(static_cast<std::size_t>(std::stoul(item)));
    }
    return out;
}

} // namespace detail

inline int cmd_extend(const SpecFlags& flags, int nu_max, bool numeric, const std::string& out_path, std::ostream& out) {
    PipelineOptions opt;
    opt.nu_max = nu_max;
    opt.numeric = numeric;
    const ReportDocument doc = run_extension(flags.build(), opt);
    detail::emit(to_json(doc).dump(2) + "\n", out_path, out);
    return report_consistent(doc) ? ok : internal_inconsistency;
}

inline int cmd_eop(const SpecFlags& flags, int nu_max, const std::string& out_path, std::ostream& out) {
    const ExtensionSpec spec = flags.build();
    const GReport r = compute_g(spec);
    const EOPFamily fam = solve_eop(spec, r, nu_max);
    nlohmann::json j;
    j["schema"] = ReportDocument::kSchema;
    j["spec"] = to_json(SpecEcho{spec.alpha(), spec.omega(), spec.mI(), spec.mII(), spec.k(), spec.q(), spec.alpha_prime()});
    j["mu"] = fam.mu;
    j["g"] = rationals_json(fam.g.coefficients());
    auto polys = nlohmann::json::array();
    for (std::size_t nu = 0; nu < fam.polys.size(); ++nu)
        polys.push_back({{"nu", nu}, {"degree", *fam.polys[nu].degree()}, {"coefficients", rationals_json(fam.polys[nu].coefficients())}});
    j["eop"] = polys;
    detail::emit(j.dump(2) + "\n", out_path, out);
    return ok;
}

struct VerifyFlags {
    LatticeOptions lattice;
    bool parallel = false;
};

inline int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
    const auto specs = enumerate_lattice(flags.lattice);
    const LatticeSummary s = run_lattice(specs, flags.lattice, worker_count(flags.parallel));
    out << "lattice: k<=" << flags.lattice.max_k << " m<=" << flags.lattice.max_m << " alpha-grid "
        << flags.lattice.alpha_grid << ", " << s.specs << " specs\n";
    out << std::left << std::setw(20) << "invariant" << std::right << std::setw(10) << "passed" << std::setw(10)
        << "failed" << "\n";
    for (const auto& name : invariant_names()) {
        const auto& t = s.tally.at(name);
        out << std::left << std::setw(20) << name << std::right << std::setw(10) << t.passed << std::setw(10) << t.failed
            << "\n";
    }
    if (s.passed()) {
        out << "PASS: all " << s.specs << " specs\n";
        return ok;
    }
    out << "FAIL: " << s.failed_specs << " of " << s.specs << " specs\n";
    out << "first failing spec: " << s.first_failure->spec << "\n";
    for (const auto& o : s.first_failure->outcomes)
        if (!o.passed) out << "  " << o.name << ": " << o.detail << "\n";
    return verification_failure;
}

struct SampleFlags {
    double x_min = 0.05;
    double x_max = 8.0;
    int points = 1000;
    std::string wavefunctions;
    bool force = false;
};

/// CSV of x, V2(x) and the requested psi_nu(x), 17 significant digits.
inline int cmd_sample(const SpecFlags& spec_flags, const SampleFlags& f, const std::string& out_path, std::ostream& out) {
    if (!(f.x_min > 0) || !(f.x_max > f.x_min) || f.points < 2)
        throw SpecInvalid("sample needs 0 < x-min < x-max and at least 2 points");
    const ExtensionSpec spec = spec_flags.build();
    GReport r = compute_g(spec);
    r.regular = certify(r).regular;
    if (!r.regular && !f.force) throw SpecInvalid("extension is not regular on (0, inf); use --force to sample anyway");
    const ExtendedPotential v = build_potential(spec, r);
    const auto nus = detail::parse_nu_list(f.wavefunctions);
    std::vector<Wavefunction> psis;
    if (!nus.empty()) {
        const std::size_t top = *std::max_element(nus.begin(), nus.end());
        const EOPFamily fam = solve_eop(spec, r, static_cast<int>(top));
        for (auto nu : nus) psis.push_back(wavefunction(spec, fam, nu));
    }

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "x,V2";
    for (auto nu : nus) csv << ",psi_" << nu;
    csv << "\n";
    for (int i = 0; i < f.points; ++i) {
        const double x = f.x_min + (f.x_max - f.x_min) * i / (f.points - 1);
        csv << x << "," << static_cast<double>(v(x));
        for (const auto& psi : psis) csv << "," << static_cast<double>(psi(x));
        csv << "\n";
    }
    detail::emit(csv.str(), out_path, out);
    return ok;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational extensions of the isotonic oscillator and exceptional Laguerre polynomials"};
    app.require_subcommand(1);

    SpecFlags ext_spec, eop_spec, sample_spec;
    int ext_nu_max = 3, eop_nu_max = 3;
    bool no_numeric = false;
    std::string ext_out, eop_out, sample_out, format = "json";

    auto* extend = app.add_subcommand("extend", "build one extension and write its JSON report");
    ext_spec.attach(*extend);
    extend->add_option("--nu-max", ext_nu_max, "highest exceptional polynomial index")->capture_default_str();
    extend->add_option("--out", ext_out, "write the report to this file instead of stdout");
    extend->add_option("--format", format, "report format")->check(CLI::IsMember({"json"}))->capture_default_str();
    extend->add_flag("--no-numeric", no_numeric, "skip quadrature and finite-difference checks");

    auto* eop = app.add_subcommand("eop", "exceptional polynomial coefficients only");
    eop_spec.attach(*eop);
    eop->add_option("--nu-max", eop_nu_max, "highest exceptional polynomial index")->capture_default_str();
    eop->add_option("--out", eop_out, "output file");

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "run the exact invariants over the admissible lattice");
    verify->add_option("--max-k", vf.lattice.max_k, "largest number of seeds")->capture_default_str();
    verify->add_option("--max-m", vf.lattice.max_m, "largest seed index")->capture_default_str();
    verify->add_option("--alpha-grid", vf.lattice.alpha_grid, "alpha' values per index set")->capture_default_str();
    verify->add_flag("--parallel", vf.parallel, "fan out across threads (capped by XLAG_THREADS)");
    verify->add_flag("--self-test-negate-sign", vf.lattice.negate_sign_fault)->group("");

    SampleFlags sf;
    auto* sample = app.add_subcommand("sample", "CSV of the potential and wavefunctions on a grid");
    sample_spec.attach(*sample);
    sample->add_option("--x-min", sf.x_min)->capture_default_str();
    sample->add_option("--x-max", sf.x_max)->capture_default_str();
    sample->add_option("--points", sf.points)->capture_default_str();
    sample->add_option("--wavefunctions", sf.wavefunctions, "comma-separated nu list");
    sample->add_flag("--force", sf.force, "sample irregular extensions too");
    sample->add_option("--out", sample_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return bad_input;
    }

    try {
        if (*extend) return cmd_extend(ext_spec, ext_nu_max, !no_numeric, ext_out, out);
        if (*eop) return cmd_eop(eop_spec, eop_nu_max, eop_out, out);
        if (*verify) {
            if (vf.lattice.max_k < 0 || vf.lattice.max_m < 1 || vf.lattice.alpha_grid < 1)
                throw SpecInvalid("verify needs max-k >= 0, max-m >= 1, alpha-grid >= 1");
            return cmd_verify(vf, out);
        }
        if (*sample) return cmd_sample(sample_spec, sf, sample_out, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_internal() ? internal_inconsistency : bad_input;
    }
    return bad_input;
}

} // namespace xlag::cli
