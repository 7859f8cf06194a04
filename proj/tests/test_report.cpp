#include <gtest/gtest.h>

#include "xlag/report/pipeline.hpp"

using namespace xlag;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

ExtensionSpec spec(Rational alpha, std::vector<int> mI, std::vector<int> mII) {
    return ExtensionSpec(std::move(alpha), r(1), std::move(mI), std::move(mII));
}

PipelineOptions quick() {
    PipelineOptions opt;
    opt.numeric = false;
    return opt;
}

} // namespace

TEST(Pipeline, WorkedTwoSeedExtension) {
    const ReportDocument doc = run_extension(spec(r(5, 2), {1}, {1}));
    EXPECT_EQ(doc.g.mu_computed, 3);
    EXPECT_TRUE(doc.g.regular);
    EXPECT_TRUE(doc.certificate.regular);
    EXPECT_FALSE(doc.recurrence.applicable);
    EXPECT_TRUE(doc.wronskian.checked);
    EXPECT_TRUE(doc.wronskian.match);
    ASSERT_EQ(doc.eop.size(), 4u);
    EXPECT_EQ(doc.eop[2].degree, 5);
    ASSERT_TRUE(doc.numeric.has_value());
    EXPECT_LT(doc.numeric->orthogonality_max_offdiag, 1e-8);
    EXPECT_LT(doc.numeric->spectrum_max_relative_deviation, 1e-3);
    EXPECT_TRUE(report_consistent(doc));
}

TEST(Pipeline, CounterexampleSkipsSpectralStages) {
    const ReportDocument doc = run_extension(spec(r(1, 2), {}, {2}));
    EXPECT_FALSE(doc.g.regular);
    EXPECT_FALSE(doc.g.admissible);
    EXPECT_EQ(doc.certificate.root_count_positive_axis, 1);
    EXPECT_TRUE(doc.eop.empty());
    EXPECT_FALSE(doc.numeric.has_value());
    EXPECT_TRUE(report_consistent(doc));
}

TEST(Pipeline, IdentityExtension) {
    const ReportDocument doc = run_extension(spec(r(3, 2), {}, {}), quick());
    EXPECT_EQ(doc.g.g, Poly::constant(1));
    EXPECT_FALSE(doc.wronskian.checked);
    EXPECT_TRUE(doc.potential.rational_numerator.empty());
    EXPECT_EQ(doc.potential.shift, r(0));
    for (const auto& e : doc.eop) EXPECT_EQ(Poly(e.coefficients), monic(laguerre(e.nu, r(3, 2))));
}

TEST(Pipeline, RecurrenceReportedWhenApplicable) {
    const ReportDocument doc = run_extension(spec(r(9, 2), {1}, {1, 2}), quick());
    EXPECT_TRUE(doc.recurrence.applicable);
    EXPECT_TRUE(doc.recurrence.holds);
    EXPECT_EQ(doc.recurrence.lhs, doc.recurrence.rhs);
}

TEST(Pipeline, ConsistencyDetectsTampering) {
    ReportDocument doc = run_extension(spec(r(5, 2), {1}, {1}), quick());
    ASSERT_TRUE(report_consistent(doc));
    ReportDocument bad = doc;
    bad.g.const_predicted = -bad.g.const_predicted;
    EXPECT_FALSE(report_consistent(bad));
    bad = doc;
    bad.certificate.regular = false;
    EXPECT_FALSE(report_consistent(bad));
    bad = doc;
    bad.recurrence = {true, false, r(1), r(2)};
    EXPECT_FALSE(report_consistent(bad));
}

TEST(ReportJson, RoundTripIsFieldExact) {
    for (const auto& s : {spec(r(5, 2), {1}, {1}), spec(r(1, 2), {}, {2}), spec(r(3, 2), {}, {}), spec(r(9, 2), {1}, {1, 2})}) {
        const ReportDocument doc = run_extension(s);
        const std::string text = to_json(doc).dump();
        EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), doc) << s.describe();
    }
}

TEST(ReportJson, RationalsTravelAsStrings) {
    const nlohmann::json j = to_json(run_extension(spec(r(5, 2), {1}, {1}), quick()));
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("g").at("const_computed"), "105/8");
    EXPECT_EQ(j.at("spec").at("alpha"), "5/2");
    EXPECT_TRUE(j.at("numeric").is_null());
    for (const auto& x : j.at("g").at("coefficients")) EXPECT_TRUE(x.is_string());
}

TEST(ReportJson, RejectsMalformedDocuments) {
    nlohmann::json j = to_json(run_extension(spec(r(5, 2), {1}, {1}), quick()));
    auto missing = j;
    missing.erase("certificate");
    EXPECT_THROW(report_from_json(missing), SpecInvalid);
    auto schema = j;
    schema["schema"] = 2;
    EXPECT_THROW(report_from_json(schema), SpecInvalid);
    auto number = j;
    number["g"]["const_computed"] = 13.125;
    EXPECT_THROW(report_from_json(number), SpecInvalid);
    auto garbage = j;
    garbage["spec"]["alpha"] = "5/0";
    EXPECT_THROW(report_from_json(garbage), SpecInvalid);
}
