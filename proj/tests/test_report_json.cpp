#include <gtest/gtest.h>

#include "korenblum/report_json.hpp"

using korenblum::json;
using korenblum::Space;

namespace {

template <typename T>
T round_trip(const T& value) {
    return json::parse(json(value).dump()).get<T>();
}

}  // namespace

TEST(ReportJson, CertificateRoundTrip) {
    for (Space space : {Space::bergman, Space::fock}) {
        const auto cert = korenblum::certify(space, space == Space::bergman ? 0.21 : 0.54);
        EXPECT_EQ(round_trip(cert), cert);
    }
}

TEST(ReportJson, CertificateNullClosedForm) {
    const auto cert = korenblum::certify(Space::bergman, 0.15);
    EXPECT_TRUE(json(cert).at("closed_form_denominator").is_null());
}

TEST(ReportJson, SearchResultRoundTrip) {
    korenblum::SearchOptions opts;
    opts.width = 1e-2;
    const auto fock = korenblum::search_max_constant(Space::fock, 0.1, 0.9, opts);
    EXPECT_EQ(round_trip(fock), fock);
    const auto bergman = korenblum::search_max_constant(Space::bergman, 0.05, 0.70, opts);
    EXPECT_EQ(round_trip(bergman), bergman);
}

TEST(ReportJson, ClaimReportRoundTrip) {
    auto grid = korenblum::default_grid(korenblum::Claim::fg_product);
    grid.c_values = {0.6};
    const auto report = korenblum::verify_fg_product_bound(grid);
    const json j = report;
    EXPECT_EQ(j.at("worst_point").at("n"), 1);
    EXPECT_EQ(j.at("grid").at("n_range"), json::array({1, 60}));
    EXPECT_EQ(round_trip(report), report);
}

TEST(ReportJson, PairReportRoundTrip) {
    const auto r = korenblum::check_pair(korenblum::LaurentFunction::constant(0.71), korenblum::LaurentFunction::monomial(1),
                                         0.71, Space::bergman);
    EXPECT_EQ(round_trip(r), r);
}

TEST(ReportJson, LaurentFunctionForm) {
    const korenblum::LaurentFunction fn(-1, {{1.0, 0.5}, 0.0, {-2.0, 0.0}});
    const json j = fn;
    EXPECT_EQ(j.at("min_degree"), -1);
    EXPECT_EQ(j.at("coeffs").size(), 3u);
    EXPECT_EQ(j.at("coeffs").at(0), json::array({1.0, 0.5}));
    EXPECT_EQ(round_trip(fn), fn);
    EXPECT_THROW(json::parse(R"({"min_degree": 0, "coeffs": [[1.0]]})").get<korenblum::LaurentFunction>(), json::exception);
}

TEST(ReportJson, EnvelopeAndDeterminism) {
    const auto cert = korenblum::certify(Space::fock, 0.54);
    const json env = korenblum::envelope("certificate", cert);
    EXPECT_EQ(env.at("schema"), "korenblum-certifier/1");
    EXPECT_EQ(env.dump(), korenblum::envelope("certificate", korenblum::certify(Space::fock, 0.54)).dump());
}

TEST(ReportJson, UnknownSpaceRejected) {
    EXPECT_THROW(json("hardy").get<Space>(), json::exception);
}
