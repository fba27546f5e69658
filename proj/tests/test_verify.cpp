#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pperm/polytope.hpp"
#include "pperm/verify.hpp"

using namespace pperm;

TEST_CASE("full run at small rank passes") {
    const VerificationReport report = run_verification(4, {"all"}, 2);
    CHECK(report.pass);
    CHECK(report.failed == 0);
    CHECK(report.records.size() == 1 + 2 + 4 + 8);
    CHECK(report.per_n.size() == 4);
    CHECK(report.checks == known_checks());

    for (const GammaRecord& rec : report.records) {
        CHECK(rec.pass);
        CHECK(rec.gamma_equal);
        CHECK(rec.gamma_nonnegative);
        CHECK(rec.gamma_rep.has_value());
        CHECK(rec.h(1) == rec.count_w_of_k);
    }
}

TEST_CASE("the worked record") {
    const VerificationReport report = run_verification(5, {"gamma"}, 1);
    bool found = false;
    for (const GammaRecord& rec : report.records) {
        if (rec.n == 5 && to_string(rec.K) == "1,3") {
            found = true;
            CHECK(rec.h == IntPolynomial({1, 14, 30, 14, 1}));
            CHECK(rec.gamma_hpoly.entries == std::vector<std::int64_t>{1, 10, 4});
            CHECK(rec.count_min_reps == 30);
            CHECK(rec.count_w_of_k == 60);
            CHECK(rec.count_tilde == 15);
            CHECK(rec.count_hat == 15);
        }
    }
    CHECK(found);
    CHECK(report.per_n.empty());
}

TEST_CASE("report output is independent of the parallelism degree") {
    const VerificationReport a = run_verification(4, {"gamma", "hop"}, 1);
    const VerificationReport b = run_verification(4, {"gamma", "hop"}, 4);
    CHECK(report_to_json(a, false) == report_to_json(b, false));
    CHECK(report_to_csv(a) == report_to_csv(b));
}

TEST_CASE("json shape") {
    const VerificationReport report = run_verification(3, {"gamma", "rsk"}, 1);
    const std::string json = report_to_json(report, true);
    CHECK(json.find("\"schema\": \"v1\"") != std::string::npos);
    CHECK(json.find("\"records\"") != std::string::npos);
    CHECK(json.find("\"per_n\"") != std::string::npos);
    CHECK(json.find("\"meta\"") != std::string::npos);
    CHECK(json.find("\"counterexample\"") == std::string::npos);  // only on failure

    const std::string lean = report_to_json(report, false);
    CHECK(lean.find("\"meta\"") == std::string::npos);
}

TEST_CASE("csv projection") {
    const VerificationReport report = run_verification(2, {"gamma"}, 1);
    const std::string csv = report_to_csv(report);
    CHECK(csv == "n,K,j,gamma\n1,\"\",0,1\n2,\"\",0,1\n2,\"1\",0,1\n");
}

TEST_CASE("failing reports carry the first counterexample") {
    VerificationReport report;
    report.max_n = 2;
    report.checks = {"gamma"};
    GammaRecord rec;
    rec.n = 2;
    rec.K = KSubset(2, {1});
    rec.pass = false;
    rec.gamma_equal = false;
    report.records.push_back(rec);
    report.failed = 1;
    report.pass = false;
    report.first_counterexample = "synthetic failure";
    const std::string json = report_to_json(report, false);
    CHECK(json.find("\"counterexample\": \"synthetic failure\"") != std::string::npos);
    CHECK(json.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(run_verification(3, {"bogus"}, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_verification(0, {"gamma"}, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_verification(11, {"gamma"}, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_verification(3, {}, 1), std::invalid_argument);
}

TEST_CASE("individual suites") {
    CHECK(check_hop_suite(5).ok);
    CHECK(check_rsk_suite(4).ok);
    CHECK(check_bijection_suite(KSubset(4, {1, 3})).ok);
    CHECK(check_phi_suite(KSubset(4, {1, 3})).ok);
    GammaVector rep;
    CHECK(check_kostka_suite(KSubset(4, {1, 3}), &rep).ok);
    CHECK(rep.entries == gamma_partitioned(KSubset(4, {1, 3}), GammaMethod::hpoly).entries);
}
