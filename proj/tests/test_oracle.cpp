#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "polymix/catalog.hpp"
#include "polymix/oracle.hpp"

using namespace polymix;
using testutil::close_abs;

TEST_CASE("adaptive quadrature on reference integrals", "[oracle]") {
    QuadratureControl qc;
    CHECK(close_abs(integrate([](double x) { return std::exp(-x); }, 0.0, 40.0, qc), 1.0, 1e-10));
    CHECK(close_abs(integrate([](double x) { return x * std::exp(-x); }, 0.0, 60.0, qc), 1.0,
                    1e-10));
    CHECK(close_abs(integrate([](double x) { return std::exp(-x * x); }, 0.0, 10.0, qc),
                    0.5 * std::sqrt(M_PI), 1e-10));
    CHECK(integrate([](double x) { return x; }, 2.0, 2.0, qc) == 0.0);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0, qc), std::domain_error);
}

TEST_CASE("quadrature is deterministic", "[oracle]") {
    QuadratureControl qc;
    auto g = [](double x) { return std::sin(3.0 * x) * std::exp(-x) + 1.0; };
    const double a = integrate(g, 0.0, 25.0, qc);
    const double b = integrate(g, 0.0, 25.0, qc);
    CHECK(a == b);
}

TEST_CASE("depth exhaustion is reported", "[oracle]") {
    QuadratureControl qc;
    qc.max_depth = 10;
    qc.abs_tol = 1e-14;
    auto nasty = [](double x) { return std::sin(500.0 * x * x); };
    CHECK_THROWS_AS(integrate(nasty, 0.0, 20.0, qc), non_convergence_error);
    QuadratureControl bad;
    bad.max_depth = 5;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("tail cutoff honors its contract", "[oracle]") {
    const Family e1 = build_named("exponential", std::vector<double>{1.0});
    const double x = tail_cutoff(e1, 1e-12);
    CHECK(x >= -std::log(1e-12));
    CHECK(e1.survival(x) < 1e-12);

    const Family pair = build_halfnormal_maxwell(1.0);
    CHECK(pair.survival(tail_cutoff(pair, 1e-12)) < 1e-12);

    const Family heavy{FamilyParams{{0.0, 1.0}, 2.0, 0.5}};
    for (double m : {1e-6, 1e-10, 1e-12}) {
        CHECK(heavy.survival(tail_cutoff(heavy, m)) < m);
    }
    CHECK_THROWS_AS(tail_cutoff(e1, 0.5), std::domain_error);
}

TEST_CASE("check_family cross-validates the closed forms", "[oracle]") {
    const Family e1 = build_named("exponential", std::vector<double>{1.0});
    const auto reports = check_family(e1);
    REQUIRE(reports.size() == 10);  // normalization + 4 moments + 5 cdf points
    for (const OracleReport& r : reports) {
        INFO(r.quantity);
        CHECK(r.passed);
        CHECK(r.abs_diff < 1e-9);
        CHECK(r.abs_diff == std::abs(r.closed_form - r.oracle_value));
    }

    const Family suj = build_named("sujatha", std::vector<double>{1.0});
    const auto sreports = check_family(suj);
    CHECK(sreports[1].quantity == "moment(1)");
    CHECK(sreports[1].closed_form == 2.25);
    CHECK(std::abs(sreports[1].oracle_value - 2.25) < 1e-8);

    // the d = 2 pair: normalization passes, pinning the library constant
    const auto preports = check_family(build_halfnormal_maxwell(1.0));
    CHECK(preports[0].quantity == "normalization");
    CHECK(preports[0].passed);
}

TEST_CASE("reports are reproducible", "[oracle]") {
    const Family lin = build_named("lindley", std::vector<double>{2.0});
    const auto a = check_family(lin);
    const auto b = check_family(lin);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].quantity == b[i].quantity);
        CHECK(a[i].oracle_value == b[i].oracle_value);
        CHECK(a[i].passed == b[i].passed);
    }
}
