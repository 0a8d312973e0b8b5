#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "polymix/catalog.hpp"

using namespace polymix;
using testutil::close_abs;
using testutil::close_rel;

TEST_CASE("catalog roster", "[catalog]") {
    CHECK(catalog().size() == 24);
    const CatalogEntry* lin = find_entry("lindley");
    REQUIRE(lin != nullptr);
    CHECK(lin->arity() == 1);
    const CatalogEntry* g3 = find_entry("gen_lindley3");
    REQUIRE(g3 != nullptr);
    CHECK(g3->arity() == 3);
    CHECK(find_entry("nonesuch") == nullptr);
    for (const CatalogEntry& e : catalog()) {
        CHECK_FALSE(e.reference.empty());
    }
}

TEST_CASE("golden mixing proportions across the parameter grid", "[catalog]") {
    const double grid[4] = {0.5, 1.0, 2.0, 5.0};
    for (const CatalogEntry& entry : catalog()) {
        std::vector<std::size_t> idx(entry.arity(), 0);
        for (;;) {
            std::vector<double> params(entry.arity());
            bool valid = true;
            for (std::size_t i = 0; i < entry.arity(); ++i) {
                params[i] = grid[idx[i]];
                if (entry.params[i].integer_valued && params[i] != std::floor(params[i])) {
                    valid = false;
                }
            }
            if (valid) {
                INFO(entry.name << " params[0]=" << params[0]);
                const Family f = build_named(entry.name, params);
                const std::vector<double> expect = entry.analytic_mp(params);
                REQUIRE(f.mixing_proportions().size() == expect.size());
                for (std::size_t i = 0; i < expect.size(); ++i) {
                    CHECK(close_abs(f.mixing_proportions()[i], expect[i], 1e-12));
                }
            }
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == 4) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
}

TEST_CASE("spot golden values", "[catalog]") {
    const Family lin = build_named("lindley", std::vector<double>{2.0});
    CHECK(close_abs(lin.mixing_proportions()[0], 2.0 / 3.0, 1e-14));
    CHECK(close_abs(lin.mixing_proportions()[1], 1.0 / 3.0, 1e-14));

    const Family suj = build_named("sujatha", std::vector<double>{1.0});
    CHECK(close_abs(suj.mixing_proportions()[0], 0.25, 1e-14));
    CHECK(close_abs(suj.mixing_proportions()[1], 0.25, 1e-14));
    CHECK(close_abs(suj.mixing_proportions()[2], 0.50, 1e-14));

    const Family xg = build_named("xgamma", std::vector<double>{1.0});
    CHECK(xg.params().theta == std::vector<double>{1.0, 0.0, 0.5});
    CHECK(close_abs(xg.mixing_proportions()[0], 0.5, 1e-14));
    CHECK(close_abs(xg.mixing_proportions()[2], 0.5, 1e-14));

    // Suja: beta^4 / (beta^4 + 24)
    const Family suja = build_named("suja", std::vector<double>{2.0});
    CHECK(close_abs(suja.mixing_proportions()[0], 16.0 / 40.0, 1e-13));
    // Rani carries its extra rate factor in theta_0
    const Family rani = build_named("rani", std::vector<double>{2.0});
    CHECK(close_abs(rani.mixing_proportions()[0], 32.0 / (32.0 + 24.0), 1e-13));
}

TEST_CASE("reduction identities", "[catalog]") {
    const double xs[6] = {0.0, 0.2, 0.7, 1.5, 3.0, 6.0};
    for (double beta : {0.5, 1.0, 2.0}) {
        const Family lin = build_named("lindley", std::vector<double>{beta});
        const Family jan = build_named("janardan", std::vector<double>{1.0, beta});
        const Family sus = build_named("sushila", std::vector<double>{1.0, beta});
        const Family qln = build_named("quasi_lindley", std::vector<double>{beta, beta});
        const Family ara = build_named("aradhana", std::vector<double>{beta});
        const Family gar = build_named("gen_aradhana", std::vector<double>{1.0, beta});
        for (double x : xs) {
            CHECK(close_rel(jan.pdf(x), lin.pdf(x), 1e-12));
            CHECK(close_rel(sus.pdf(x), lin.pdf(x), 1e-12));
            CHECK(close_rel(qln.pdf(x), lin.pdf(x), 1e-12));
            CHECK(close_rel(gar.pdf(x), ara.pdf(x), 1e-12));
        }
    }
}

TEST_CASE("weibull matches the standard density", "[catalog]") {
    for (double d : {1.0, 2.0, 3.0}) {
        for (double beta : {0.5, 1.5}) {
            const Family w = build_named("weibull", std::vector<double>{d, beta});
            for (double x : {0.1, 0.6, 1.2, 2.0}) {
                const double expect = d * beta * std::pow(x, d - 1.0) * std::exp(-beta * std::pow(x, d));
                CHECK(close_rel(w.pdf(x), expect, 1e-12));
            }
        }
    }
}

TEST_CASE("binomial coefficient builder", "[catalog]") {
    // (1 + x)^2 is the Aradhana polynomial
    const Family bin = build_binomial(1.0, 1.0, 2, 1.5);
    const Family ara = build_named("aradhana", std::vector<double>{1.5});
    CHECK(bin.params().theta == ara.params().theta);

    // p = 0 collapses to the exponential whatever a and b are
    const Family flat = build_binomial(17.0, 3.0, 0, 2.0);
    CHECK(flat.mixing_proportions() == std::vector<double>{1.0});
    CHECK(close_rel(flat.pdf(0.0), 2.0, 1e-14));

    // permutation form of the mixing proportions: MP_m ~ P(p, m) (b/(a beta))^m
    const Family two = build_binomial(2.0, 1.0, 1, 1.0);
    CHECK(close_abs(two.mixing_proportions()[0], 2.0 / 3.0, 1e-14));
    for (double a : {1.0, 2.5}) {
        for (double b : {0.5, 2.0}) {
            for (int p : {1, 2, 4}) {
                const double beta = 1.3;
                const Family f = build_binomial(a, b, p, beta);
                std::vector<double> expect(static_cast<std::size_t>(p) + 1);
                double perm = 1.0;
                double total = 0.0;
                for (int m = 0; m <= p; ++m) {
                    if (m > 0) perm *= static_cast<double>(p - m + 1);
                    expect[static_cast<std::size_t>(m)] = perm * std::pow(b / (a * beta), m);
                    total += expect[static_cast<std::size_t>(m)];
                }
                for (std::size_t m = 0; m < expect.size(); ++m) {
                    CHECK(close_abs(f.mixing_proportions()[m], expect[m] / total, 1e-12));
                }
            }
        }
    }

    CHECK_THROWS_AS(build_binomial(1.0, 1.0, 1100, 1.0), std::overflow_error);
    CHECK_THROWS_AS(build_binomial(0.0, 1.0, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_binomial(1.0, -1.0, 2, 1.0), std::invalid_argument);
}

TEST_CASE("half-normal plus Maxwell pair", "[catalog]") {
    const Family f1 = build_halfnormal_maxwell(1.0);
    CHECK(close_abs(f1.mixing_proportions()[0], 2.0 / 3.0, 1e-13));
    CHECK(close_abs(f1.mixing_proportions()[2], 1.0 / 3.0, 1e-13));
    const Family fh = build_halfnormal_maxwell(0.5);
    CHECK(close_abs(fh.mixing_proportions()[0], 0.5, 1e-13));
    CHECK(close_rel(f1.normalizer(), 4.0 / (3.0 * std::sqrt(M_PI)), 1e-13));
}

TEST_CASE("builder error paths", "[catalog]") {
    CHECK_THROWS_WITH(build_named("nope", std::vector<double>{1.0}),
                      Catch::Matchers::ContainsSubstring("unknown distribution"));
    CHECK_THROWS_WITH(build_named("lindley", std::vector<double>{1.0, 2.0}),
                      Catch::Matchers::ContainsSubstring("expects 1 parameter"));
    CHECK_THROWS_AS(build_named("lindley", std::vector<double>{-1.0}), std::invalid_argument);
    CHECK_THROWS_WITH(build_named("gamma", std::vector<double>{2.5, 1.0}),
                      Catch::Matchers::ContainsSubstring("integer"));
    CHECK_THROWS_AS(build_named("weibull", std::vector<double>{0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_named("generalized_gamma", std::vector<double>{2.0, 1.0, 1.5}),
                    std::invalid_argument);
    // non-integer power is fine for generalized_gamma
    CHECK_NOTHROW(build_named("generalized_gamma", std::vector<double>{0.8, 1.0, 2.0}));
}
