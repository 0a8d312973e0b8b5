#include "polymix/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace polymix {

namespace {

bool is_integer(double v) {
    return std::isfinite(v) && std::floor(v) == v;
}

std::vector<double> unit_last(std::size_t size) {
    std::vector<double> theta(size, 0.0);
    theta.back() = 1.0;
    return theta;
}

std::vector<double> normalized(std::vector<double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    for (double& w : weights) w /= total;
    return weights;
}

using P = std::span<const double>;

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> cat;

    cat.push_back({"exponential",
                   {{"beta", false}},
                   "classical",
                   [](P v) { return FamilyParams{{1.0}, v[0], 1.0}; },
                   [](P) { return std::vector<double>{1.0}; }});

    cat.push_back({"gamma",
                   {{"shape", true}, {"beta", false}},
                   "classical",
                   [](P v) { return FamilyParams{unit_last(static_cast<std::size_t>(v[0])), v[1], 1.0}; },
                   [](P v) {
                       std::vector<double> mp(static_cast<std::size_t>(v[0]), 0.0);
                       mp.back() = 1.0;
                       return mp;
                   }});

    cat.push_back({"weibull",
                   {{"power", true}, {"beta", false}},
                   "Weibull (1951); Frechet (1927)",
                   [](P v) { return FamilyParams{unit_last(static_cast<std::size_t>(v[0])), v[1], v[0]}; },
                   [](P v) {
                       std::vector<double> mp(static_cast<std::size_t>(v[0]), 0.0);
                       mp.back() = 1.0;
                       return mp;
                   }});

    cat.push_back({"generalized_gamma",
                   {{"power", false}, {"beta", false}, {"shape", true}},
                   "Stacy (1962)",
                   [](P v) { return FamilyParams{unit_last(static_cast<std::size_t>(v[2])), v[1], v[0]}; },
                   [](P v) {
                       std::vector<double> mp(static_cast<std::size_t>(v[2]), 0.0);
                       mp.back() = 1.0;
                       return mp;
                   }});

    cat.push_back({"lindley",
                   {{"beta", false}},
                   "Lindley (1958)",
                   [](P v) { return FamilyParams{{1.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b, 1.0});
                   }});

    cat.push_back({"aradhana",
                   {{"beta", false}},
                   "Shanker (2016)",
                   [](P v) { return FamilyParams{{1.0, 2.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b, 2.0 * b, 2.0});
                   }});

    cat.push_back({"ishita",
                   {{"beta", false}},
                   "Shanker & Shukla (2017)",
                   [](P v) { return FamilyParams{{v[0], 0.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b * b, 0.0, 2.0});
                   }});

    cat.push_back({"akash",
                   {{"beta", false}},
                   "Shanker (2015)",
                   [](P v) { return FamilyParams{{1.0, 0.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b, 0.0, 2.0});
                   }});

    cat.push_back({"amarendra",
                   {{"beta", false}},
                   "Shanker (2016)",
                   [](P v) { return FamilyParams{{1.0, 1.0, 1.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b * b, b * b, 2.0 * b, 6.0});
                   }});

    cat.push_back({"sujatha",
                   {{"beta", false}},
                   "Shanker (2016)",
                   [](P v) { return FamilyParams{{1.0, 1.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b, b, 2.0});
                   }});

    cat.push_back({"shanker",
                   {{"beta", false}},
                   "Shanker (2015)",
                   [](P v) { return FamilyParams{{v[0], 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b, 1.0});
                   }});

    cat.push_back({"akshaya",
                   {{"beta", false}},
                   "Shanker (2017)",
                   [](P v) { return FamilyParams{{1.0, 3.0, 3.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b * b, 3.0 * b * b, 6.0 * b, 6.0});
                   }});

    cat.push_back({"suja",
                   {{"beta", false}},
                   "Shanker (2017)",
                   [](P v) { return FamilyParams{{1.0, 0.0, 0.0, 0.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b * b * b, 0.0, 0.0, 0.0, 24.0});
                   }});

    cat.push_back({"devya",
                   {{"beta", false}},
                   "Shanker (2016)",
                   [](P v) { return FamilyParams{{1.0, 1.0, 1.0, 1.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b * b * b, b * b * b, 2.0 * b * b, 6.0 * b, 24.0});
                   }});

    cat.push_back({"quasi_lindley",
                   {{"alpha", false}, {"beta", false}},
                   "Shanker & Mishra (2013)",
                   [](P v) { return FamilyParams{{v[0], v[1]}, v[1], 1.0}; },
                   [](P v) { return normalized({v[0], 1.0}); }});

    cat.push_back({"gen_sujatha",
                   {{"alpha", false}, {"beta", false}},
                   "Shanker, Shukla & Fesshaye (2017)",
                   [](P v) { return FamilyParams{{1.0, 1.0, v[0]}, v[1], 1.0}; },
                   [](P v) {
                       const double a = v[0];
                       const double b = v[1];
                       return normalized({b * b, b, 2.0 * a});
                   }});

    // The source lists degree 5 but names only theta_0 and theta_4; the
    // stated two-component mixture pins the degree at 4.
    cat.push_back({"rani",
                   {{"beta", false}},
                   "Shanker (2017)",
                   [](P v) { return FamilyParams{{v[0], 0.0, 0.0, 0.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b * b * b * b, 0.0, 0.0, 0.0, 24.0});
                   }});

    cat.push_back({"garima",
                   {{"beta", false}},
                   "Shanker (2016)",
                   [](P v) { return FamilyParams{{v[0] + 1.0, v[0]}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b + 1.0, 1.0});
                   }});

    cat.push_back({"janardan",
                   {{"alpha", false}, {"mu", false}},
                   "Shanker et al. (2013)",
                   [](P v) { return FamilyParams{{1.0, v[0]}, v[1] / v[0], 1.0}; },
                   [](P v) {
                       const double a = v[0];
                       const double mu = v[1];
                       return normalized({mu, a * a});
                   }});

    cat.push_back({"om",
                   {{"beta", false}},
                   "Shanker & Shukla (2018)",
                   [](P v) { return FamilyParams{{1.0, 4.0, 6.0, 4.0, 1.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b * b * b * b, 4.0 * b * b * b, 12.0 * b * b, 24.0 * b, 24.0});
                   }});

    cat.push_back({"sushila",
                   {{"alpha", false}, {"mu", false}},
                   "Shanker et al. (2013)",
                   [](P v) { return FamilyParams{{1.0, 1.0 / v[0]}, v[1] / v[0], 1.0}; },
                   [](P v) { return normalized({v[1], 1.0}); }});

    cat.push_back({"gen_aradhana",
                   {{"alpha", false}, {"beta", false}},
                   "Welday & Shanker (2018)",
                   [](P v) { return FamilyParams{{1.0, 2.0 * v[0], v[0] * v[0]}, v[1], 1.0}; },
                   [](P v) {
                       const double a = v[0];
                       const double b = v[1];
                       return normalized({b * b, 2.0 * a * b, 2.0 * a * a});
                   }});

    cat.push_back({"gen_lindley3",
                   {{"alpha", false}, {"lambda", false}, {"beta", false}},
                   "Shanker et al. (2017)",
                   [](P v) { return FamilyParams{{v[0], v[1]}, v[2], 1.0}; },
                   [](P v) { return normalized({v[0] * v[2], v[1]}); }});

    cat.push_back({"xgamma",
                   {{"beta", false}},
                   "Sen, Maiti & Chandra (2016)",
                   [](P v) { return FamilyParams{{1.0, 0.0, v[0] / 2.0}, v[0], 1.0}; },
                   [](P v) {
                       const double b = v[0];
                       return normalized({b, 0.0, 1.0});
                   }});

    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = make_catalog();
    return cat;
}

const CatalogEntry* find_entry(std::string_view name) {
    for (const CatalogEntry& entry : catalog()) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

Family build_named(std::string_view name, std::span<const double> params) {
    const CatalogEntry* entry = find_entry(name);
    if (entry == nullptr) {
        throw std::invalid_argument("catalog: unknown distribution '" + std::string(name) + "'");
    }
    if (params.size() != entry->arity()) {
        throw std::invalid_argument(entry->name + " expects " + std::to_string(entry->arity()) +
                                    " parameter(s), got " + std::to_string(params.size()));
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        const CatalogParam& spec = entry->params[i];
        if (!(params[i] > 0.0) || !std::isfinite(params[i])) {
            throw std::invalid_argument(entry->name + ": parameter '" + spec.name +
                                        "' must be positive and finite");
        }
        if (spec.integer_valued && !is_integer(params[i])) {
            throw std::invalid_argument(entry->name + ": parameter '" + spec.name +
                                        "' must be a positive integer (non-integer shapes are "
                                        "available through raw d/beta/theta parameters)");
        }
    }
    return Family(entry->build(params));
}

Family build_binomial(double a, double b, int p, double beta) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("build_binomial: a must be positive and finite");
    }
    if (!(b >= 0.0) || !std::isfinite(b)) {
        throw std::invalid_argument("build_binomial: b must be nonnegative and finite");
    }
    if (p < 0) {
        throw std::invalid_argument("build_binomial: p must be nonnegative");
    }
    std::vector<double> theta(static_cast<std::size_t>(p) + 1);
    theta[0] = std::pow(a, p);
    for (int s = 1; s <= p; ++s) {
        theta[s] = theta[s - 1] * b * static_cast<double>(p - s + 1) / (a * static_cast<double>(s));
    }
    for (double t : theta) {
        if (!std::isfinite(t)) {
            throw std::overflow_error("build_binomial: binomial coefficients exceed double range");
        }
    }
    return Family(FamilyParams{std::move(theta), beta, 1.0});
}

Family build_halfnormal_maxwell(double beta) {
    return Family(FamilyParams{{1.0, 0.0, 1.0}, beta, 2.0});
}

}  // namespace polymix
