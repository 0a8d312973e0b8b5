// Named sub-model constructors. Every entry carries the closed-form
// mixing proportions from its source, which the tests replay against the
// general construction as golden values.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polymix/family.hpp"

namespace polymix {

struct CatalogParam {
    std::string name;
    bool integer_valued = false;
};

struct CatalogEntry {
    std::string name;
    std::vector<CatalogParam> params;
    std::string reference;
    std::function<FamilyParams(std::span<const double>)> build;
    // Closed-form mixing proportions, full vector aligned with theta
    // (zeros where theta_i = 0).
    std::function<std::vector<double>(std::span<const double>)> analytic_mp;

    std::size_t arity() const { return params.size(); }
};

// All 24 entries, in a fixed order. Names are the stable identifiers
// accepted by the CLI's name:params syntax.
const std::vector<CatalogEntry>& catalog();

// nullptr when the name is unknown.
const CatalogEntry* find_entry(std::string_view name);

// Builds the named family after checking arity, positivity and the
// integer constraints some entries impose.
Family build_named(std::string_view name, std::span<const double> params);

// (a + b x)^p e^(-beta x): theta_s = C(p, s) a^(p-s) b^s, d = 1. Throws
// std::overflow_error when the coefficients exceed double range.
Family build_binomial(double a, double b, int p, double beta);

// Two-component d = 2 mixture of a half-normal and a Maxwell density:
// theta = (1, 0, 1), i.e. c (1 + x^2) exp(-beta x^2).
Family build_halfnormal_maxwell(double beta);

}  // namespace polymix
