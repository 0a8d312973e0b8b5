#include "polymix/distspec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "polymix/catalog.hpp"

namespace polymix {

namespace {

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

double parse_number(const std::string& text, std::size_t begin, std::size_t end) {
    double value = 0.0;
    const auto res = std::from_chars(text.data() + begin, text.data() + end, value);
    if (res.ec != std::errc{} || res.ptr != text.data() + end) {
        fail(begin, "expected a decimal number, got '" + text.substr(begin, end - begin) + "'");
    }
    return value;
}

std::vector<double> parse_number_list(const std::string& text, std::size_t begin, std::size_t end,
                                      char sep) {
    std::vector<double> values;
    std::size_t field_start = begin;
    for (std::size_t i = begin; i <= end; ++i) {
        if (i == end || text[i] == sep) {
            if (i == field_start) fail(field_start, "empty number field");
            values.push_back(parse_number(text, field_start, i));
            field_start = i + 1;
        }
    }
    return values;
}

FamilyParams parse_raw_body(const std::string& text, std::size_t begin) {
    std::optional<double> d;
    std::optional<double> beta;
    std::optional<std::vector<double>> theta;

    std::size_t pos = begin;
    while (pos < text.size()) {
        const std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos) fail(pos, "expected key=value");
        const std::string key = text.substr(pos, eq - pos);
        // theta's value list uses ';', so the entry ends at the next ','.
        std::size_t entry_end = text.find(',', eq + 1);
        if (entry_end == std::string::npos) entry_end = text.size();
        if (key == "d") {
            if (d) fail(pos, "duplicate key 'd'");
            d = parse_number(text, eq + 1, entry_end);
        } else if (key == "beta") {
            if (beta) fail(pos, "duplicate key 'beta'");
            beta = parse_number(text, eq + 1, entry_end);
        } else if (key == "theta") {
            if (theta) fail(pos, "duplicate key 'theta'");
            theta = parse_number_list(text, eq + 1, entry_end, ';');
        } else {
            fail(pos, "unknown key '" + key + "' (expected d, beta or theta)");
        }
        pos = entry_end + 1;
    }
    if (!d || !beta || !theta) fail(begin, "raw spec requires d=, beta= and theta=");
    FamilyParams params{std::move(*theta), *beta, *d};
    validate(params);  // raw form must stand as valid FamilyParams
    return params;
}

}  // namespace

DistSpec parse_dist_spec(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) fail(0, "empty distribution spec");
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
        fail(s.size(), "expected ':' after the distribution name");
    }
    if (colon == 0) fail(0, "missing distribution name");
    const std::string head = s.substr(0, colon);

    DistSpec spec;
    if (head == "raw") {
        spec.raw = parse_raw_body(s, colon + 1);
        return spec;
    }
    const CatalogEntry* entry = find_entry(head);
    if (entry == nullptr) {
        throw std::invalid_argument("unknown distribution '" + head + "'");
    }
    spec.name = head;
    spec.params = parse_number_list(s, colon + 1, s.size(), ',');
    if (spec.params.size() != entry->arity()) {
        throw std::invalid_argument(head + " expects " + std::to_string(entry->arity()) +
                                    " parameter(s), got " + std::to_string(spec.params.size()));
    }
    return spec;
}

Family realize(const DistSpec& spec) {
    if (spec.is_raw()) return Family(*spec.raw);
    return build_named(spec.name, spec.params);
}

GridSpec parse_grid(std::string_view text) {
    const std::string s = strip_spaces(text);
    const std::size_t c1 = s.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw std::invalid_argument("grid spec must be start:stop:count");
    }
    GridSpec g;
    g.start = parse_number(s, 0, c1);
    g.stop = parse_number(s, c1 + 1, c2);
    const double count = parse_number(s, c2 + 1, s.size());
    if (!(count >= 2.0) || std::floor(count) != count) {
        throw std::invalid_argument("grid count must be an integer >= 2");
    }
    g.count = static_cast<std::size_t>(count);
    if (!(g.start >= 0.0) || !(g.stop >= g.start) || !std::isfinite(g.stop)) {
        throw std::invalid_argument("grid requires 0 <= start <= stop, both finite");
    }
    return g;
}

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> xs(g.count);
    const double step = (g.stop - g.start) / static_cast<double>(g.count - 1);
    for (std::size_t i = 0; i < g.count; ++i) {
        xs[i] = g.start + static_cast<double>(i) * step;
    }
    xs.back() = g.stop;
    return xs;
}

}  // namespace polymix
