#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hqm/arith.hpp"
#include "hqm/exactalg/rational.hpp"
#include "hqm/invariants.hpp"
#include "hqm/selfcheck.hpp"

namespace hqm {

struct QueryEcho {
    std::int64_t r = 0, d = 0, a = 0, w = 0, g = 0;
    ChernClass u;
    std::string side = "E";

    friend bool operator==(const QueryEcho&, const QueryEcho&) = default;
};

struct SeriesEcho {
    std::string identity;
    std::int64_t genus = 0;
    std::int64_t order = 0;

    friend bool operator==(const SeriesEcho&, const SeriesEcho&) = default;
};

struct CoefficientRow {
    std::int64_t exponent = 0;
    Rational lhs, rhs;

    friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;
};

struct RouteReport {
    std::string route;
    Rational value;
    std::vector<Contribution> breakdown;
    bool conjectural = false;

    friend bool operator==(const RouteReport&, const RouteReport&) = default;
};

struct SweepSummary {
    std::int64_t total = 0;
    std::int64_t agree = 0;
    std::int64_t disagree = 0;
    std::int64_t unsupported = 0;

    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

/// Machine-readable result of one CLI command. Rationals are always stored
/// and serialized exactly as "p/q" strings. docs/output_schema.json
/// documents the JSON layout.
struct OutputRecord {
    std::string command;
    std::optional<QueryEcho> query;
    std::optional<SeriesEcho> series;
    std::optional<Rational> value;
    /// value * t, present when the unreduced form was requested.
    std::optional<std::string> raw_value;
    std::vector<Contribution> breakdown;
    std::string route;
    bool conjectural = false;
    std::vector<RouteReport> routes;
    std::vector<CoefficientRow> coefficients;
    std::vector<IdentityCheck> identity_checks;
    std::optional<SweepSummary> summary;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Single-line JSON. With `decimal`, every exact value gets an extra
/// "*_decimal" approximation next to it; those fields are ignored on read.
std::string to_json(const OutputRecord& rec, bool decimal = false);
/// Throws DomainError on malformed input.
OutputRecord record_from_json(std::string_view text);
/// Human-readable rendering carrying the same fields as the JSON form.
std::string to_table(const OutputRecord& rec, bool decimal = false);

} // namespace hqm
