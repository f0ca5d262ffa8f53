#include "hqm/record.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "hqm/error.hpp"

namespace hqm {

using nlohmann::json;

namespace {

std::string approx(const Rational& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "~%.15g", r.to_double());
    return buf;
}

json rational_field(const Rational& r) { return r.str(); }

Rational read_rational(const json& j)
{
    if (!j.is_string())
        throw DomainError("expected a rational encoded as a string");
    return Rational::parse(j.get<std::string>());
}

json breakdown_json(const std::vector<Contribution>& b, bool decimal)
{
    json arr = json::array();
    for (const auto& c : b) {
        json e = {{"m", c.m}, {"contribution", rational_field(c.value)}};
        if (decimal)
            e["contribution_decimal"] = approx(c.value);
        arr.push_back(std::move(e));
    }
    return arr;
}

std::vector<Contribution> read_breakdown(const json& arr)
{
    std::vector<Contribution> out;
    for (const auto& e : arr)
        out.push_back({e.at("m").get<std::int64_t>(), read_rational(e.at("contribution"))});
    return out;
}

std::string breakdown_inline(const std::vector<Contribution>& b)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? ", " : "") << "m=" << b[i].m << ": " << b[i].value;
    os << "]";
    return os.str();
}

} // namespace

std::string to_json(const OutputRecord& rec, bool decimal)
{
    json j;
    j["command"] = rec.command;
    if (rec.query) {
        const auto& q = *rec.query;
        j["query"] = {{"r", q.r}, {"d", q.d}, {"a", q.a}, {"w", q.w}, {"g", q.g}, {"u", {q.u.u1, q.u.u2}}, {"side", q.side}};
    }
    if (rec.series)
        j["series"] = {{"identity", rec.series->identity}, {"genus", rec.series->genus}, {"order", rec.series->order}};
    if (rec.value) {
        j["value"] = rational_field(*rec.value);
        if (decimal)
            j["value_decimal"] = approx(*rec.value);
    }
    if (rec.raw_value)
        j["raw_value"] = *rec.raw_value;
    j["breakdown"] = breakdown_json(rec.breakdown, decimal);
    j["route"] = rec.route;
    j["conjectural"] = rec.conjectural;
    if (!rec.routes.empty()) {
        json arr = json::array();
        for (const auto& r : rec.routes) {
            json e = {{"route", r.route},
                      {"value", rational_field(r.value)},
                      {"breakdown", breakdown_json(r.breakdown, decimal)},
                      {"conjectural", r.conjectural}};
            if (decimal)
                e["value_decimal"] = approx(r.value);
            arr.push_back(std::move(e));
        }
        j["routes"] = std::move(arr);
    }
    if (!rec.coefficients.empty()) {
        json arr = json::array();
        for (const auto& c : rec.coefficients) {
            json e = {{"exponent", c.exponent}, {"lhs", rational_field(c.lhs)}, {"rhs", rational_field(c.rhs)}};
            if (decimal) {
                e["lhs_decimal"] = approx(c.lhs);
                e["rhs_decimal"] = approx(c.rhs);
            }
            arr.push_back(std::move(e));
        }
        j["coefficients"] = std::move(arr);
    }
    if (!rec.identity_checks.empty()) {
        json arr = json::array();
        for (const auto& c : rec.identity_checks)
            arr.push_back({{"name", c.name}, {"pass", c.pass}});
        j["identity_checks"] = std::move(arr);
    }
    if (rec.summary) {
        const auto& s = *rec.summary;
        j["summary"] = {{"total", s.total}, {"agree", s.agree}, {"disagree", s.disagree}, {"unsupported", s.unsupported}};
    }
    return j.dump();
}

OutputRecord record_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed record: ") + e.what());
    }
    try {
        OutputRecord rec;
        rec.command = j.at("command").get<std::string>();
        if (j.contains("query")) {
            const auto& q = j["query"];
            rec.query = QueryEcho{q.at("r").get<std::int64_t>(),
                                  q.at("d").get<std::int64_t>(),
                                  q.at("a").get<std::int64_t>(),
                                  q.at("w").get<std::int64_t>(),
                                  q.at("g").get<std::int64_t>(),
                                  {q.at("u").at(0).get<std::int64_t>(), q.at("u").at(1).get<std::int64_t>()},
                                  q.at("side").get<std::string>()};
        }
        if (j.contains("series")) {
            const auto& s = j["series"];
            rec.series = SeriesEcho{s.at("identity").get<std::string>(), s.at("genus").get<std::int64_t>(),
                                    s.at("order").get<std::int64_t>()};
        }
        if (j.contains("value"))
            rec.value = read_rational(j["value"]);
        if (j.contains("raw_value"))
            rec.raw_value = j["raw_value"].get<std::string>();
        rec.breakdown = read_breakdown(j.at("breakdown"));
        rec.route = j.at("route").get<std::string>();
        rec.conjectural = j.at("conjectural").get<bool>();
        if (j.contains("routes"))
            for (const auto& r : j["routes"])
                rec.routes.push_back({r.at("route").get<std::string>(), read_rational(r.at("value")),
                                      read_breakdown(r.at("breakdown")), r.at("conjectural").get<bool>()});
        if (j.contains("coefficients"))
            for (const auto& c : j["coefficients"])
                rec.coefficients.push_back(
                    {c.at("exponent").get<std::int64_t>(), read_rational(c.at("lhs")), read_rational(c.at("rhs"))});
        if (j.contains("identity_checks"))
            for (const auto& c : j["identity_checks"])
                rec.identity_checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>()});
        if (j.contains("summary")) {
            const auto& s = j["summary"];
            rec.summary = SweepSummary{s.at("total").get<std::int64_t>(), s.at("agree").get<std::int64_t>(),
                                       s.at("disagree").get<std::int64_t>(), s.at("unsupported").get<std::int64_t>()};
        }
        return rec;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed record: ") + e.what());
    }
}

std::string to_table(const OutputRecord& rec, bool decimal)
{
    std::ostringstream os;
    os << "command: " << rec.command << "\n";
    if (rec.query) {
        const auto& q = *rec.query;
        os << "query: r=" << q.r << " d=" << q.d << " a=" << q.a << " w=" << q.w << " g=" << q.g << " u=(" << q.u.u1
           << "," << q.u.u2 << ") side=" << q.side << "\n";
    }
    if (rec.series)
        os << "series: identity=" << rec.series->identity << " genus=" << rec.series->genus
           << " order=" << rec.series->order << "\n";
    if (rec.value) {
        os << "value: " << *rec.value;
        if (decimal)
            os << "  (decimal " << approx(*rec.value) << ")";
        os << "\n";
    }
    if (rec.raw_value)
        os << "raw_value: " << *rec.raw_value << "\n";
    os << "route: " << rec.route << "\n";
    os << "conjectural: " << (rec.conjectural ? "true" : "false") << "\n";
    if (!rec.breakdown.empty()) {
        os << "breakdown:\n";
        for (const auto& c : rec.breakdown) {
            os << "  m=" << c.m << "  " << c.value;
            if (decimal)
                os << "  (decimal " << approx(c.value) << ")";
            os << "\n";
        }
    }
    if (!rec.routes.empty()) {
        os << "routes:\n";
        for (const auto& r : rec.routes)
            os << "  " << r.route << "  value=" << r.value << "  conjectural=" << (r.conjectural ? "true" : "false")
               << "  breakdown=" << breakdown_inline(r.breakdown) << "\n";
    }
    if (!rec.coefficients.empty()) {
        os << "coefficients:\n  w\tlhs\trhs\n";
        for (const auto& c : rec.coefficients) {
            os << "  " << c.exponent << "\t" << c.lhs << "\t" << c.rhs;
            if (decimal)
                os << "\t" << approx(c.lhs) << "\t" << approx(c.rhs);
            os << "\n";
        }
    }
    if (!rec.identity_checks.empty()) {
        os << "identity_checks:\n";
        for (const auto& c : rec.identity_checks)
            os << "  " << c.name << "  " << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    if (rec.summary) {
        const auto& s = *rec.summary;
        os << "summary: " << s.agree << "/" << s.total << " agree";
        if (s.disagree)
            os << ", " << s.disagree << " disagree";
        if (s.unsupported)
            os << ", " << s.unsupported << " unsupported";
        os << "\n";
    }
    return os.str();
}

} // namespace hqm
