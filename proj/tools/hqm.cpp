// hqm: command-line front end for the genus-1 quasimap invariant library.
//
// Exit codes: 0 success, 2 route disagreement / failed identity,
// 3 unsupported case in strict mode, 4 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hqm/error.hpp"
#include "hqm/invariants.hpp"
#include "hqm/record.hpp"
#include "hqm/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInvalid = 4;

struct OutputOptions {
    std::string format = "table";
    bool decimal = false;
    std::string out;
};

struct QueryOptions {
    std::int64_t r = 0, d = 0, a = 0, w = 0, g = 0;
    std::optional<std::int64_t> u1, u2;
    bool permissive = false;

    std::optional<hqm::ChernClass> u_choice() const
    {
        if (u1.has_value() != u2.has_value())
            throw hqm::InvalidQuery("--u1 and --u2 must be given together");
        if (!u1)
            return std::nullopt;
        return hqm::ChernClass{*u1, *u2};
    }
    hqm::Mode mode() const { return permissive ? hqm::Mode::permissive : hqm::Mode::strict; }
};

void add_output_options(CLI::App* cmd, OutputOptions& o)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    cmd->add_flag("--decimal", o.decimal, "Append decimal approximations (marked with ~)");
    cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
}

void add_mode_flags(CLI::App* cmd, QueryOptions& q)
{
    auto* strict = cmd->add_flag("--strict", "Reject unsupported Quot classes (default)");
    auto* permissive = cmd->add_flag("--permissive", q.permissive, "Evaluate unsupported cases conjecturally");
    strict->excludes(permissive);
}

void emit(const std::string& text, const OutputOptions& o)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw hqm::DomainError("cannot open output file " + o.out);
    f << text;
}

std::string render(const hqm::OutputRecord& rec, const OutputOptions& o)
{
    return o.format == "json" ? hqm::to_json(rec, o.decimal) + "\n" : hqm::to_table(rec, o.decimal);
}

hqm::QueryEcho echo(const hqm::InvariantQuery& q, const std::string& side)
{
    return {q.r(), q.d(), q.a(), q.w(), q.g(), q.u_choice(), side};
}

hqm::RouteReport report(const hqm::InvariantResult& res)
{
    return {hqm::to_string(res.route), res.value_t, res.breakdown, res.conjectural};
}

// Closed form where proven; in permissive mode unsupported queries fall back
// to the conjectural formula, flagged.
hqm::InvariantResult closed_or_conjecture(const hqm::InvariantQuery& q, bool curve_side, hqm::Mode mode)
{
    try {
        return curve_side ? hqm::qm_C(q, hqm::Route::closed_form, mode) : hqm::qm_E(q, hqm::Route::closed_form, mode);
    } catch (const hqm::UnsupportedCase&) {
        if (mode == hqm::Mode::strict)
            throw;
        return curve_side ? hqm::qm_C(q, hqm::Route::conjecture) : hqm::qm_E(q, hqm::Route::conjecture);
    }
}

hqm::InvariantResult oracle(const hqm::InvariantQuery& q, bool curve_side, hqm::Mode mode)
{
    return curve_side ? hqm::qm_C(q, hqm::Route::wall_crossing_oracle, mode)
                      : hqm::qm_E(q, hqm::Route::wall_crossing_oracle, mode);
}

void note_conjectural(bool conjectural)
{
    if (conjectural)
        std::cerr << "note: CONJECTURAL value (outside the proven cases)\n";
}

int run_invariant(const QueryOptions& qo, const std::string& route, const std::string& side, bool raw,
                  const OutputOptions& o)
{
    const hqm::InvariantQuery q(qo.r, qo.d, qo.a, qo.w, qo.g, qo.u_choice());
    const bool curve_side = side == "C";
    hqm::OutputRecord rec;
    rec.command = "invariant";

    if (q.w() == 0) {
        if (q.d_mod_r() != 0)
            throw hqm::UnsupportedCase("degree-0 quasimaps are only known for d = 0 (constant maps)");
        rec.query = echo(q, "C");
        rec.value = hqm::qm_constant_map(q.r(), q.a(), q.g());
        rec.route = hqm::to_string(hqm::Route::constant_map);
        emit(render(rec, o), o);
        return kExitOk;
    }

    rec.query = echo(q, side);
    int code = kExitOk;
    hqm::InvariantResult main;
    if (route == "closed") {
        main = closed_or_conjecture(q, curve_side, qo.mode());
    } else if (route == "oracle") {
        main = oracle(q, curve_side, qo.mode());
    } else if (route == "conjecture") {
        main = curve_side ? hqm::qm_C(q, hqm::Route::conjecture) : hqm::qm_E(q, hqm::Route::conjecture);
    } else {
        const hqm::InvariantResult closed = closed_or_conjecture(q, curve_side, qo.mode());
        main = oracle(q, curve_side, qo.mode());
        const bool agree = closed.value_t == main.value_t;
        rec.routes = {report(closed), report(main)};
        rec.identity_checks.push_back({"routes_agree", agree});
        if (!agree)
            code = kExitDisagree;
        main.conjectural = main.conjectural || closed.conjectural;
    }
    rec.value = main.value_t;
    if (raw)
        rec.raw_value = main.raw().str();
    rec.breakdown = main.breakdown;
    rec.route = route == "both" ? "both" : hqm::to_string(main.route);
    rec.conjectural = main.conjectural;
    emit(render(rec, o), o);
    note_conjectural(rec.conjectural);
    if (code == kExitDisagree)
        std::cerr << "error: closed form and wall-crossing oracle disagree\n";
    return code;
}

std::int64_t default_order()
{
    const char* env = std::getenv("QM_TRUNCATION_DEFAULT");
    if (env == nullptr || *env == '\0')
        return 10;
    try {
        std::size_t pos = 0;
        long long v = std::stoll(env, &pos);
        if (pos != std::string(env).size() || v < 1)
            throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw hqm::InvalidQuery(std::string("QM_TRUNCATION_DEFAULT must be a positive integer, got '") + env + "'");
    }
}

int run_series(const std::string& identity, std::int64_t genus, std::optional<std::int64_t> order,
               const std::string& route, const OutputOptions& o)
{
    const std::int64_t n = order ? *order : default_order();
    if (n < 1)
        throw hqm::InvalidTruncation("--order must be >= 1");
    const hqm::Route r = route == "oracle" ? hqm::Route::wall_crossing_oracle : hqm::Route::closed_form;
    const hqm::SeriesIdentity s =
        identity == "A" ? hqm::series_theorem_A(genus, n, r) : hqm::series_theorem_B(genus, n, r);
    hqm::OutputRecord rec;
    rec.command = "series";
    rec.series = hqm::SeriesEcho{identity, genus, n};
    rec.route = hqm::to_string(r);
    for (std::int64_t w = 1; w <= n; ++w)
        rec.coefficients.push_back({w, s.lhs[w], s.rhs[w]});
    rec.identity_checks.push_back({"theorem_" + identity, s.equal});
    emit(render(rec, o), o);
    return s.equal ? kExitOk : kExitDisagree;
}

std::vector<std::int64_t> parse_genus_range(const std::string& text)
{
    auto to_int = [&](const std::string& s) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != s.size())
            throw hqm::InvalidQuery("bad genus range '" + text + "'");
        return static_cast<std::int64_t>(v);
    };
    const auto dots = text.find("..");
    std::int64_t lo = 0, hi = 0;
    if (dots == std::string::npos)
        lo = hi = to_int(text);
    else {
        lo = to_int(text.substr(0, dots));
        hi = to_int(text.substr(dots + 2));
    }
    std::vector<std::int64_t> out;
    for (std::int64_t g = lo; g <= hi; ++g)
        out.push_back(g);
    return out;
}

std::string sweep_line(const hqm::OutputRecord& rec)
{
    std::ostringstream os;
    const auto& q = *rec.query;
    os << "r=" << q.r << " d=" << q.d << " a=" << q.a << " g=" << q.g << " w=" << q.w;
    if (rec.routes.empty())
        os << "  unsupported";
    for (const auto& r : rec.routes) {
        os << "  " << r.route << "=" << r.value << " [";
        for (std::size_t i = 0; i < r.breakdown.size(); ++i)
            os << (i ? ", " : "") << "m=" << r.breakdown[i].m << ": " << r.breakdown[i].value;
        os << "]";
    }
    os << "  conjectural=" << (rec.conjectural ? "true" : "false");
    for (const auto& c : rec.identity_checks)
        os << "  " << c.name << "=" << (c.pass ? "PASS" : "FAIL");
    os << "\n";
    return os.str();
}

int run_sweep(const QueryOptions& qo, std::optional<std::int64_t> w_max, std::int64_t w_min,
              const std::vector<std::int64_t>& w_list, const std::string& genus_range, const OutputOptions& o)
{
    std::vector<std::int64_t> ws = w_list;
    if (w_max)
        for (std::int64_t w = w_min; w <= *w_max; ++w)
            ws.push_back(w);
    for (std::int64_t w : ws)
        if (w < 1)
            throw hqm::InvalidQuery("sweep degrees must be >= 1");
    const auto genera = parse_genus_range(genus_range);

    std::ostringstream out;
    hqm::SweepSummary summary;
    for (std::int64_t g : genera)
        for (std::int64_t w : ws) {
            const hqm::InvariantQuery q(qo.r, qo.d, qo.a, w, g, qo.u_choice());
            hqm::OutputRecord rec;
            rec.command = "sweep_point";
            rec.query = echo(q, "E");
            ++summary.total;
            try {
                const hqm::InvariantResult closed = closed_or_conjecture(q, false, qo.mode());
                const hqm::InvariantResult orc = oracle(q, false, qo.mode());
                const bool agree = closed.value_t == orc.value_t;
                rec.routes = {report(closed), report(orc)};
                rec.value = orc.value_t;
                rec.breakdown = orc.breakdown;
                rec.route = "both";
                rec.conjectural = closed.conjectural || orc.conjectural;
                rec.identity_checks.push_back({"routes_agree", agree});
                (agree ? summary.agree : summary.disagree) += 1;
            } catch (const hqm::UnsupportedCase&) {
                rec.route = "none";
                ++summary.unsupported;
            }
            out << (o.format == "json" ? hqm::to_json(rec, o.decimal) + "\n" : sweep_line(rec));
        }

    hqm::OutputRecord total;
    total.command = "sweep";
    total.route = "both";
    total.summary = summary;
    total.identity_checks.push_back({"all_agree", summary.agree == summary.total});
    if (o.format == "json")
        out << hqm::to_json(total) << "\n";
    else
        out << summary.agree << "/" << summary.total << " agree"
            << (summary.disagree ? ", " + std::to_string(summary.disagree) + " disagree" : "")
            << (summary.unsupported ? ", " + std::to_string(summary.unsupported) + " unsupported" : "") << "\n";
    emit(out.str(), o);
    if (summary.disagree)
        return kExitDisagree;
    if (summary.unsupported)
        return kExitUnsupported;
    return kExitOk;
}

int run_selfcheck(const OutputOptions& o)
{
    hqm::OutputRecord rec;
    rec.command = "selfcheck";
    rec.route = "all";
    rec.identity_checks = hqm::run_selfcheck();
    emit(render(rec, o), o);
    for (const auto& c : rec.identity_checks)
        if (!c.pass)
            return kExitDisagree;
    return kExitOk;
}

void add_query_options(CLI::App* cmd, QueryOptions& q, bool with_w_and_g)
{
    cmd->add_option("-r,--rank", q.r, "Rank r")->required();
    cmd->add_option("-d,--deg-d", q.d, "Degree d on C")->required();
    cmd->add_option("-a,--deg-a", q.a, "Degree a on E, 0 <= a < r")->required();
    if (with_w_and_g) {
        cmd->add_option("-w,--degree-w", q.w, "Quasimap degree w")->required();
        cmd->add_option("-g,--genus", q.g, "Genus of C")->required();
    }
    cmd->add_option("--u1", q.u1, "Normalization class, rank component");
    cmd->add_option("--u2", q.u2, "Normalization class, degree component");
    add_mode_flags(cmd, q);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Genus-1 quasimap / Vafa-Witten invariants of Higgs SL_r moduli, in exact arithmetic"};
    app.require_subcommand(1);

    OutputOptions out;
    QueryOptions query;

    auto* inv = app.add_subcommand("invariant", "Compute a single invariant");
    std::string route = "closed", side = "E";
    bool raw = false;
    add_query_options(inv, query, true);
    inv->add_option("--route", route, "closed | oracle | both | conjecture")
        ->check(CLI::IsMember({"closed", "oracle", "both", "conjecture"}));
    inv->add_option("--side", side, "E (elliptic side) or C (curve side, = Vafa-Witten)")
        ->check(CLI::IsMember({"E", "C"}));
    inv->add_flag("--raw", raw, "Also print the unreduced t-linear value");
    add_output_options(inv, out);

    auto* ser = app.add_subcommand("series", "Check a generating-series identity");
    std::string identity;
    std::int64_t genus = 0;
    std::optional<std::int64_t> order;
    std::string series_route = "closed";
    ser->add_option("--identity", identity, "A (odd degrees, d = 1) or B (d = 0)")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    ser->add_option("-g,--genus", genus, "Genus of C")->required();
    ser->add_option("-N,--order", order, "Truncation order (default: $QM_TRUNCATION_DEFAULT or 10)");
    ser->add_option("--route", series_route, "closed | oracle")->check(CLI::IsMember({"closed", "oracle"}));
    add_output_options(ser, out);

    auto* sw = app.add_subcommand("sweep", "Compare closed form and wall-crossing oracle over a grid");
    std::optional<std::int64_t> w_max;
    std::int64_t w_min = 1;
    std::vector<std::int64_t> w_list;
    std::string genus_range = "2";
    add_query_options(sw, query, false);
    sw->add_option("--w-max", w_max, "Sweep w = w-min..w-max");
    sw->add_option("--w-min", w_min, "Lower end of the w range (default 1)");
    sw->add_option("--w-list", w_list, "Explicit list of w values")->delimiter(',');
    sw->add_option("--g", genus_range, "Genus or range lo..hi (default 2)");
    add_output_options(sw, out);

    auto* sc = app.add_subcommand("selfcheck", "Run the built-in property suites");
    add_output_options(sc, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (inv->parsed())
            return run_invariant(query, route, side, raw, out);
        if (ser->parsed())
            return run_series(identity, genus, order, series_route, out);
        if (sw->parsed())
            return run_sweep(query, w_max, w_min, w_list, genus_range, out);
        return run_selfcheck(out);
    } catch (const hqm::UnsupportedCase& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const hqm::RouteDisagreement& e) {
        std::cerr << "disagreement: " << e.what() << "\n";
        return kExitDisagree;
    } catch (const hqm::Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
}
