#include "ratlink/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ratlink/census.hpp"
#include "ratlink/formulas.hpp"
#include "ratlink/oeis.hpp"
#include "ratlink/seifert.hpp"

namespace ratlink {

namespace {

std::vector<TableRow> formula_rows(long long n_lo, long long n_hi) {
    std::vector<TableRow> rows;
    for (long long n = n_lo; n <= n_hi; ++n)
        for (long long d = 0; 2 * d <= n - 2; ++d)
            rows.push_back(TableRow{n, d, r1_count(n, d), r3_count(n, d), rs3_count(n, d),
                                    lambda_nd(n, d)});
    return rows;
}

std::string render_rows(const std::vector<TableRow>& rows, const Config& cfg) {
    if (cfg.format == "csv") return table_csv(rows);
    if (cfg.format == "text") return table_text(rows);
    return table_json(rows);
}

// Collects named pass/fail checks and renders the report.
struct Checker {
    struct Result {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Result> results;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    }
    void run(const std::string& name, const std::function<bool(std::string&)>& fn) {
        std::string detail;
        bool pass;
        try {
            pass = fn(detail);
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        results.push_back({name, pass, detail});
    }
    const Result* first_failure() const {
        for (const auto& r : results)
            if (!r.pass) return &r;
        return nullptr;
    }
    void render(const Config& cfg, std::ostream& out) const {
        if (cfg.format == "json") {
            nlohmann::ordered_json j;
            j["checks"] = nlohmann::ordered_json::array();
            for (const auto& r : results) {
                nlohmann::ordered_json c;
                c["name"] = r.name;
                c["pass"] = r.pass;
                if (!r.detail.empty()) c["detail"] = r.detail;
                j["checks"].push_back(c);
            }
            j["ok"] = first_failure() == nullptr;
            out << j.dump(2) << "\n";
        } else {
            for (const auto& r : results) {
                out << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.pass && !r.detail.empty()) out << ": " << r.detail;
                out << "\n";
            }
            out << (first_failure() == nullptr ? "ok" : "FAILED") << " (" << results.size()
                << " checks)\n";
        }
    }
};

// Hand-checked reference values of the deficiency-resolved counts for small
// crossing numbers, used by the "all" verification suite.
struct FrozenCell { long long n, d, r1, r3, rs3; };
const FrozenCell kFrozenTable[] = {
    {2, 0, 0, 1, 1},
    {3, 0, 0, 1, 1},
    {4, 0, 1, 1, 1},   {4, 1, 0, 1, 1},
    {5, 0, 2, 1, 1},   {5, 1, 0, 2, 0},
    {6, 0, 3, 2, 2},   {6, 1, 2, 3, 1},    {6, 2, 0, 1, 1},
    {7, 0, 4, 4, 2},   {7, 1, 6, 4, 0},    {7, 2, 0, 3, 1},
    {8, 0, 6, 7, 3},   {8, 1, 12, 8, 2},   {8, 2, 3, 6, 2},    {8, 3, 0, 1, 1},
    {9, 0, 10, 11, 3}, {9, 1, 20, 18, 0},  {9, 2, 12, 10, 2},  {9, 3, 0, 4, 0},
    {10, 0, 17, 17, 5}, {10, 1, 34, 37, 3}, {10, 2, 30, 21, 5}, {10, 3, 4, 10, 2},
    {10, 4, 0, 1, 1},
    {11, 0, 28, 27, 5}, {11, 1, 62, 68, 0}, {11, 2, 60, 51, 5}, {11, 3, 20, 20, 0},
    {11, 4, 0, 5, 1},
    {12, 0, 45, 44, 8}, {12, 1, 116, 119, 5}, {12, 2, 115, 118, 10}, {12, 3, 60, 45, 5},
    {12, 4, 5, 15, 3},  {12, 5, 0, 1, 1},
    {13, 0, 72, 72, 8}, {13, 1, 212, 208, 0}, {13, 2, 228, 246, 10}, {13, 3, 140, 116, 0},
    {13, 4, 30, 35, 3}, {13, 5, 0, 6, 0},
};
const long long kFrozenLambda[] = {0, 0, 2, 2, 5, 6, 15, 24, 51, 90, 187, 352, 715, 1386};

void verify_identities(long long n_max, Checker& ck) {
    ck.run("identities.h_equals_convolved_fib", [&](std::string& detail) {
        for (long long n = 2; n <= n_max; ++n)
            for (long long d = 0; 2 * d <= n - 2; ++d)
                if (h_count(n, d) != convolved_fib(d, n - d - 1)) {
                    detail = "n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
        return true;
    });
    ck.run("identities.rs3_equals_convolved_fib", [&](std::string& detail) {
        for (long long n = 2; n <= n_max; ++n)
            for (long long d = 0; 2 * d <= n - 2; ++d) {
                BigInt expect = 0;
                if ((n * d) % 2 == 0) expect = convolved_fib(d / 2, n / 2 - (d + 1) / 2);
                if (rs3_count(n, d) != expect) {
                    detail = "n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
            }
        return true;
    });
    ck.run("identities.h_recurrence", [&](std::string& detail) {
        for (long long n = 2; n + 1 <= n_max; ++n)
            for (long long d = -1; 2 * (d + 1) <= n - 1; ++d) {
                BigInt lhs = h_count(n + 1, d + 1);
                BigInt rhs = h_count(n, d + 1) + h_count(n - 1, d + 1) + h_count(n - 1, d);
                if (lhs != rhs) {
                    detail = "n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
            }
        return true;
    });
    ck.run("identities.lambda_total_sum", [&](std::string& detail) {
        for (long long n = 2; n <= n_max; ++n)
            if (!verify_corollary(n)) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        return true;
    });
    ck.run("identities.lambda_n0_formula", [&](std::string& detail) {
        for (long long n = 2; n <= n_max; ++n)
            if (lambda_n0(n) != lambda_nd(n, 0)) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        return true;
    });
    ck.run("identities.lambda_n0_monotone", [&](std::string& detail) {
        for (long long n = 3; n + 1 <= n_max; ++n)
            if (!(lambda_n0(n + 1) > lambda_n0(n))) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        return true;
    });
    ck.run("identities.exact_thirds", [&](std::string&) {
        // the evaluations throw if any division by 3 is inexact
        for (long long n = 2; n <= n_max; ++n) {
            lambda_count(n);
            if (n >= 4) { tk(n); tl(n); }
            if (n >= 5 && n % 2 == 1) tls(n);
        }
        return true;
    });
}

void verify_census(long long n_max, const Config& cfg, Checker& ck) {
    for (long long n = 2; n <= n_max; ++n) {
        CountTable t = tally_by_deficiency(n, cfg.shards);
        std::string tag = "census.n" + std::to_string(n);
        ck.check(tag + ".lambda_total", t.lambda_total == lambda_count(n),
                 "census " + t.lambda_total.str() + " formula " + lambda_count(n).str());
        bool cells_ok = true, eq7_ok = true, sym_ok = true;
        std::string cell_detail;
        for (size_t d = 0; d < t.rows.size(); ++d) {
            const DeficiencyCell& c = t.rows[d];
            long long dd = static_cast<long long>(d);
            if (c.r1 != r1_count(n, dd) || c.r3 != r3_count(n, dd) ||
                c.rs3 != rs3_count(n, dd) || c.lambda != lambda_nd(n, dd)) {
                cells_ok = false;
                if (cell_detail.empty()) cell_detail = "first mismatch at d=" + std::to_string(dd);
            }
            if (c.lambda != c.r1 + c.r3 + c.rs3) eq7_ok = false;
            if (c.r1 != c.r2 || c.r3 != c.r4 || c.rs3 != c.rs4 || c.rs1 != 0 || c.rs2 != 0)
                sym_ok = false;
        }
        ck.check(tag + ".cells_match_formulas", cells_ok, cell_detail);
        ck.check(tag + ".lambda_is_r1_r3_rs3", eq7_ok);
        ck.check(tag + ".type_symmetries", sym_ok);
        ck.check(tag + ".omega_identity",
                 2 * t.lambda_total == t.omega + t.omega_symmetric);
        if (n >= 3)
            ck.check(tag + ".unoriented_count", t.unoriented == u_count(n),
                     "census " + t.unoriented.str() + " formula " + u_count(n).str());
        if (n >= 4) {
            ck.check(tag + ".component_split", t.knots == tk(n) && t.two_component ==
                     2 * tl(n) - (n % 2 == 1 ? tls(n) : BigInt(0)));
            ck.check(tag + ".unoriented_component_split",
                     t.unoriented_two_component == tl(n) &&
                     t.unoriented - t.unoriented_two_component == tk(n));
        }
        BigInt si_expect = 0;
        if (n % 2 == 1 && n >= 5) si_expect = tls(n);
        ck.check(tag + ".strongly_invertible", t.strongly_invertible == si_expect,
                 "census " + t.strongly_invertible.str() + " formula " + si_expect.str());
    }
}

void verify_reference_counts(long long n_max, Checker& ck) {
    ck.run("reference_counts.closed_forms", [&](std::string& detail) {
        for (const FrozenCell& c : kFrozenTable) {
            if (c.n > n_max) continue;
            if (r1_count(c.n, c.d) != c.r1 || r3_count(c.n, c.d) != c.r3 ||
                rs3_count(c.n, c.d) != c.rs3) {
                detail = "n=" + std::to_string(c.n) + " d=" + std::to_string(c.d);
                return false;
            }
        }
        for (long long n = 2; n <= std::min<long long>(13, n_max); ++n)
            if (lambda_count(n) != kFrozenLambda[n]) {
                detail = "lambda n=" + std::to_string(n);
                return false;
            }
        return true;
    });
}

} // namespace

int cmd_classify(const std::string& pq, const std::string& orient, bool emit_diagram,
                 const Config& cfg, std::ostream& out, std::ostream& err) {
    std::optional<Fraction> parsed;
    try {
        parsed = parse_fraction(pq);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    const Fraction& f = *parsed;
    Orient o;
    if (f.two_components()) {
        if (orient == "+") o = Orient::Plus;
        else if (orient == "-") o = Orient::Minus;
        else {
            err << "error: " << pq << " has two components; specify an orientation (+ or -)\n";
            return kOrientationError;
        }
    } else {
        if (!orient.empty()) {
            err << "error: " << pq << " is a knot; its orientation is already determined\n";
            return kOrientationError;
        }
        o = Orient::Forced;
    }
    InvariantRecord rec = invariants(f, o);
    std::string diagram_json;
    if (emit_diagram) diagram_json = diagram_to_json(build_ps_diagram(to_odd_cf(f), o));
    if (cfg.format == "json") {
        if (emit_diagram) {
            nlohmann::ordered_json j;
            j["record"] = nlohmann::ordered_json::parse(record_to_json(rec));
            j["diagram"] = nlohmann::ordered_json::parse(diagram_json);
            out << j.dump(2) << "\n";
        } else {
            out << record_to_json(rec) << "\n";
        }
    } else if (cfg.format == "csv") {
        out << "pq,vector,signed_vector,n,mu,s,genus,braid,deficiency,type,strongly_invertible\n"
            << record_to_csv_row(rec) << "\n";
        if (emit_diagram) out << diagram_json << "\n";
    } else {
        out << record_to_text(rec);
        if (emit_diagram) out << diagram_json << "\n";
    }
    return kOk;
}

int cmd_table(long long n_max, bool with_census, const Config& cfg, std::ostream& out,
              std::ostream& err) {
    if (n_max < 2 || n_max > cfg.max_n) {
        err << "error: table requires 2 <= n_max <= " << cfg.max_n
            << " (adjust --max-n to raise the cap)\n";
        return kParseError;
    }
    std::vector<TableRow> rows = formula_rows(2, n_max);
    if (with_census) {
        std::vector<TableRow> census_rows;
        for (long long n = 2; n <= n_max; ++n) {
            auto t = table_rows(tally_by_deficiency(n, cfg.shards));
            census_rows.insert(census_rows.end(), t.begin(), t.end());
        }
        if (census_rows.size() != rows.size()) {
            err << "error: census table shape differs from the closed forms\n";
            return kTableMismatch;
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            const TableRow &a = rows[i], &b = census_rows[i];
            if (a.r1 != b.r1 || a.r3 != b.r3 || a.rs3 != b.rs3 || a.lambda_nd != b.lambda_nd) {
                err << "error: census disagrees with the closed forms at n=" << a.n
                    << " d=" << a.d << "\n";
                return kTableMismatch;
            }
        }
    }
    out << render_rows(rows, cfg);
    return kOk;
}

int cmd_verify(const std::string& suite, long long n_max, const Config& cfg, std::ostream& out,
               std::ostream& err) {
    if (suite != "identities" && suite != "census" && suite != "all") {
        err << "error: unknown suite \"" << suite << "\" (expected identities, census or all)\n";
        return kParseError;
    }
    if (n_max < 2) {
        err << "error: verify requires n_max >= 2\n";
        return kParseError;
    }
    if (suite != "identities" && n_max > cfg.max_n) {
        err << "error: the census suites enumerate 2^(n-2) diagrams; n_max is capped at "
            << cfg.max_n << " (adjust --max-n to raise it)\n";
        return kParseError;
    }
    Checker ck;
    if (suite == "identities" || suite == "all") verify_identities(n_max, ck);
    if (suite == "census" || suite == "all") verify_census(n_max, cfg, ck);
    if (suite == "all") verify_reference_counts(n_max, ck);
    ck.render(cfg, out);
    if (const auto* fail = ck.first_failure()) {
        err << "verify failed: " << fail->name
            << (fail->detail.empty() ? "" : " (" + fail->detail + ")") << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_oeis(const std::string& id, long long n_max, const Config& cfg, std::ostream& out,
             std::ostream& err) {
    if (!oeis_id_known(id)) {
        err << "error: unsupported sequence id \"" << id << "\"\n";
        return kParseError;
    }
    OeisReport report;
    try {
        report = oeis_check(id, n_max, cfg.oeis_cache_dir, cfg.offline);
    } catch (const oeis_network_error& e) {
        err << "error: " << e.what() << " (re-run with --offline to use the bundled snapshot)\n";
        return kNetworkError;
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["id"] = report.id;
        j["source"] = report.source;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : report.checks) {
            nlohmann::ordered_json e;
            e["n"] = c.n;
            e["lambda"] = c.expected.str();
            e["term"] = c.term.str();
            e["pass"] = c.ok;
            j["checks"].push_back(e);
        }
        j["ok"] = report.ok;
        out << j.dump(2) << "\n";
    } else {
        out << report.id << " (" << report.source << ")\n";
        for (const auto& c : report.checks)
            out << (c.ok ? "PASS " : "FAIL ") << "n=" << c.n << " lambda=" << c.expected.str()
                << " term=" << c.term.str() << "\n";
        out << (report.ok ? "ok" : "FAILED") << "\n";
    }
    if (!report.ok) {
        err << "error: " << id << " disagrees with the computed counts\n";
        return kTermMismatch;
    }
    return kOk;
}

} // namespace ratlink
