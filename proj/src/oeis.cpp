#include "ratlink/oeis.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef RATLINK_WITH_TLS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "ratlink/formulas.hpp"

namespace ratlink {

std::vector<BFileEntry> parse_b_file(std::istream& in) {
    std::vector<BFileEntry> out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string idx, val, extra;
        if (!(ls >> idx)) continue;  // blank or comment-only line
        if (!(ls >> val) || (ls >> extra))
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": expected \"index value\"");
        try {
            out.push_back(BFileEntry{std::stoll(idx), BigInt(val)});
        } catch (const std::exception&) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": bad number");
        }
    }
    return out;
}

namespace {

// Bundled prefixes. A007581's leading term (index 0) precedes the first
// crossing-number count; A192466 starts at index 1 with the n = 3 count.
const char* const kSnapshotA007581[] = {
    "0 1", "1 2", "2 5", "3 15", "4 51", "5 187", "6 715", "7 2795", "8 11051",
    "9 43947", "10 175275", "11 700075", "12 2798251", "13 11188907", "14 44747435",
    "15 178973355", "16 715860651", "17 2863377067", "18 11453377195",
    "19 45813246635", "20 183252462251", "21 733008800427", "22 2932033104555",
    "23 11728128223915", "24 46912504507051", "25 187650001250987",
    "26 750599971449515", "27 3002399818689195", "28 12009599140539051",
    "29 48038396293720747", "30 192153584638012075"};

const char* const kSnapshotA192466[] = {
    "1 2", "2 6", "3 24", "4 90", "5 352", "6 1386", "7 5504", "8 21930", "9 87552",
    "10 349866", "11 1398784", "12 5593770", "13 22372352", "14 89483946",
    "15 357924864", "16 1431677610", "17 5726666752", "18 22906579626",
    "19 91626143744", "20 366504225450", "21 1466016202752", "22 5864063412906",
    "23 23456250855424", "24 93824997829290", "25 375299980132352",
    "26 1501199898159786", "27 6004799547899904", "28 24019198102121130",
    "29 96076792229527552", "30 384307168560196266"};

std::vector<BFileEntry> parse_lines(const char* const* lines, size_t count) {
    std::ostringstream os;
    for (size_t i = 0; i < count; ++i) os << lines[i] << '\n';
    std::istringstream is(os.str());
    return parse_b_file(is);
}

} // namespace

bool oeis_id_known(const std::string& id) { return id == "A007581" || id == "A192466"; }

const std::vector<BFileEntry>& oeis_snapshot(const std::string& id) {
    static const std::vector<BFileEntry> even =
        parse_lines(kSnapshotA007581, std::size(kSnapshotA007581));
    static const std::vector<BFileEntry> odd =
        parse_lines(kSnapshotA192466, std::size(kSnapshotA192466));
    if (id == "A007581") return even;
    if (id == "A192466") return odd;
    throw std::invalid_argument("unsupported OEIS id: " + id);
}

long long oeis_index_for(const std::string& id, long long n) {
    if (id == "A007581") return n / 2;
    if (id == "A192466") return (n - 1) / 2;
    throw std::invalid_argument("unsupported OEIS id: " + id);
}

bool oeis_covers(const std::string& id, long long n) {
    if (id == "A007581") return n >= 2 && n % 2 == 0;
    if (id == "A192466") return n >= 3 && n % 2 == 1;
    throw std::invalid_argument("unsupported OEIS id: " + id);
}

namespace {

std::string b_file_name(const std::string& id) {
    return "b" + id.substr(1) + ".txt";  // A007581 -> b007581.txt
}

std::optional<std::string> http_get_b_file(const std::string& id, std::string& err) {
#ifdef RATLINK_WITH_TLS
    httplib::SSLClient cli("oeis.org");
#else
    httplib::Client cli("oeis.org");
#endif
    cli.set_connection_timeout(10);
    cli.set_read_timeout(10);
    auto res = cli.Get(("/" + id + "/" + b_file_name(id)).c_str());
    if (!res) {
        err = "connection to oeis.org failed";
        return std::nullopt;
    }
    if (res->status != 200) {
        err = "oeis.org returned status " + std::to_string(res->status);
        return std::nullopt;
    }
    return res->body;
}

} // namespace

OeisTerms oeis_terms(const std::string& id, const std::string& cache_dir, bool offline) {
    if (!oeis_id_known(id)) throw std::invalid_argument("unsupported OEIS id: " + id);
    if (offline) return OeisTerms{oeis_snapshot(id), "snapshot"};

    namespace fs = std::filesystem;
    fs::path cache_file = fs::path(cache_dir) / b_file_name(id);
    if (!cache_dir.empty() && fs::exists(cache_file)) {
        std::ifstream in(cache_file);
        return OeisTerms{parse_b_file(in), "cache"};
    }
    std::string err;
    auto body = http_get_b_file(id, err);
    if (!body) throw oeis_network_error(err);
    std::istringstream is(*body);
    OeisTerms terms{parse_b_file(is), "network"};
    // Fetched data must agree with the bundled snapshot where they overlap.
    for (const BFileEntry& snap : oeis_snapshot(id))
        for (const BFileEntry& got : terms.entries)
            if (snap.index == got.index && snap.value != got.value)
                throw std::runtime_error(id + ": fetched term at index " +
                                         std::to_string(snap.index) +
                                         " disagrees with the bundled snapshot");
    if (!cache_dir.empty()) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        std::ofstream out(cache_file);
        out << *body;
    }
    return terms;
}

OeisReport oeis_check(const std::string& id, long long n_max,
                      const std::string& cache_dir, bool offline) {
    OeisTerms terms = oeis_terms(id, cache_dir, offline);
    OeisReport report;
    report.id = id;
    report.source = terms.source;
    for (long long n = 2; n <= n_max; ++n) {
        if (!oeis_covers(id, n)) continue;
        long long idx = oeis_index_for(id, n);
        const BFileEntry* found = nullptr;
        for (const BFileEntry& e : terms.entries)
            if (e.index == idx) { found = &e; break; }
        if (!found)
            throw std::out_of_range(id + " has no term at index " + std::to_string(idx));
        BigInt expected = lambda_count(n);
        report.checks.push_back(OeisCheck{n, expected, found->value, expected == found->value});
        report.ok = report.ok && report.checks.back().ok;
    }
    return report;
}

} // namespace ratlink
