#include "ratlink/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ratlink {

namespace {

void compositions_rec(long long remaining, std::vector<long long>& parts,
                      const std::function<void(const std::vector<long long>&)>& fn) {
    if (remaining == 0) {
        if (parts.size() % 2 == 1) fn(parts);
        return;
    }
    for (long long a = 1; a <= remaining; ++a) {
        parts.push_back(a);
        compositions_rec(remaining - a, parts, fn);
        parts.pop_back();
    }
}

} // namespace

void for_each_odd_composition(long long n,
                              const std::function<void(const std::vector<long long>&)>& fn) {
    if (n < 2) throw std::invalid_argument("compositions: need n >= 2");
    std::vector<long long> parts;
    parts.reserve(static_cast<size_t>(n));
    compositions_rec(n, parts, fn);
}

std::vector<std::vector<long long>> enumerate_vectors(long long n) {
    std::vector<std::vector<long long>> out;
    for_each_odd_composition(n, [&](const std::vector<long long>& v) { out.push_back(v); });
    return out;
}

namespace {

// Everything one sweep over the (vector, orientation) pairs can tally.
// Full invariant records are kept only when asked for; large tally runs
// retain just the canonical keys and the counts.
struct Sweep {
    long long n = 0;
    long long max_d = 0;
    bool keep_records = true;
    std::vector<CensusEntry> entries;          // canonical == signed vector only
    std::vector<SignedVector> keys;            // canonical vectors, always kept
    std::vector<DeficiencyCell> cells;         // raw tallies + lambda per d
    BigInt omega = 0, omega_symmetric = 0;
    BigInt knots = 0, two_component = 0;       // deduplicated counts

    Sweep(long long nn, bool keep)
        : n(nn), max_d((nn - 2) / 2), keep_records(keep), cells(max_d + 1) {}

    void absorb(const std::vector<long long>& parts) {
        OddCF v(parts.begin(), parts.end());
        Fraction f = from_odd_cf(v);
        bool two = f.two_components();
        const Orient orients[2] = {two ? Orient::Plus : Orient::Forced, Orient::Minus};
        int norients = two ? 2 : 1;
        for (int k = 0; k < norients; ++k) {
            InvariantRecord rec = invariants(f, orients[k]);
            const SignedVector& sv = rec.signed_vec;
            SignedVector rev = reversal(sv);
            long long d = rec.deficiency;
            if (d < 0 || d > max_d) throw std::logic_error("census: deficiency out of range");
            DeficiencyCell& cell = cells[static_cast<size_t>(d)];
            omega += 1;
            bool symmetric = (sv == rev);
            if (symmetric) omega_symmetric += 1;
            switch (rec.rtype) {
                case RType::I:
                    cell.r1 += 1;
                    if (symmetric) cell.rs1 += 1;
                    break;
                case RType::II:
                    cell.r2 += 1;
                    if (symmetric) cell.rs2 += 1;
                    break;
                case RType::III:
                    cell.r3 += 1;
                    if (symmetric) cell.rs3 += 1;
                    break;
                case RType::IV:
                    cell.r4 += 1;
                    if (symmetric) cell.rs4 += 1;
                    break;
            }
            // Reversal pairs are counted once: the reversed vector shows up in
            // its own right as the PS form of the Schubert partner fraction.
            if (!(rev < sv)) {
                cell.lambda += 1;
                if (rec.mu == 1) knots += 1; else two_component += 1;
                keys.push_back(sv);
                if (keep_records) entries.push_back(CensusEntry{sv, f, std::move(rec)});
            }
        }
    }

    void merge(Sweep&& o) {
        omega += o.omega;
        omega_symmetric += o.omega_symmetric;
        knots += o.knots;
        two_component += o.two_component;
        for (size_t i = 0; i < cells.size(); ++i) {
            cells[i].r1 += o.cells[i].r1;
            cells[i].r2 += o.cells[i].r2;
            cells[i].r3 += o.cells[i].r3;
            cells[i].r4 += o.cells[i].r4;
            cells[i].rs1 += o.cells[i].rs1;
            cells[i].rs2 += o.cells[i].rs2;
            cells[i].rs3 += o.cells[i].rs3;
            cells[i].rs4 += o.cells[i].rs4;
            cells[i].lambda += o.cells[i].lambda;
        }
        entries.insert(entries.end(), std::make_move_iterator(o.entries.begin()),
                       std::make_move_iterator(o.entries.end()));
        keys.insert(keys.end(), std::make_move_iterator(o.keys.begin()),
                    std::make_move_iterator(o.keys.end()));
    }
};

Sweep run_sweep(long long n, int shards, bool keep_records) {
    if (shards < 1) throw std::invalid_argument("census: shard count must be >= 1");
    Sweep total(n, keep_records);
    if (shards == 1) {
        for_each_odd_composition(n, [&](const std::vector<long long>& v) { total.absorb(v); });
    } else {
        std::vector<Sweep> parts(static_cast<size_t>(shards), Sweep(n, keep_records));
        std::vector<std::thread> workers;
        for (int w = 0; w < shards; ++w) {
            workers.emplace_back([&, w] {
                long long idx = 0;
                for_each_odd_composition(n, [&](const std::vector<long long>& v) {
                    if (idx++ % shards == w) parts[static_cast<size_t>(w)].absorb(v);
                });
            });
        }
        for (auto& t : workers) t.join();
        for (auto& p : parts) total.merge(std::move(p));
    }
    std::sort(total.keys.begin(), total.keys.end());
    for (size_t i = 1; i < total.keys.size(); ++i)
        if (total.keys[i] == total.keys[i - 1])
            throw std::logic_error("census: duplicate canonical vector");
    std::sort(total.entries.begin(), total.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.canonical < b.canonical; });
    // Counting up to reversal halves the non-symmetric decompositions and
    // keeps the symmetric ones.
    BigInt lambda = 0;
    for (const auto& c : total.cells) lambda += c.lambda;
    if (lambda != static_cast<long long>(total.keys.size()) ||
        2 * lambda != total.omega + total.omega_symmetric)
        throw std::logic_error("census: |Lambda_n| != (|Omega_n| + |Omega'_n|)/2");
    return total;
}

} // namespace

OrientedCensus census_oriented(long long n, int shards) {
    Sweep s = run_sweep(n, shards, /*keep_records=*/true);
    OrientedCensus out;
    out.n = n;
    out.count = static_cast<long long>(s.entries.size());
    out.omega = s.omega;
    out.omega_symmetric = s.omega_symmetric;
    out.entries = std::move(s.entries);
    return out;
}

namespace {

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended Euclid; a and m coprime
    BigInt old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
    BigInt inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

} // namespace

UnorientedCensus census_unoriented(long long n) {
    if (n < 2) throw std::invalid_argument("census: need n >= 2");
    std::map<std::pair<BigInt, BigInt>, Fraction> classes;  // (q, min(p, p^{-1} mod q))
    for_each_odd_composition(n, [&](const std::vector<long long>& parts) {
        OddCF v(parts.begin(), parts.end());
        Fraction f = from_odd_cf(v);
        BigInt inv = mod_inverse(f.p, f.q);
        BigInt key_p = std::min(f.p, inv);
        classes.emplace(std::make_pair(f.q, key_p), Fraction(key_p, f.q));
    });
    UnorientedCensus out;
    out.n = n;
    out.count = static_cast<long long>(classes.size());
    for (auto& [key, f] : classes) out.representatives.push_back(f);
    return out;
}

BigInt census_strongly_invertible(long long n) {
    BigInt count = 0;
    for (const Fraction& f : census_unoriented(n).representatives)
        if (f.two_components() && is_strongly_invertible(f)) count += 1;
    return count;
}

CountTable tally_by_deficiency(long long n, int shards) {
    Sweep s = run_sweep(n, shards, /*keep_records=*/false);
    CountTable t;
    t.n = n;
    t.rows = std::move(s.cells);
    t.lambda_total = static_cast<long long>(s.keys.size());
    t.omega = s.omega;
    t.omega_symmetric = s.omega_symmetric;
    t.knots = s.knots;
    t.two_component = s.two_component;
    UnorientedCensus u = census_unoriented(n);
    t.unoriented = u.count;
    BigInt si = 0, two = 0;
    for (const Fraction& f : u.representatives) {
        if (!f.two_components()) continue;
        two += 1;
        if (is_strongly_invertible(f)) si += 1;
    }
    t.unoriented_two_component = two;
    t.strongly_invertible = si;
    // partition check: the per-d lambdas must add up to the total
    BigInt sum = 0;
    for (const auto& c : t.rows) sum += c.lambda;
    if (sum != t.lambda_total)
        throw std::logic_error("census: deficiency cells do not partition |Lambda_n|");
    return t;
}

std::vector<TableRow> table_rows(const CountTable& t) {
    std::vector<TableRow> rows;
    for (size_t d = 0; d < t.rows.size(); ++d)
        rows.push_back(TableRow{t.n, static_cast<long long>(d), t.rows[d].r1, t.rows[d].r3,
                                t.rows[d].rs3, t.rows[d].lambda});
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,d,r1,r3,rs3,lambda_nd\n";
    for (const TableRow& r : rows)
        os << r.n << ',' << r.d << ',' << r.r1.str() << ',' << r.r3.str() << ','
           << r.rs3.str() << ',' << r.lambda_nd.str() << '\n';
    return os.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
    using json = nlohmann::ordered_json;
    json arr = json::array();
    for (const TableRow& r : rows) {
        json j;
        j["n"] = r.n;
        j["d"] = r.d;
        j["r1"] = r.r1.str();
        j["r3"] = r.r3.str();
        j["rs3"] = r.rs3.str();
        j["lambda_nd"] = r.lambda_nd.str();
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string table_text(const std::vector<TableRow>& rows) {
    // One line per n: the (r1, r3, rs3) triple for each d, then |Lambda_n|.
    std::ostringstream os;
    for (size_t i = 0; i < rows.size();) {
        long long n = rows[i].n;
        BigInt total = 0;
        os << "n=" << n << ": ";
        bool first = true;
        for (; i < rows.size() && rows[i].n == n; ++i) {
            if (!first) os << "  ";
            first = false;
            os << "d" << rows[i].d << ": " << rows[i].r1.str() << ',' << rows[i].r3.str() << ','
               << rows[i].rs3.str();
            total += rows[i].lambda_nd;
        }
        os << "  |L|=" << total.str() << '\n';
    }
    return os.str();
}

} // namespace ratlink
