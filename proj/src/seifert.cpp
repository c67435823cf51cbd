#include "ratlink/seifert.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace ratlink {

std::vector<Block> blocks(const SignedVector& sv) {
    check_signed_vector(sv);
    std::vector<Block> out;
    for (size_t i = 0; i < sv.size(); ++i) {
        int s = sv[i] > 0 ? 1 : -1;
        if (out.empty() || out.back().sign != s)
            out.push_back(Block{{}, s, i});
        out.back().entries.push_back(sv[i]);
    }
    return out;
}

RType classify_type(const SignedVector& sv) {
    check_signed_vector(sv);
    bool first = sv.front() > 0, last = sv.back() > 0;
    if (first && !last) return RType::I;
    if (!first && last) return RType::II;
    if (first && last) return RType::III;
    return RType::IV;
}

std::string rtype_name(RType t) {
    switch (t) {
        case RType::I: return "I";
        case RType::II: return "II";
        case RType::III: return "III";
        case RType::IV: return "IV";
    }
    return "?";
}

int CircleChain::count(CircleTag t) const {
    int k = 0;
    for (const Circle& c : circles) k += (c.tag == t) ? 1 : 0;
    return k;
}

long long CircleChain::crossing_count() const {
    long long k = 0;
    for (const auto& [pair, cnt] : shared) k += cnt;
    return k;
}

int CircleChain::shared_between(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = shared.find({i, j});
    return it == shared.end() ? 0 : it->second;
}

std::vector<std::pair<int, int>> CircleChain::neighbors(int i) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [pair, cnt] : shared) {
        if (pair.first == i) out.push_back({pair.second, cnt});
        else if (pair.second == i) out.push_back({pair.first, cnt});
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);  // keep the older id
    }
};

} // namespace

// The chain is produced by a single left-to-right sweep over the twist
// regions, tracking which arc piece currently runs along each of rails 1-3.
// A region whose two strands are parallel contributes its crossings between
// the two rail pieces and leaves them intact; an antiparallel region joins
// the two pieces on its left, spawns |b|-1 chain circles, and starts a fresh
// piece for both rails on its right. Odd regions (rails 2-3) are parallel
// exactly when positive; even regions (rails 1-2) when negative.
CircleChain circle_chain(const SignedVector& sv) {
    check_signed_vector(sv);
    if (!realizable(sv))
        throw not_r_decomposition("signed vector violates the PS-form parity rules");

    UnionFind uf;
    int large = uf.make();    // rail 3 feed joined to the long arc by the left cap
    int top = uf.make();      // rails 1-2 joined by the left cap
    int p1 = top, p2 = top, p3 = large;

    struct Rec { int a, b; int sign; };
    std::vector<Rec> recs;                 // one per crossing
    std::vector<int> small_pieces;         // piece ids that are chain circles

    for (size_t i = 0; i < sv.size(); ++i) {
        long long c = std::llabs(sv[i]);
        int sign = sv[i] > 0 ? 1 : -1;
        bool sigma2 = (i % 2 == 0);
        int& upper = sigma2 ? p2 : p1;
        int& lower = sigma2 ? p3 : p2;
        bool parallel = sigma2 ? (sign > 0) : (sign < 0);
        if (parallel) {
            for (long long j = 0; j < c; ++j) recs.push_back({upper, lower, sign});
        } else {
            uf.unite(upper, lower);
            int cur = upper;
            for (long long j = 0; j + 1 < c; ++j) {
                int s = uf.make();
                small_pieces.push_back(s);
                recs.push_back({cur, s, sign});
                cur = s;
            }
            int right = uf.make();
            recs.push_back({cur, right, sign});
            upper = lower = right;
        }
    }
    uf.unite(p1, p2);       // right cap, rails 1-2
    uf.unite(p3, large);    // right cap, rails 3-4

    // Resolve pieces into circles. Circle 0 is the large one; the rest are
    // ordered by their oldest constituent piece, which is left-to-right order.
    int large_root = uf.find(large);
    std::vector<int> root_to_circle(uf.parent.size(), -1);
    CircleChain chain;
    chain.circles.push_back({CircleTag::Large, 0});
    root_to_circle[large_root] = 0;
    std::vector<bool> is_small_root(uf.parent.size(), false);
    for (int s : small_pieces) is_small_root[uf.find(s)] = true;
    for (size_t id = 0; id < uf.parent.size(); ++id) {
        int r = uf.find(static_cast<int>(id));
        if (root_to_circle[r] >= 0) continue;
        root_to_circle[r] = chain.total();
        chain.circles.push_back({is_small_root[r] ? CircleTag::Small : CircleTag::Medium, 0});
    }
    if (chain.count(CircleTag::Large) != 1)
        throw std::logic_error("circle_chain: expected exactly one large circle");

    for (const Rec& rec : recs) {
        int a = root_to_circle[uf.find(rec.a)];
        int b = root_to_circle[uf.find(rec.b)];
        if (a == b)
            throw std::logic_error("circle_chain: crossing joins a circle to itself");
        for (int c : {a, b}) {
            if (c == 0) continue;  // the large circle touches both signs
            int& side = chain.circles[c].side;
            if (side == 0) side = rec.sign;
            else if (side != rec.sign)
                throw std::logic_error("circle_chain: circle touches crossings of both signs");
        }
        auto key = std::minmax(a, b);
        chain.shared[{key.first, key.second}]++;
    }
    if (chain.crossing_count() != std::accumulate(sv.begin(), sv.end(), 0LL,
            [](long long acc, long long b) { return acc + std::llabs(b); }))
        throw std::logic_error("circle_chain: crossing count mismatch");
    for (int i = 1; i < chain.total(); ++i) {
        if (chain.circles[i].tag == CircleTag::Small) {
            long long deg = 0;
            for (auto [o, cnt] : chain.neighbors(i)) deg += cnt;
            if (deg != 2)
                throw std::logic_error("circle_chain: small circle with degree != 2");
        }
    }
    return chain;
}

std::pair<CircleChain, int> reduce_to_fixpoint(CircleChain chain) {
    int removed = 0;
    auto live = std::vector<bool>(chain.circles.size(), true);

    auto find_removable = [&]() -> int {
        for (int i = 1; i < chain.total(); ++i) {
            if (!live[i] || chain.circles[i].tag != CircleTag::Small) continue;
            auto nb = chain.neighbors(i);
            if (nb.size() == 2 && nb[0].second == 1 && nb[1].second == 1) return i;
        }
        return -1;
    };

    for (int i; (i = find_removable()) >= 0;) {
        auto nb = chain.neighbors(i);
        int a = std::min(nb[0].first, nb[1].first);
        int b = std::max(nb[0].first, nb[1].first);
        // Drop the two crossings of the removed circle, merge b into a.
        chain.shared.erase({std::min(a, i), std::max(a, i)});
        chain.shared.erase({std::min(b, i), std::max(b, i)});
        live[i] = false;
        if (chain.shared_between(a, b) != 0)
            throw std::logic_error("reduce: merging circles that already share a crossing");
        std::map<std::pair<int, int>, int> moved;
        for (auto it = chain.shared.begin(); it != chain.shared.end();) {
            auto [x, y] = it->first;
            if (x == b || y == b) {
                int other = (x == b) ? y : x;
                auto key = std::minmax(a, other);
                moved[{key.first, key.second}] += it->second;
                it = chain.shared.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto& [k, v] : moved) chain.shared[k] += v;
        // The merged circle keeps a's position (a < b, and the large circle is
        // always index 0 so it can only play the role of a).
        auto& ca = chain.circles[a];
        const auto& cb = chain.circles[b];
        if (ca.tag != CircleTag::Large && cb.tag == CircleTag::Medium) ca.tag = CircleTag::Medium;
        if (ca.side == 0) {
            if (ca.tag != CircleTag::Large && cb.side != 0) ca.side = cb.side;
        } else if (cb.side != 0 && ca.side != cb.side) {
            throw std::logic_error("reduce: merging circles on opposite sides");
        }
        live[b] = false;
        ++removed;
        // compact the two dead circles out of the chain
        CircleChain next;
        std::vector<int> remap(chain.circles.size(), -1);
        for (size_t k = 0; k < chain.circles.size(); ++k) {
            if (!live[k]) continue;
            remap[k] = next.total();
            next.circles.push_back(chain.circles[k]);
        }
        for (const auto& [key, cnt] : chain.shared) {
            auto nk = std::minmax(remap[key.first], remap[key.second]);
            next.shared[{nk.first, nk.second}] += cnt;
        }
        chain = std::move(next);
        live.assign(chain.circles.size(), true);
    }

    // A small circle both of whose crossings lead to the large circle is not
    // removable; at the fixpoint it shares two crossings with the large
    // circle, so it is a medium circle of the deficiency-zero form.
    for (int i = 1; i < chain.total(); ++i) {
        if (chain.circles[i].tag != CircleTag::Small) continue;
        if (chain.shared_between(0, i) != 2)
            throw std::logic_error("reduce: stuck small circle not anchored to the large circle");
        chain.circles[i].tag = CircleTag::Medium;
    }
    for (int i = 1; i < chain.total(); ++i)
        if (chain.shared_between(0, i) < 2)
            throw std::logic_error("reduce: medium circle with fewer than two large-circle crossings");
    return {std::move(chain), removed};
}

InvariantRecord invariants(const Fraction& f, Orient o) {
    OddCF v = to_odd_cf(f);
    PlatDiagram diagram = build_ps_diagram(v, o);
    SignedVector sv = signed_vector(diagram);
    CircleChain chain = circle_chain(sv);

    InvariantRecord r{f, {}, sv, 0, diagram.components, chain.total(), 0, 0, 0,
                      classify_type(sv), std::nullopt};
    r.vector = diagram.region_size;
    r.n = diagram.crossing_count();
    auto [fixpoint, d] = reduce_to_fixpoint(chain);
    (void)fixpoint;
    r.deficiency = d;
    r.braid = r.s - d;
    long long twice_genus = r.n - r.s - r.mu + 2;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw std::logic_error("invariants: n - s - mu + 2 is not a nonnegative even number");
    r.genus = twice_genus / 2;
    if (d > (r.n - 2) / 2)
        throw std::logic_error("invariants: deficiency exceeds (n-2)/2");
    if (r.mu == 2) r.strongly_invertible = is_strongly_invertible(f);
    return r;
}

std::string record_to_json(const InvariantRecord& r) {
    using json = nlohmann::ordered_json;
    json j;
    j["pq"] = r.fraction.str();
    j["vector"] = r.vector;
    j["signed_vector"] = r.signed_vec;
    j["n"] = r.n;
    j["mu"] = r.mu;
    j["s"] = r.s;
    j["genus"] = r.genus;
    j["braid"] = r.braid;
    j["deficiency"] = r.deficiency;
    j["type"] = rtype_name(r.rtype);
    if (r.strongly_invertible)
        j["strongly_invertible"] = *r.strongly_invertible;
    else
        j["strongly_invertible"] = nullptr;
    return j.dump();
}

namespace {
std::string join_ll(const std::vector<long long>& v, const char* sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}
} // namespace

std::string record_to_csv_row(const InvariantRecord& r) {
    std::ostringstream os;
    os << r.fraction.str() << ",\"[" << join_ll(r.vector, " ") << "]\",\"["
       << join_ll(r.signed_vec, " ") << "]\"," << r.n << ',' << r.mu << ',' << r.s << ','
       << r.genus << ',' << r.braid << ',' << r.deficiency << ',' << rtype_name(r.rtype) << ',';
    os << (r.strongly_invertible ? (*r.strongly_invertible ? "true" : "false") : "n/a");
    return os.str();
}

std::string record_to_text(const InvariantRecord& r) {
    std::ostringstream os;
    os << "link " << r.fraction.str() << "\n"
       << "  vector        [" << join_ll(r.vector, ",") << "]\n"
       << "  signed vector [" << join_ll(r.signed_vec, ",") << "]\n"
       << "  crossings     " << r.n << "\n"
       << "  components    " << r.mu << "\n"
       << "  seifert       " << r.s << "\n"
       << "  genus         " << r.genus << "\n"
       << "  braid index   " << r.braid << "\n"
       << "  deficiency    " << r.deficiency << "\n"
       << "  type          " << rtype_name(r.rtype) << "\n"
       << "  strongly inv. "
       << (r.strongly_invertible ? (*r.strongly_invertible ? "yes" : "no") : "n/a") << "\n";
    return os.str();
}

} // namespace ratlink
