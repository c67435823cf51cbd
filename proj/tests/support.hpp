// Test-side oracles, kept independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "ratlink/plat.hpp"
#include "ratlink/seifert.hpp"

namespace testsupport {

// Seifert circles computed geometrically from the diagram by oriented
// smoothing, with no reference to the block rules: strands moving the same
// screen direction smooth into two horizontal arcs, opposite directions into
// two side caps.
struct Smoothed {
    int total = 0;
    std::vector<int> with_large;                 // crossings shared with the large circle, per circle
    std::map<std::pair<int, int>, int> shared;   // circle pair -> crossings
};

inline Smoothed smooth_diagram(const ratlink::PlatDiagram& d) {
    std::vector<int> parent(d.segment_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    unite(d.rail_left_seg[1], d.rail_left_seg[2]);
    unite(d.rail_left_seg[3], d.rail_left_seg[4]);
    unite(d.rail_right_seg[1], d.rail_right_seg[2]);
    unite(d.rail_right_seg[3], d.rail_right_seg[4]);

    std::vector<std::pair<int, int>> pairs;
    for (const ratlink::Crossing& x : d.crossings) {
        if (x.down_rightward == x.up_rightward) {
            unite(x.seg_ul, x.seg_ur);
            unite(x.seg_ll, x.seg_lr);
            pairs.push_back({x.seg_ul, x.seg_ll});
        } else {
            unite(x.seg_ul, x.seg_ll);
            unite(x.seg_ur, x.seg_lr);
            pairs.push_back({x.seg_ul, x.seg_ur});
        }
    }

    std::map<int, int> circle_of_root;
    int large_root = find(d.long_arc_segment);
    circle_of_root[large_root] = 0;
    for (int s = 0; s < d.segment_count; ++s) {
        int r = find(s);
        if (!circle_of_root.count(r)) {
            int id = static_cast<int>(circle_of_root.size());
            circle_of_root[r] = id;
        }
    }
    Smoothed out;
    out.total = static_cast<int>(circle_of_root.size());
    out.with_large.assign(out.total, 0);
    for (auto [a, b] : pairs) {
        int ca = circle_of_root[find(a)], cb = circle_of_root[find(b)];
        if (ca == cb) throw std::logic_error("smoothing oracle: self-adjacent circle");
        if (ca == 0) out.with_large[cb]++;
        if (cb == 0) out.with_large[ca]++;
        auto key = std::minmax(ca, cb);
        out.shared[{key.first, key.second}]++;
    }
    return out;
}

// Independent crossing-sign rule: positive iff rotating the under direction a
// quarter turn clockwise gives the over direction (the standard picture has
// the over strand at NE, the under strand at NW).
inline int sign_oracle(const ratlink::Crossing& x) {
    auto dir = [](bool down, bool rightward) -> std::pair<int, int> {
        int dx = rightward ? 1 : -1;
        int dy = down ? -dx : dx;
        return {dx, dy};
    };
    auto [ox, oy] = x.down_is_over ? dir(true, x.down_rightward) : dir(false, x.up_rightward);
    auto [ux, uy] = x.down_is_over ? dir(false, x.up_rightward) : dir(true, x.down_rightward);
    int rx = uy, ry = -ux;  // under rotated 90 degrees clockwise
    if (rx == ox && ry == oy) return 1;
    if (rx == -ox && ry == -oy) return -1;
    throw std::logic_error("sign oracle: strands not transverse");
}

// Explores every removal order on a circle chain, returning the set of
// reachable fixpoint removal counts. Works on a serialized state so repeats
// are memoized.
struct ReductionOrders {
    std::set<int> counts;
    std::map<std::string, std::set<int>> memo;

    static std::string key(const ratlink::CircleChain& c) {
        std::ostringstream os;
        for (const auto& circ : c.circles) os << static_cast<int>(circ.tag) << ';';
        os << '|';
        for (const auto& [p, k] : c.shared) os << p.first << ',' << p.second << ':' << k << ';';
        return os.str();
    }

    std::set<int> explore(const ratlink::CircleChain& chain) {
        std::string k = key(chain);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        std::vector<int> removable;
        for (int i = 1; i < chain.total(); ++i) {
            if (chain.circles[i].tag != ratlink::CircleTag::Small) continue;
            auto nb = chain.neighbors(i);
            if (nb.size() == 2 && nb[0].second == 1 && nb[1].second == 1) removable.push_back(i);
        }
        std::set<int> result;
        if (removable.empty()) {
            result.insert(0);
        } else {
            for (int i : removable) {
                ratlink::CircleChain next = remove_small(chain, i);
                // one reduction removes exactly two circles and two crossings
                if (next.total() != chain.total() - 2 ||
                    next.crossing_count() != chain.crossing_count() - 2)
                    throw std::logic_error("reduction oracle: conservation violated");
                for (int c : explore(next)) result.insert(c + 1);
            }
        }
        memo[k] = result;
        return result;
    }

    static ratlink::CircleChain remove_small(ratlink::CircleChain chain, int i) {
        auto nb = chain.neighbors(i);
        int a = std::min(nb[0].first, nb[1].first);
        int b = std::max(nb[0].first, nb[1].first);
        chain.shared.erase({std::min(a, i), std::max(a, i)});
        chain.shared.erase({std::min(b, i), std::max(b, i)});
        std::map<std::pair<int, int>, int> rebuilt;
        for (const auto& [p, k] : chain.shared) {
            int x = p.first == b ? a : p.first;
            int y = p.second == b ? a : p.second;
            auto keyp = std::minmax(x, y);
            rebuilt[{keyp.first, keyp.second}] += k;
        }
        if (chain.circles[b].tag == ratlink::CircleTag::Medium &&
            chain.circles[a].tag == ratlink::CircleTag::Small)
            chain.circles[a].tag = ratlink::CircleTag::Medium;
        // compact: drop i and b
        ratlink::CircleChain out;
        std::vector<int> remap(chain.circles.size(), -1);
        for (size_t s = 0; s < chain.circles.size(); ++s) {
            if (static_cast<int>(s) == i || static_cast<int>(s) == b) continue;
            remap[s] = out.total();
            out.circles.push_back(chain.circles[s]);
        }
        for (const auto& [p, k] : rebuilt)
            out.shared[{remap[p.first], remap[p.second]}] += k;
        return out;
    }
};

// All odd compositions of n, written independently of the census generator.
inline void all_odd_compositions(long long n, std::vector<std::vector<long long>>& out) {
    std::vector<long long> cur;
    std::function<void(long long)> rec = [&](long long rem) {
        if (rem == 0) {
            if (cur.size() % 2 == 1) out.push_back(cur);
            return;
        }
        for (long long a = rem; a >= 1; --a) {  // reverse order on purpose
            cur.push_back(a);
            rec(rem - a);
            cur.pop_back();
        }
    };
    rec(n);
}

// Every legal (vector, orientation) pair at crossing number n.
inline std::vector<std::pair<ratlink::OddCF, ratlink::Orient>> all_builds(long long n) {
    std::vector<std::vector<long long>> comps;
    all_odd_compositions(n, comps);
    std::vector<std::pair<ratlink::OddCF, ratlink::Orient>> out;
    for (const auto& parts : comps) {
        ratlink::OddCF v(parts.begin(), parts.end());
        ratlink::Fraction f = ratlink::from_odd_cf(v);
        if (f.two_components()) {
            out.push_back({v, ratlink::Orient::Plus});
            out.push_back({v, ratlink::Orient::Minus});
        } else {
            out.push_back({v, ratlink::Orient::Forced});
        }
    }
    return out;
}

} // namespace testsupport
