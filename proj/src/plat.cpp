#include "ratlink/plat.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <optional>

#include <json.hpp>

namespace ratlink {

std::string orient_name(Orient o) {
    switch (o) {
        case Orient::Forced: return "forced";
        case Orient::Plus: return "plus";
        case Orient::Minus: return "minus";
    }
    return "?";
}

void check_signed_vector(const SignedVector& sv) {
    if (sv.empty() || sv.size() % 2 == 0)
        throw std::invalid_argument("signed vector must have odd length");
    for (long long b : sv)
        if (b == 0) throw std::invalid_argument("signed vector entries must be nonzero");
}

namespace {

constexpr long long kMaxDiagramCrossings = 1 << 22;

struct Pass {
    int column = -1;
    bool down = false;       // true: the strand entering on the upper rail
    bool rightward = false;
    int component = 0;
};

// Where a segment end attaches: a column side, or a plat closure cap.
struct Attach {
    enum Kind { Column, Cap } kind;
    int column;   // valid when kind == Column
    bool upper;   // entering the column on its upper rail
};

struct Builder {
    std::vector<long long> sizes;
    long long n = 0;
    std::vector<int> col_region;
    std::vector<int> col_upper_rail;

    // rail -> ascending list of touching columns
    std::vector<int> rail_cols[5];
    // rail -> segment ids, one more than touching columns
    std::vector<int> rail_segs[5];
    int seg_count = 0;

    std::vector<Attach> left_attach, right_attach; // indexed by segment id
    std::vector<int> seg_component;
    std::vector<int> seg_dir;                      // +1 rightward, -1 leftward, 0 unvisited

    std::vector<Pass> passes;                      // discovery order
    std::vector<std::vector<int>> comp_passes;     // pass indices per component
    std::vector<int> col_pass_down, col_pass_up;   // pass index per column

    void layout(const OddCF& v);
    void trace_component(int start_seg, bool start_rightward, int label);
    void trace_all(bool two_comp);
    void flip_component(int label);
    std::vector<bool> color_over_under() const;
    int pass_sign(const Pass& over, const Pass& under) const;
};

void Builder::layout(const OddCF& v) {
    sizes.reserve(v.size());
    for (const BigInt& a : v) sizes.push_back(to_small(a, "twist region size"));
    for (long long a : sizes) n += a;
    if (n > kMaxDiagramCrossings)
        throw std::length_error("diagram too large to materialize: n = " + std::to_string(n));

    col_region.reserve(n);
    col_upper_rail.reserve(n);
    for (size_t r = 0; r < sizes.size(); ++r) {
        int upper = (r % 2 == 0) ? 2 : 1;  // odd regions on rails 2-3, even on 1-2
        for (long long j = 0; j < sizes[r]; ++j) {
            col_region.push_back(static_cast<int>(r));
            col_upper_rail.push_back(upper);
        }
    }
    for (int c = 0; c < n; ++c) {
        rail_cols[col_upper_rail[c]].push_back(c);
        rail_cols[col_upper_rail[c] + 1].push_back(c);
    }

    auto new_seg = [&]() { return seg_count++; };
    for (int rail = 1; rail <= 4; ++rail) {
        rail_segs[rail].resize(rail_cols[rail].size() + 1);
        for (int& s : rail_segs[rail]) s = new_seg();
    }
    left_attach.assign(seg_count, Attach{Attach::Cap, -1, false});
    right_attach.assign(seg_count, Attach{Attach::Cap, -1, false});
    for (int rail = 1; rail <= 4; ++rail) {
        const auto& cols = rail_cols[rail];
        for (size_t i = 0; i < cols.size(); ++i) {
            bool upper = (rail == col_upper_rail[cols[i]]);
            right_attach[rail_segs[rail][i]] = Attach{Attach::Column, cols[i], upper};
            left_attach[rail_segs[rail][i + 1]] = Attach{Attach::Column, cols[i], upper};
        }
    }
    seg_component.assign(seg_count, 0);
    seg_dir.assign(seg_count, 0);
    col_pass_down.assign(n, -1);
    col_pass_up.assign(n, -1);
}

// Walk one whole component starting on start_seg, labelling segments and
// recording every crossing pass in traversal order.
void Builder::trace_component(int start_seg, bool start_rightward, int label) {
    comp_passes.resize(std::max<size_t>(comp_passes.size(), label));
    auto& plist = comp_passes[label - 1];
    int seg = start_seg;
    bool rightward = start_rightward;
    do {
        if (seg_component[seg] != 0)
            throw std::logic_error("plat trace revisited a segment");
        seg_component[seg] = label;
        seg_dir[seg] = rightward ? +1 : -1;
        const Attach& at = rightward ? right_attach[seg] : left_attach[seg];
        if (at.kind == Attach::Column) {
            int c = at.column;
            // Entering from the left on the upper rail, or from the right on
            // the lower rail, traverses the "down" diagonal.
            bool down = (rightward == at.upper);
            Pass p;
            p.column = c;
            p.down = down;
            p.rightward = rightward;
            p.component = label;
            int idx = static_cast<int>(passes.size());
            passes.push_back(p);
            plist.push_back(idx);
            (down ? col_pass_down : col_pass_up)[c] = idx;
            // Exit on the other rail, same screen direction.
            int rail = col_upper_rail[c] + (down == rightward ? 1 : 0);
            // index of c within rail_cols[rail]
            const auto& cols = rail_cols[rail];
            size_t i = std::lower_bound(cols.begin(), cols.end(), c) - cols.begin();
            seg = rightward ? rail_segs[rail][i + 1] : rail_segs[rail][i];
        } else {
            // Plat closure cap: rails 1-2 and 3-4 are joined at both ends.
            int rail = 0;
            for (int r = 1; r <= 4; ++r) {
                const auto& segs = rail_segs[r];
                if ((rightward && segs.back() == seg) || (!rightward && segs.front() == seg))
                    rail = r;
            }
            assert(rail != 0);
            int partner = (rail == 1) ? 2 : (rail == 2) ? 1 : (rail == 3) ? 4 : 3;
            seg = rightward ? rail_segs[partner].back() : rail_segs[partner].front();
            rightward = !rightward;
        }
    } while (seg != start_seg);
}

void Builder::trace_all(bool two_comp) {
    // Component 1 contains the long arc (rail 4), oriented right to left.
    trace_component(rail_segs[4].front(), false, 1);
    int unvisited = -1;
    for (int s = 0; s < seg_count; ++s)
        if (seg_component[s] == 0) { unvisited = s; break; }
    if (two_comp) {
        if (unvisited < 0) throw std::logic_error("expected two components, traced one");
        trace_component(rail_segs[1].front(), true, 2);
    }
    for (int s = 0; s < seg_count; ++s)
        if (seg_component[s] == 0) throw std::logic_error("untraced segment after closure walk");
    for (int c = 0; c < n; ++c)
        if (col_pass_down[c] < 0 || col_pass_up[c] < 0)
            throw std::logic_error("crossing missing a pass");
}

void Builder::flip_component(int label) {
    for (int idx : comp_passes[label - 1]) passes[idx].rightward = !passes[idx].rightward;
    for (int s = 0; s < seg_count; ++s)
        if (seg_component[s] == label) seg_dir[s] = -seg_dir[s];
    std::reverse(comp_passes[label - 1].begin(), comp_passes[label - 1].end());
}

// Solve for the over/under assignment: along every component consecutive
// passes alternate, and the two passes of one crossing take opposite roles.
// With x[c] = "down strand is over at column c" each alternation constraint
// becomes a parity relation between two columns; the diagram is alternating
// iff the relations are consistent. The PS form seeds the solution: the
// strand arriving from the long arc goes under at the leftmost crossing.
std::vector<bool> Builder::color_over_under() const {
    std::vector<int> val(n, -1); // -1 unknown, else 0/1
    std::vector<std::vector<std::pair<int,int>>> adj(n); // (other column, parity)
    for (const auto& plist : comp_passes) {
        size_t m = plist.size();
        if (m % 2 != 0)
            throw std::logic_error("component passes an odd number of crossings; not alternating");
        for (size_t i = 0; i < m; ++i) {
            const Pass& p = passes[plist[i]];
            const Pass& q = passes[plist[(i + 1) % m]];
            // role(p) = x[p.column] xor (p is the up strand); roles must differ
            int parity = 1 ^ (p.down ? 0 : 1) ^ (q.down ? 0 : 1);
            adj[p.column].push_back({q.column, parity});
            adj[q.column].push_back({p.column, parity});
        }
    }
    const Pass& first = passes[comp_passes[0].front()];
    if (first.column != 0)
        throw std::logic_error("long-arc strand does not reach the leftmost crossing first");
    // role(first) must be under: x[0] xor (first is up) = 0 for "under" when
    // first is the up strand, i.e. x[0] = 1; symmetric otherwise.
    std::deque<int> queue;
    val[0] = first.down ? 0 : 1;
    queue.push_back(0);
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (auto [d, parity] : adj[c]) {
            int want = val[c] ^ parity;
            if (val[d] == -1) {
                val[d] = want;
                queue.push_back(d);
            } else if (val[d] != want) {
                throw std::logic_error("diagram is not alternating (parity conflict)");
            }
        }
    }
    std::vector<bool> out(n);
    for (int c = 0; c < n; ++c) {
        if (val[c] == -1) throw std::logic_error("disconnected crossing graph");
        out[c] = val[c] == 1;
    }
    return out;
}

// Right-handed convention: positive when the under strand crosses right to
// left as seen along the over strand.
int Builder::pass_sign(const Pass& over, const Pass& under) const {
    auto vec = [](const Pass& p) -> std::pair<int, int> {
        int dx = p.rightward ? 1 : -1;
        int dy = p.down ? -1 : 1;
        if (!p.rightward) dy = -dy;
        return {dx, dy};
    };
    auto [ox, oy] = vec(over);
    auto [ux, uy] = vec(under);
    int cross = ox * uy - oy * ux;
    assert(cross != 0);
    return cross > 0 ? 1 : -1;
}

} // namespace

PlatDiagram build_ps_diagram(const OddCF& v, Orient o) {
    check_odd_cf(v);
    Fraction f = from_odd_cf(v);
    bool two_comp = f.two_components();
    if (two_comp && o == Orient::Forced)
        throw orientation_error("q is even: an explicit +/- orientation is required for " + f.str());
    if (!two_comp && o != Orient::Forced)
        throw orientation_error("q is odd: the orientation of " + f.str() + " is already determined");

    Builder b;
    b.layout(v);
    b.trace_all(two_comp);

    std::vector<bool> down_over = b.color_over_under();

    auto col_sign = [&](int c) {
        const Pass& down = b.passes[b.col_pass_down[c]];
        const Pass& up = b.passes[b.col_pass_up[c]];
        return down_over[c] ? b.pass_sign(down, up) : b.pass_sign(up, down);
    };

    if (two_comp) {
        int want = (o == Orient::Plus) ? 1 : -1;
        if (col_sign(0) != want) b.flip_component(2);
        if (col_sign(0) != want)
            throw std::logic_error("orientation tag unreachable at leftmost crossing");
    }

    PlatDiagram d{f, b.sizes, o, two_comp ? 2 : 1, 1, {}, b.rail_segs[4].front(), b.seg_count,
                  {}, {}, {}};
    d.crossings.reserve(b.n);
    std::vector<int> region_pos(b.sizes.size(), 0);
    for (int c = 0; c < b.n; ++c) {
        const Pass& down = b.passes[b.col_pass_down[c]];
        const Pass& up = b.passes[b.col_pass_up[c]];
        Crossing x;
        x.region = b.col_region[c];
        x.pos = region_pos[x.region]++;
        x.upper_rail = b.col_upper_rail[c];
        x.comp_down = down.component;
        x.comp_up = up.component;
        x.down_rightward = down.rightward;
        x.up_rightward = up.rightward;
        x.down_is_over = down_over[c];
        x.sign = col_sign(c);
        int upper = x.upper_rail, lower = upper + 1;
        const auto& ucols = b.rail_cols[upper];
        const auto& lcols = b.rail_cols[lower];
        size_t ui = std::lower_bound(ucols.begin(), ucols.end(), c) - ucols.begin();
        size_t li = std::lower_bound(lcols.begin(), lcols.end(), c) - lcols.begin();
        x.seg_ul = b.rail_segs[upper][ui];
        x.seg_ur = b.rail_segs[upper][ui + 1];
        x.seg_ll = b.rail_segs[lower][li];
        x.seg_lr = b.rail_segs[lower][li + 1];
        d.crossings.push_back(x);
    }
    for (int rail = 1; rail <= 4; ++rail) {
        d.left_entry_component[rail] = b.seg_component[b.rail_segs[rail].front()];
        d.rail_left_seg[rail] = b.rail_segs[rail].front();
        d.rail_right_seg[rail] = b.rail_segs[rail].back();
    }

    signed_vector(d); // asserts region homogeneity
    return d;
}

SignedVector signed_vector(const PlatDiagram& d) {
    SignedVector sv(d.region_size.size(), 0);
    for (const Crossing& x : d.crossings) {
        long long want = d.region_size[x.region] * x.sign;
        if (sv[x.region] == 0)
            sv[x.region] = want;
        else if (sv[x.region] != want)
            throw std::logic_error("twist region with mixed crossing signs (template bug)");
    }
    check_signed_vector(sv);
    return sv;
}

SignedVector reversal(const SignedVector& sv) {
    check_signed_vector(sv);
    return SignedVector(sv.rbegin(), sv.rend());
}

bool realizable(const SignedVector& sv) {
    if (sv.empty() || sv.size() % 2 == 0) return false;
    for (long long b : sv)
        if (b == 0) return false;
    // Propagate strand directions along the three crossed rails. d3 starts
    // rightward (the long arc is oriented right to left and feeds rail 3
    // through the left closure cap); the rail 1-2 cap forces d1 = -d2.
    int s0 = sv[0] > 0 ? 1 : -1;
    int d2 = s0, d3 = 1, d1 = -s0;
    for (size_t i = 0; i < sv.size(); ++i) {
        int s = sv[i] > 0 ? 1 : -1;
        bool odd = (std::llabs(sv[i]) % 2) == 1;
        if (i % 2 == 0) {
            if (d2 * d3 != s) return false;        // parallel rails 2-3 give positive twists
            if (odd) std::swap(d2, d3);
        } else {
            if (-(d1 * d2) != s) return false;     // antiparallel rails 1-2 give positive twists
            if (odd) std::swap(d1, d2);
        }
    }
    return d3 == 1 && d1 == -d2;
}

std::pair<Fraction, Orient> vector_source(const SignedVector& sv) {
    check_signed_vector(sv);
    if (!realizable(sv))
        throw std::invalid_argument("signed vector is not realizable as a PS-form 4-plat");
    OddCF v;
    v.reserve(sv.size());
    for (long long b : sv) v.emplace_back(b > 0 ? b : -b);
    Fraction f = from_odd_cf(v);
    Orient o = Orient::Forced;
    if (f.two_components()) o = sv[0] > 0 ? Orient::Plus : Orient::Minus;
    return {f, o};
}

SignedVector mirror(const SignedVector& sv) {
    auto [f, o] = vector_source(sv);
    Fraction fm = mirror_fraction(f);
    Orient om = Orient::Forced;
    if (fm.two_components())
        om = (o == Orient::Plus) ? Orient::Minus : Orient::Plus;
    PlatDiagram dm = build_ps_diagram(to_odd_cf(fm), om);
    return signed_vector(dm);
}

std::string diagram_to_json(const PlatDiagram& d) {
    using json = nlohmann::ordered_json;
    json j;
    j["fraction"] = d.fraction.str();
    json vec = json::array();
    for (long long a : d.region_size) vec.push_back(a);
    j["vector"] = vec;
    j["orientation"] = orient_name(d.orientation);
    SignedVector sv = signed_vector(d);
    // For knots the +/- label is derived data; it is never accepted as input.
    j["leftmost_sign"] = sv.front() > 0 ? 1 : -1;
    j["components"] = d.components;
    j["long_arc_component"] = d.long_arc_component;
    json regions = json::array();
    for (size_t r = 0; r < d.region_size.size(); ++r) {
        json reg;
        reg["index"] = r + 1;
        reg["size"] = d.region_size[r];
        reg["axis"] = (r % 2 == 0) ? "horizontal" : "vertical";
        reg["sign"] = sv[r] > 0 ? 1 : -1;
        regions.push_back(reg);
    }
    j["regions"] = regions;
    json crossings = json::array();
    for (const Crossing& x : d.crossings) {
        json c;
        c["region"] = x.region + 1;
        c["over_component"] = x.down_is_over ? x.comp_down : x.comp_up;
        c["under_component"] = x.down_is_over ? x.comp_up : x.comp_down;
        c["sign"] = x.sign;
        crossings.push_back(c);
    }
    j["crossings"] = crossings;
    return j.dump(2);
}

} // namespace ratlink
