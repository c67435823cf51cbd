#include <doctest.h>

#include "ratlink/seifert.hpp"
#include "support.hpp"

using namespace ratlink;

namespace {
SignedVector sv(std::initializer_list<long long> v) { return SignedVector(v); }
} // namespace

TEST_CASE("block decomposition") {
    auto bs = blocks(sv({3, 2, 3, 3, -1, -2, -3, 4, -4}));
    REQUIRE(bs.size() == 4);
    CHECK(bs[0].entries == std::vector<long long>{3, 2, 3, 3});
    CHECK(bs[1].entries == std::vector<long long>{-1, -2, -3});
    CHECK(bs[2].entries == std::vector<long long>{4});
    CHECK(bs[3].entries == std::vector<long long>{-4});
    CHECK(bs[0].sign == 1);
    CHECK(bs[3].start == 8);
    CHECK(blocks(sv({2})).size() == 1);
    CHECK(blocks(sv({-3, -2, -2, -3, -4, -1, -2, -3, -1})).size() == 1);
}

TEST_CASE("type classification") {
    CHECK(classify_type(sv({3, 1, -4, 1, 2, 3, -1, -3, -1})) == RType::I);
    CHECK(classify_type(sv({-1, -3, -1, 3, 2, 1, -4, 1, 3})) == RType::II);
    CHECK(classify_type(sv({3, 2, 1, 5, -4, 1, 2, 2, 3, 3, -1, -3, -1, 3, 2})) == RType::III);
    CHECK(classify_type(sv({-2})) == RType::IV);
}

TEST_CASE("circle chain counts match the worked examples") {
    CircleChain a = circle_chain(sv({2, 4, 3, 2, 1, 2, 4}));
    CHECK(a.count(CircleTag::Small) == 5);
    CHECK(a.count(CircleTag::Medium) == 4);
    CHECK(a.total() == 10);

    CircleChain b = circle_chain(sv({-3, -2, -2, -3, -4, -1, -2, -3, -1}));
    CHECK(b.count(CircleTag::Small) == 7);
    CHECK(b.count(CircleTag::Medium) == 4);
    CHECK(b.total() == 12);

    CircleChain c = circle_chain(sv({2}));
    CHECK(c.count(CircleTag::Medium) == 1);
    CHECK(c.count(CircleTag::Small) == 0);
    CHECK(c.total() == 2);
}

TEST_CASE("chain rejects vectors that are not R-decompositions") {
    CHECK_THROWS_AS(circle_chain(sv({1, -2, 1})), not_r_decomposition);
    CHECK_THROWS_AS(circle_chain(sv({2, 1, 2})), not_r_decomposition);
    CHECK_THROWS_AS(circle_chain(sv({-3})), not_r_decomposition);
}

TEST_CASE("reduction counts") {
    auto [fa, da] = reduce_to_fixpoint(circle_chain(sv({3, 2, 1, 5, -4, 1, 2, 2, 3, 3, -1, -3, -1, 3, 2})));
    CHECK(da == 7);  // the 36-crossing worked example admits seven reductions
    auto [fb, db] = reduce_to_fixpoint(circle_chain(sv({2})));
    CHECK(db == 0);
    auto [fc, dc] = reduce_to_fixpoint(circle_chain(sv({2, 2, 2})));
    CHECK(dc == 1);
    // conservation: each removal drops two circles and two crossings
    CircleChain orig = circle_chain(sv({3, 2, 1, 5, -4, 1, 2, 2, 3, 3, -1, -3, -1, 3, 2}));
    CHECK(fa.total() == orig.total() - 2 * da);
    CHECK(fa.crossing_count() == orig.crossing_count() - 2 * da);
    CHECK(fa.count(CircleTag::Small) == 0);
}

TEST_CASE("hopf and trefoil invariants via the full pipeline") {
    InvariantRecord hopf = invariants(Fraction(1, 2), Orient::Plus);
    CHECK(hopf.n == 2);
    CHECK(hopf.mu == 2);
    CHECK(hopf.s == 2);
    CHECK(hopf.genus == 0);
    CHECK(hopf.braid == 2);
    CHECK(hopf.deficiency == 0);
    CHECK(hopf.strongly_invertible.has_value());
    CHECK_FALSE(*hopf.strongly_invertible);

    InvariantRecord trefoil = invariants(Fraction(1, 3), Orient::Forced);
    CHECK(trefoil.n == 3);
    CHECK(trefoil.mu == 1);
    CHECK(trefoil.s == 2);
    CHECK(trefoil.genus == 1);
    CHECK(trefoil.braid == 2);
    CHECK(trefoil.deficiency == 0);
    CHECK(!trefoil.strongly_invertible.has_value());

    InvariantRecord fig8 = invariants(Fraction(2, 5), Orient::Forced);
    CHECK(fig8.n == 4);
    CHECK(fig8.genus == 1);
    CHECK(fig8.braid == 3);
    CHECK(fig8.deficiency == 0);
}

TEST_CASE("chain structure agrees with the smoothing oracle (n <= 13)") {
    for (long long n = 2; n <= 13; ++n) {
        for (const auto& [v, o] : testsupport::all_builds(n)) {
            PlatDiagram d = build_ps_diagram(v, o);
            SignedVector s = signed_vector(d);
            CircleChain chain = circle_chain(s);
            testsupport::Smoothed oracle = testsupport::smooth_diagram(d);
            REQUIRE(chain.total() == oracle.total);
            // multiset of crossings-with-large, and of all pairwise counts
            std::multiset<int> chain_large, oracle_large;
            for (int i = 1; i < chain.total(); ++i)
                chain_large.insert(chain.shared_between(0, i));
            for (int i = 1; i < oracle.total; ++i) oracle_large.insert(oracle.with_large[i]);
            REQUIRE(chain_large == oracle_large);
            std::multiset<int> chain_pairs, oracle_pairs;
            for (const auto& [k, c] : chain.shared) chain_pairs.insert(c);
            for (const auto& [k, c] : oracle.shared) oracle_pairs.insert(c);
            REQUIRE(chain_pairs == oracle_pairs);
            // sides follow the crossing signs: count positive/negative circles
            int inside = 0, outside = 0;
            for (int i = 1; i < chain.total(); ++i)
                (chain.circles[i].side < 0 ? inside : outside)++;
            long long neg_regions = 0, pos_regions = 0;
            for (long long b : s) (b < 0 ? neg_regions : pos_regions)++;
            (void)neg_regions; (void)pos_regions;
            REQUIRE(inside + outside + 1 == chain.total());
        }
    }
}

TEST_CASE("reduction count is order invariant (n <= 12)") {
    for (long long n = 2; n <= 12; ++n) {
        for (const auto& [v, o] : testsupport::all_builds(n)) {
            SignedVector s = signed_vector(build_ps_diagram(v, o));
            CircleChain chain = circle_chain(s);
            auto [fix, d] = reduce_to_fixpoint(chain);
            (void)fix;
            testsupport::ReductionOrders orders;
            auto counts = orders.explore(chain);
            REQUIRE(counts.size() == 1);
            REQUIRE(*counts.begin() == d);
        }
    }
}

TEST_CASE("invariants are reversal invariant and mirror keeps deficiency (n <= 12)") {
    for (long long n = 2; n <= 12; ++n) {
        for (const auto& [v, o] : testsupport::all_builds(n)) {
            SignedVector s = signed_vector(build_ps_diagram(v, o));
            auto [f1, o1] = vector_source(s);
            InvariantRecord a = invariants(f1, o1);
            auto [f2, o2] = vector_source(reversal(s));
            InvariantRecord b = invariants(f2, o2);
            REQUIRE(a.n == b.n);
            REQUIRE(a.mu == b.mu);
            REQUIRE(a.s == b.s);
            REQUIRE(a.genus == b.genus);
            REQUIRE(a.braid == b.braid);
            REQUIRE(a.deficiency == b.deficiency);
            // type swaps I and II, fixes III and IV
            RType want = a.rtype == RType::I    ? RType::II
                         : a.rtype == RType::II ? RType::I
                                                : a.rtype;
            REQUIRE(b.rtype == want);
            // mirror image has the same deficiency
            auto [fm, om] = vector_source(mirror(s));
            REQUIRE(invariants(fm, om).deficiency == a.deficiency);
        }
    }
}

TEST_CASE("deficiency-zero form: remaining crossings all touch the large circle") {
    for (long long n = 2; n <= 11; ++n) {
        for (const auto& [v, o] : testsupport::all_builds(n)) {
            SignedVector s = signed_vector(build_ps_diagram(v, o));
            auto [fix, d] = reduce_to_fixpoint(circle_chain(s));
            long long with_large = 0;
            for (int i = 1; i < fix.total(); ++i) with_large += fix.shared_between(0, i);
            REQUIRE(with_large == fix.crossing_count());
            // f + 2d + 2k = n with k mediums and f free crossings
            long long k = fix.count(CircleTag::Medium);
            long long f = fix.crossing_count() - 2 * k;
            REQUIRE(f >= 0);
            REQUIRE(f + 2 * d + 2 * k == n);
        }
    }
}
