#include <doctest.h>

#include <set>

#include <json.hpp>

#include "ratlink/plat.hpp"
#include "support.hpp"

using namespace ratlink;

namespace {
OddCF cf(std::initializer_list<long long> v) { return OddCF(v.begin(), v.end()); }
SignedVector sv(std::initializer_list<long long> v) { return SignedVector(v); }
} // namespace

TEST_CASE("worked example: signed vector of L+(5075/17426)") {
    PlatDiagram d = build_ps_diagram(cf({3, 2, 3, 3, 1, 2, 3, 4, 4}), Orient::Plus);
    CHECK(d.fraction == Fraction(5075, 17426));
    CHECK(d.components == 2);
    CHECK(signed_vector(d) == sv({3, 2, 3, 3, -1, -2, -3, 4, -4}));
}

TEST_CASE("worked example: a type I vector and its reversal") {
    PlatDiagram d = build_ps_diagram(cf({3, 1, 4, 1, 2, 3, 1, 3, 1}), Orient::Plus);
    SignedVector s = signed_vector(d);
    CHECK(s == sv({3, 1, -4, 1, 2, 3, -1, -3, -1}));
    CHECK(reversal(s) == sv({-1, -3, -1, 3, 2, 1, -4, 1, 3}));
    CHECK(reversal(reversal(s)) == s);
    CHECK(reversal(sv({2})) == sv({2}));
}

TEST_CASE("hopf link orientations") {
    PlatDiagram plus = build_ps_diagram(cf({2}), Orient::Plus);
    CHECK(plus.components == 2);
    CHECK(plus.crossings.size() == 2);
    for (const Crossing& x : plus.crossings) CHECK(x.sign == 1);
    CHECK(signed_vector(plus) == sv({2}));
    PlatDiagram minus = build_ps_diagram(cf({2}), Orient::Minus);
    CHECK(signed_vector(minus) == sv({-2}));
}

TEST_CASE("trefoil is forced and homogeneous") {
    PlatDiagram d = build_ps_diagram(cf({3}), Orient::Forced);
    CHECK(d.components == 1);
    CHECK(d.crossings.size() == 3);
    int s0 = testsupport::sign_oracle(d.crossings[0]);
    for (const Crossing& x : d.crossings) CHECK(testsupport::sign_oracle(x) == s0);
    CHECK(signed_vector(d) == sv({3}));  // the oracle-recorded sign is +1
    CHECK(s0 == 1);
}

TEST_CASE("orientation legality") {
    CHECK_THROWS_AS(build_ps_diagram(cf({3}), Orient::Plus), orientation_error);
    CHECK_THROWS_AS(build_ps_diagram(cf({2}), Orient::Forced), orientation_error);
}

TEST_CASE("mirror: worked 36-crossing example and involution") {
    SignedVector type3 = sv({3, 2, 1, 5, -4, 1, 2, 2, 3, 3, -1, -3, -1, 3, 2});
    SignedVector m = mirror(type3);
    CHECK(m == sv({-1, -2, -2, -1, -5, 4, -1, -2, -2, -3, -3, 1, 3, 1, -3, -1, -1}));
    CHECK(mirror(m) == type3);
    // a type III vector mirrors to type IV: ends turn negative
    CHECK(m.front() < 0);
    CHECK(m.back() < 0);
}

TEST_CASE("realizability: parity rules") {
    CHECK(realizable(sv({3, 2, 3, 3, -1, -2, -3, 4, -4})));
    CHECK(realizable(sv({2})));
    CHECK(realizable(sv({-2})));
    CHECK(!realizable(sv({-3})));          // single negative block needs odd ends... even entry
    CHECK(!realizable(sv({2, 1, 2})));     // single positive block needs even entries at even slots
    CHECK(!realizable(sv({1, -2, 1})));    // first positive block of odd length
    CHECK(!realizable(sv({1, 1})));        // even length
    CHECK(realizable(sv({-3, -2, -2, -3, -4, -1, -2, -3, -1})));
}

TEST_CASE("every built diagram is consistent (n <= 10)") {
    for (long long n = 2; n <= 10; ++n) {
        for (const auto& [v, o] : testsupport::all_builds(n)) {
            PlatDiagram d = build_ps_diagram(v, o);
            SignedVector s = signed_vector(d);
            REQUIRE(realizable(s));
            // independent sign rule agrees crossing by crossing
            for (const Crossing& x : d.crossings)
                REQUIRE(x.sign == testsupport::sign_oracle(x));
            // within a twist region the over/under pattern is the uniform twist
            for (size_t i = 1; i < d.crossings.size(); ++i)
                if (d.crossings[i].region == d.crossings[i - 1].region)
                    REQUIRE(d.crossings[i].down_is_over == d.crossings[i - 1].down_is_over);
            // components match the parity of q
            REQUIRE(d.components == (d.fraction.two_components() ? 2 : 1));
            // round trip through vector_source
            auto [f2, o2] = vector_source(s);
            REQUIRE(f2 == d.fraction);
            REQUIRE(o2 == o);
        }
    }
}

TEST_CASE("orientation determinism for two-component links (n <= 10)") {
    for (long long n = 2; n <= 10; ++n) {
        std::vector<std::vector<long long>> comps;
        testsupport::all_odd_compositions(n, comps);
        for (const auto& parts : comps) {
            OddCF v(parts.begin(), parts.end());
            if (!from_odd_cf(v).two_components()) continue;
            PlatDiagram a = build_ps_diagram(v, Orient::Plus);
            PlatDiagram b = build_ps_diagram(v, Orient::Minus);
            SignedVector x = signed_vector(a), y = signed_vector(b);
            bool differs = false;
            for (size_t i = 0; i < x.size(); ++i) differs = differs || (x[i] != y[i]);
            REQUIRE(differs);
            // the flip reverses exactly the component away from the long arc
            for (size_t i = 0; i < a.crossings.size(); ++i) {
                const Crossing &ca = a.crossings[i], &cb = b.crossings[i];
                REQUIRE(ca.comp_down == cb.comp_down);
                REQUIRE(ca.down_is_over == cb.down_is_over);
                bool down_flipped = ca.down_rightward != cb.down_rightward;
                bool up_flipped = ca.up_rightward != cb.up_rightward;
                REQUIRE(down_flipped == (ca.comp_down == 2));
                REQUIRE(up_flipped == (ca.comp_up == 2));
            }
        }
    }
}

TEST_CASE("type/block parity and mirror block swap (n <= 10)") {
    for (long long n = 2; n <= 10; ++n) {
        for (const auto& [v, o] : testsupport::all_builds(n)) {
            SignedVector s = signed_vector(build_ps_diagram(v, o));
            int nblocks = 1;
            for (size_t i = 1; i < s.size(); ++i)
                if ((s[i] > 0) != (s[i - 1] > 0)) ++nblocks;
            bool ends_opposite = (s.front() > 0) != (s.back() > 0);
            REQUIRE((nblocks % 2 == 0) == ends_opposite);
            SignedVector m = mirror(s);
            int pos_s = 0, neg_s = 0, pos_m = 0, neg_m = 0;
            auto count_blocks = [](const SignedVector& t, int& pos, int& neg) {
                for (size_t i = 0; i < t.size(); ++i)
                    if (i == 0 || (t[i] > 0) != (t[i - 1] > 0)) ((t[i] > 0) ? pos : neg)++;
            };
            count_blocks(s, pos_s, neg_s);
            count_blocks(m, pos_m, neg_m);
            REQUIRE(pos_s == neg_m);
            REQUIRE(neg_s == pos_m);
        }
    }
}

TEST_CASE("diagram json is stable and well formed") {
    PlatDiagram d = build_ps_diagram(cf({3, 2, 2, 3, 3}), Orient::Forced);
    std::string once = diagram_to_json(d);
    std::string twice = diagram_to_json(build_ps_diagram(cf({3, 2, 2, 3, 3}), Orient::Forced));
    CHECK(once == twice);
    auto j = nlohmann::json::parse(once);
    CHECK(j["fraction"] == "56/191");
    CHECK(j["components"] == 1);
    CHECK(j["regions"].size() == 5);
    CHECK(j["crossings"].size() == 13);
    CHECK(j["regions"][0]["axis"] == "horizontal");
    CHECK(j["regions"][1]["axis"] == "vertical");
    for (const auto& c : j["crossings"]) {
        CHECK((c["sign"] == 1 || c["sign"] == -1));
        CHECK(c["over_component"] == 1);  // knots have a single component
    }
}
