#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "frz/classify.hpp"
#include "frz/fixtures.hpp"

using namespace frz;
using namespace frz::fixtures;

static std::vector<int> flippable_arcs(const TaggedTriangulation& t) {
    std::vector<int> out;
    for (int a = 0; a < t.cx.n_arcs; ++a)
        if (!t.cx.arc_is_boundary(a) && is_flippable(t, a)) out.push_back(a);
    return out;
}

static Frieze scramble(Frieze f, int flips, unsigned seed) {
    std::mt19937 rng(seed);
    for (int i = 0; i < flips; ++i) {
        auto arcs = flippable_arcs(f.base);
        f = flip_value(f, arcs[rng() % arcs.size()], true);
    }
    return f;
}

TEST_CASE("coordinate gcd of an integer lift") {
    CHECK(gcd_content(Vec2{3, 3}) == 3);
    CHECK(gcd_content(Vec2{0, 1}) == 1);
    CHECK(gcd_content(Vec2{6, 4}) == 2);
    CHECK(gcd_content(Vec2{-6, 4}) == 2);
    CHECK_THROWS_AS(gcd_content(Vec2{Rat(1, 2), Rat(3)}), DomainError);
    CHECK_THROWS_AS(gcd_content(Vec2{0, 0}), DomainError);
}

TEST_CASE("a uniformly scaled fan disc classifies back to its chart") {
    auto base3 = ideal_to_tagged(disc_fan(3));
    auto cert3 = classify(rescale(unitary_frieze(base3), {{3, Rat(3)}}));
    CHECK(cert3.constants == ScalingProfile{{3, Rat(3)}});
    CHECK(cert3.witnesses.at(3) == std::array<Int, 2>{3, 3});
    CHECK(cert3.divisibility.at(3) == std::array<Int, 2>{3, 3});
    CHECK(canonical_key(cert3.unitary, nullptr) == canonical_key(base3, nullptr));

    auto base4 = ideal_to_tagged(disc_fan(4));
    auto cert4 = classify(rescale(unitary_frieze(base4), {{4, Rat(2)}}));
    CHECK(cert4.constants == ScalingProfile{{4, Rat(2)}});
    CHECK(cert4.witnesses.at(4) == std::array<Int, 2>{2, 2});
    CHECK(cert4.divisibility.at(4) == std::array<Int, 2>{2, 4});
    CHECK(canonical_key(cert4.unitary, nullptr) == canonical_key(base4, nullptr));

    // unscaled friezes classify too, with the constant pinned to 1
    auto cert1 = classify(unitary_frieze(base4));
    CHECK(cert1.constants == ScalingProfile{{4, Rat(1)}});
    CHECK(canonical_key(cert1.unitary, nullptr) == canonical_key(base4, nullptr));
}

TEST_CASE("scaled and flipped charts classify to the original") {
    struct Case {
        IdealComplex cx;
        ScalingProfile k;
        int flips;
        unsigned seed;
    };
    std::vector<Case> cases = {
        {disc_fan(3), {{3, Rat(3)}}, 6, 201},
        {disc_fan(4), {{4, Rat(2)}}, 8, 202},
        {disc_fan(6), {{6, Rat(2)}}, 8, 203},
        {disc_fan(6), {{6, Rat(3)}}, 8, 204},
        {disc_fan(6), {{6, Rat(6)}}, 8, 205},
        {punctured_annulus(), {{2, Rat(3)}}, 8, 206},
        {annulus(2, 2), {}, 8, 207},
        {annulus(3, 2), {}, 8, 208},
        {polygon_disc(6), {}, 6, 209},
    };
    for (const auto& c : cases) {
        CAPTURE(c.seed);
        auto base = ideal_to_tagged(c.cx);
        Frieze f = scramble(rescale(unitary_frieze(base), c.k), c.flips, c.seed);
        auto cert = classify(f);
        ScalingProfile expect = c.k;
        for (int p : puncture_list(c.cx))
            if (!expect.count(p)) expect[p] = Rat(1);
        CHECK(cert.constants == expect);
        CHECK(canonical_key(cert.unitary, nullptr) == canonical_key(base, nullptr));
    }
}

TEST_CASE("a notched chart still reveals its scale") {
    auto base = ideal_to_tagged(disc_fan(2));
    Frieze f = rescale(unitary_frieze(base), {{2, Rat(2)}});
    for (int arc : {0, 1, 0}) {
        f = flip_value(f, arc, true);
        auto cert = classify(f);
        CHECK(cert.constants == ScalingProfile{{2, Rat(2)}});
        CHECK(canonical_key(cert.unitary, nullptr) == canonical_key(base, nullptr));
    }
}

TEST_CASE("classification rejects values that develop fractionally") {
    Frieze f = rescale(unitary_frieze(ideal_to_tagged(disc_fan(4))), {{4, Rat(2)}});
    f.values[0] = Rat(3);  // one radius out of scale
    CHECK_THROWS_AS(classify(f), DomainError);
}

TEST_CASE("classification refuses closed surfaces") {
    CHECK_THROWS_AS(classify(unitary_frieze(ideal_to_tagged(once_punctured_torus()))),
                    DomainError);
}

TEST_CASE("prime factors strip off one at a time") {
    auto base4 = ideal_to_tagged(disc_fan(4));
    Frieze u4 = unitary_frieze(base4);
    Frieze f4 = rescale(u4, {{4, Rat(2)}});
    Frieze g = strip_prime(f4, 2, 4);
    CHECK(g.values == u4.values);
    CHECK(canonical_key(g.base, nullptr) == canonical_key(base4, nullptr));

    CHECK_THROWS_AS(strip_prime(u4, 2, 4), DomainError);  // nothing left to strip
    CHECK_THROWS_AS(strip_prime(f4, 4, 4), DomainError);  // not a prime
    CHECK_THROWS_AS(strip_prime(f4, 3, 4), DomainError);  // wrong prime
    CHECK_THROWS_AS(strip_prime(f4, 2, 0), DomainError);  // boundary target

    auto base8 = ideal_to_tagged(disc_fan(8));
    Frieze u8 = unitary_frieze(base8);
    Frieze f8 = rescale(u8, {{8, Rat(4)}});
    CHECK_THROWS_AS(strip_prime(f8, 4, 8), DomainError);
    CHECK(strip_prime(strip_prime(f8, 2, 8), 2, 8).values == u8.values);

    auto base6 = ideal_to_tagged(disc_fan(6));
    Frieze u6 = unitary_frieze(base6);
    Frieze f6 = rescale(u6, {{6, Rat(6)}});
    CHECK(strip_prime(strip_prime(f6, 2, 6), 3, 6).values == u6.values);
    CHECK(strip_prime(strip_prime(f6, 3, 6), 2, 6).values == u6.values);
}

static void check_realizing_lifts(const Frieze& f, const CoprimeLiftReport& rep) {
    const auto& cx = f.base.cx;
    REQUIRE(rep.success);
    REQUIRE(rep.lifts.size() == cx.tris.size());
    for (size_t t = 0; t < cx.tris.size(); ++t)
        for (int s = 0; s < 3; ++s) {
            CAPTURE(t);
            CAPTURE(s);
            CHECK(is_ford_normal(rep.lifts[t][s]));
            CHECK(lambda_length(rep.lifts[t][mod3(s + 1)], rep.lifts[t][mod3(s + 2)]) ==
                  f.values[cx.arc_at((int)t, s)]);
        }
}

TEST_CASE("integer lifts of coprime closed structures") {
    for (const auto& cx :
         {once_punctured_torus(), four_punctured_torus(), genus2_surface()}) {
        Frieze u = unitary_frieze(ideal_to_tagged(cx));
        auto rep = lift_coprime(u);
        check_realizing_lifts(u, rep);
        auto that = unitary_structure_of(u, rep);
        CHECK(canonical_encoding(that.cx) == canonical_encoding(cx));
    }

    // bordered surfaces lift the same way
    Frieze ub = unitary_frieze(ideal_to_tagged(disc_fan(5)));
    check_realizing_lifts(ub, lift_coprime(ub));
}

TEST_CASE("a flip away from unitary keeps the value-1 skeleton") {
    for (const auto& cx :
         {once_punctured_torus(), four_punctured_torus(), genus2_surface()}) {
        Frieze f = flip_value(unitary_frieze(ideal_to_tagged(cx)), 0, true);
        CHECK(*std::max_element(f.values.begin(), f.values.end()) == Rat(2));
        auto rep = lift_coprime(f);
        check_realizing_lifts(f, rep);
        auto that = unitary_structure_of(f, rep);
        CHECK(canonical_encoding(that.cx) == canonical_encoding(cx));
    }
}

TEST_CASE("a longer closed scramble still lifts and recovers its skeleton") {
    Frieze f = unitary_frieze(ideal_to_tagged(genus2_surface()));
    for (int arc : {4, 5, 0, 5, 7, 1}) f = flip_value(f, arc, true);
    CHECK(f.values == std::vector<Rat>{4, 5, 1, 1, 2, 3, 1, 5, 1});
    auto rep = lift_coprime(f);
    check_realizing_lifts(f, rep);
    auto that = unitary_structure_of(f, rep);
    CHECK(canonical_encoding(that.cx) == canonical_encoding(genus2_surface()));
}

TEST_CASE("common factors on a closed triangle are refused") {
    Frieze f = rescale(unitary_frieze(ideal_to_tagged(once_punctured_torus())),
                       {{0, Rat(2)}});
    CHECK(f.values == std::vector<Rat>{4, 4, 4});
    CHECK_THROWS_AS(lift_coprime(f), DomainError);
}
