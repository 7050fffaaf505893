#include <doctest.h>

#include "qgc/group.hpp"
#include "qgc/group_algebra.hpp"
#include "qgc/rng.hpp"

using namespace qgc;

TEST_CASE("group multiplication and inverses") {
    Group c5 = Group::cyclic(5);
    CHECK(c5.mul(0, 3) == 3);          // identity
    CHECK(c5.mul(1, 4) == 0);          // x * x^{n-1} = 1
    CHECK(c5.inv(2) == 3);

    Group d5 = Group::dihedral(5);
    Gel x = 1, y = 5;
    CHECK(d5.mul(y, d5.mul(x, y)) == d5.inv(x));  // y x y^{-1} = x^{-1}
    CHECK(d5.inv(d5.mul(x, y)) == d5.mul(x, y));  // reflections are involutions

    for (const Group& G : {Group::cyclic(6), Group::abelian({2, 4}), Group::dihedral(9)}) {
        for (Gel a = 0; a < G.order; ++a) {
            CHECK(G.inv(G.inv(a)) == a);
            CHECK(G.mul(a, G.inv(a)) == G.identity());
        }
    }
}

TEST_CASE("Cayley permutations") {
    Group c7 = Group::cyclic(7);
    auto id = c7.cayley_permutation(0);
    for (Gel j = 0; j < 7; ++j) CHECK(id[j] == j);
    auto rho = c7.cayley_permutation(1);
    for (Gel j = 0; j < 7; ++j) CHECK(rho[j] == (j + 1) % 7);

    Group d7 = Group::dihedral(7);
    auto ry = d7.cayley_permutation(7);
    for (Gel j = 0; j < d7.order; ++j) CHECK(ry[ry[j]] == j);  // involution

    // rho_{gh} = rho_g o rho_h, exhaustively for |G| <= 24
    for (const Group& G : {Group::cyclic(24), Group::abelian({2, 2, 5}), Group::dihedral(12)}) {
        for (Gel g = 0; g < G.order; ++g) {
            auto rg = G.cayley_permutation(g);
            for (Gel h = 0; h < G.order; ++h) {
                auto rh = G.cayley_permutation(h);
                auto rgh = G.cayley_permutation(G.mul(g, h));
                for (Gel j = 0; j < G.order; ++j) CHECK(rgh[j] == rg[rh[j]]);
            }
        }
    }
}

TEST_CASE("group literals") {
    CHECK(parse_group("c:3x5").factors == std::vector<std::uint32_t>{3, 5});
    CHECK(parse_group("d:7").rotation == 7);
    CHECK(parse_group("c:1").order == 1);
    CHECK(group_literal(Group::dihedral(5)) == "d:5");
    CHECK_THROWS_AS(parse_group("x:3"), std::invalid_argument);
}

TEST_CASE("algebra convolution") {
    Fq F2 = make_field(2, 1);
    Group c3 = Group::cyclic(3);
    GaElem one = ga_one(F2, c3);
    GaElem a(F2, c3, {1, 1, 0});  // 1 + x
    CHECK(ga_mul(one, a) == a);
    CHECK(ga_mul(a, a) == GaElem(F2, c3, {1, 0, 1}));  // (1+x)^2 = 1 + x^2 in char 2

    Group c5 = Group::cyclic(5);
    CHECK(ga_mul(ga_basis(F2, c5, 1), ga_basis(F2, c5, 4)) == ga_one(F2, c5));

    CHECK_THROWS_AS(ga_mul(a, ga_one(F2, c5)), std::invalid_argument);
}

TEST_CASE("bar map, sigma and the inner product") {
    Fq F2 = make_field(2, 1);
    Fq F5 = make_field(5, 1);
    Group c7 = Group::cyclic(7);
    RngStream rng = RngStream::substream(11, 0);

    for (Gel i = 0; i < 7; ++i)
        CHECK(bar(ga_basis(F2, c7, i)) == ga_basis(F2, c7, (7 - i) % 7));

    Group d5 = Group::dihedral(5);
    CHECK(bar(ga_basis(F2, d5, 5)) == ga_basis(F2, d5, 5));  // bar(y) = y

    CHECK(sigma(ga_one(F5, c7)) == 1);

    auto random_elem = [&](const Fq& F, const Group& G) {
        GaElem a(F, G);
        for (auto& c : a.c) c = rng.below(static_cast<Fel>(F.q));
        return a;
    };

    for (int it = 0; it < 30; ++it) {
        GaElem a = random_elem(F5, c7), b = random_elem(F5, c7), d = random_elem(F5, c7);
        CHECK(bar(bar(a)) == a);
        CHECK(ga_inner(a, b) == sigma(ga_mul(a, bar(b))));
        CHECK(ga_inner(ga_mul(d, a), b) == ga_inner(a, ga_mul(bar(d), b)));
        // abelian: bar is an algebra automorphism
        CHECK(bar(ga_mul(a, b)) == ga_mul(bar(a), bar(b)));
        GaElem c = random_elem(F5, c7);
        CHECK(ga_mul(ga_mul(a, b), c) == ga_mul(a, ga_mul(b, c)));
    }

    // <da, b> = <a, bar(d) b> is trilinear, so basis triples prove it for
    // every triple; run all of them for |G| <= 8 over F_2
    for (const Group& G : {Group::cyclic(8), Group::dihedral(4), Group::abelian({2, 4})}) {
        for (Gel dd = 0; dd < G.order; ++dd)
            for (Gel aa = 0; aa < G.order; ++aa)
                for (Gel bb = 0; bb < G.order; ++bb) {
                    GaElem ea = ga_basis(F2, G, aa), eb = ga_basis(F2, G, bb), ed = ga_basis(F2, G, dd);
                    CHECK(ga_inner(ga_mul(ed, ea), eb) == ga_inner(ea, ga_mul(bar(ed), eb)));
                }
    }

    // anti-automorphism on a non-abelian group; sigma is trace-like
    for (int it = 0; it < 20; ++it) {
        GaElem a = random_elem(F2, d5), b = random_elem(F2, d5);
        CHECK(bar(ga_mul(a, b)) == ga_mul(bar(b), bar(a)));
        CHECK(sigma(bar(a)) == sigma(a));
        CHECK(sigma(ga_mul(a, b)) == sigma(ga_mul(b, a)));
    }
}

TEST_CASE("inversion through the regular representation") {
    Fq F2 = make_field(2, 1);
    Group c5 = Group::cyclic(5);
    auto inv_x = ga_invert(ga_basis(F2, c5, 1));
    REQUIRE(inv_x.has_value());
    CHECK(*inv_x == ga_basis(F2, c5, 4));

    auto inv_one = ga_invert(ga_one(F2, c5));
    REQUIRE(inv_one.has_value());
    CHECK(*inv_one == ga_one(F2, c5));

    // e_0-like all-ones element is a proper idempotent, hence singular
    GaElem allones(F2, c5, {1, 1, 1, 1, 1});
    CHECK_FALSE(ga_invert(allones).has_value());

    CHECK(ga_weight(allones) == 5);
    CHECK(ga_weight(ga_zero(F2, c5)) == 0);
}
