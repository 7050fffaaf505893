#include <doctest.h>

#include "qgc/field.hpp"
#include "qgc/rng.hpp"
#include "qgc/splitting.hpp"

using namespace qgc;

namespace {

// trial-division irreducibility, independent of the Frobenius-gcd test
bool irreducible_by_trial_division(const Fq& F, const Poly& f) {
    int d = poly_deg(f);
    if (d <= 0) return false;
    if (f[0] == 0 && d > 1) return false;
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::vector<Fel> digits(dd, 0);
        while (true) {
            Poly g(digits.begin(), digits.end());
            g.push_back(1);
            if (poly_divmod(F, f, g).second.empty()) return false;
            std::size_t i = 0;
            for (; i < digits.size(); ++i) {
                if (++digits[i] < F.q) break;
                digits[i] = 0;
            }
            if (i == digits.size()) break;
        }
    }
    return true;
}

std::vector<std::size_t> coset_sizes(std::uint32_t n, std::uint64_t q) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> sizes;
    for (std::uint32_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::size_t len = 0;
        std::uint64_t c = a;
        do {
            seen[c] = true;
            ++len;
            c = c * (q % n) % n;
        } while (c != a);
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("make_field picks the smallest irreducible modulus") {
    Fq f2 = make_field(2, 1);
    CHECK(f2.modulus.empty());
    CHECK(f2.q == 2);

    Fq f4 = make_field(2, 2);
    CHECK(f4.modulus == std::vector<Fel>{1, 1, 1});  // X^2 + X + 1

    Fq f8 = make_field(2, 3);
    CHECK(f8.modulus == std::vector<Fel>{1, 1, 0, 1});  // X^3 + X + 1

    // the chosen moduli must be irreducible by trial division too
    Fq base(2);
    CHECK(irreducible_by_trial_division(base, {1, 1, 1}));
    CHECK(irreducible_by_trial_division(base, {1, 1, 0, 1}));
    // and nothing smaller in value order qualifies for degree 3
    for (Fel v = 0; v < 3; ++v) {
        Poly cand{static_cast<Fel>(v & 1), static_cast<Fel>((v >> 1) & 1), 0, 1};
        CHECK_FALSE(irreducible_by_trial_division(base, cand));
    }

    CHECK_THROWS_AS(make_field(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 21), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    Fq f8 = make_field(2, 3);
    CHECK(f8.inv(1) == 1);
    // x * x^2 = x + 1 after reduction by X^3 + X + 1
    CHECK(f8.mul(2, 4) == 3);

    RngStream rng = RngStream::substream(7, 0);
    for (const Fq& F : {make_field(2, 3), make_field(3, 2), make_field(5, 1), make_field(7, 1)}) {
        for (int it = 0; it < 50; ++it) {
            Fel a = rng.below(static_cast<Fel>(F.q));
            Fel b = rng.below(static_cast<Fel>(F.q));
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.mul(a, b) == F.mul(b, a));
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            // Frobenius is additive in characteristic p
            CHECK(F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p)));
        }
    }
    CHECK_THROWS_AS(f8.inv(0), std::domain_error);
}

TEST_CASE("field literals and element strings") {
    Fq f9 = parse_field("3^2");
    CHECK(f9.q == 9);
    CHECK(field_literal(f9) == "3^2");
    Fel e = f9.parse("12");
    CHECK(f9.to_string(e) == "12");
    CHECK(f9.digits(e) == std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("factoring X^n - 1 via q-cosets") {
    Fq f2 = make_field(2, 1);
    auto fs1 = factor_xn_minus_1(f2, 1);
    REQUIRE(fs1.size() == 1);
    CHECK(fs1[0] == Poly{1, 1});  // X + 1 over F_2

    auto fs7 = factor_xn_minus_1(f2, 7);
    std::vector<std::size_t> degs;
    for (const auto& f : fs7) degs.push_back(poly_deg(f));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<std::size_t>{1, 3, 3});
    CHECK(degs == coset_sizes(7, 2));

    Fq f3 = make_field(3, 1);
    auto fs4 = factor_xn_minus_1(f3, 4);
    degs.clear();
    for (const auto& f : fs4) degs.push_back(poly_deg(f));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<std::size_t>{1, 1, 2});
    CHECK(degs == coset_sizes(4, 3));

    // factors multiply back to X^n - 1 and are irreducible by trial division
    for (std::uint32_t n : {1u, 7u}) {
        auto fs = factor_xn_minus_1(f2, n);
        Poly prod{1};
        for (const auto& f : fs) {
            prod = poly_mul(f2, prod, f);
            CHECK(irreducible_by_trial_division(f2, f));
        }
        Poly expect(n + 1, 0);
        expect[0] = f2.neg(1);
        expect[n] = 1;
        CHECK(prod == expect);
    }

    // deterministic factor order: degree first, then coefficient value
    CHECK(fs7[0] == Poly{1, 1});
    CHECK(fs7[1] == Poly{1, 1, 0, 1});  // X^3 + X + 1 before X^3 + X^2 + 1
    CHECK(fs7[2] == Poly{1, 0, 1, 1});

    CHECK_THROWS_AS(factor_xn_minus_1(f2, 4), std::invalid_argument);
}

TEST_CASE("factoring over an extension field") {
    Fq f4 = make_field(2, 2);
    auto fs5 = factor_xn_minus_1(f4, 5);
    std::vector<std::size_t> degs;
    for (const auto& f : fs5) degs.push_back(poly_deg(f));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == coset_sizes(5, 4));
    Poly prod{1};
    for (const auto& f : fs5) prod = poly_mul(f4, prod, f);
    Poly expect(6, 0);
    expect[0] = f4.neg(1);
    expect[5] = 1;
    CHECK(prod == expect);
}
