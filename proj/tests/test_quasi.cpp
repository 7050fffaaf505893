#include <doctest.h>

#include <set>

#include "qgc/quasi.hpp"

using namespace qgc;

namespace {

std::set<Word> codeword_set(const LinearCode& C) {
    std::set<Word> s{Word(C.length(), 0)};
    if (C.dim() > 0) C.for_each_nonzero_codeword([&](const Word& w) { s.insert(w); });
    return s;
}

GaElem from_coeffs(const Fq& F, const Group& G, Word w) { return GaElem(F, G, std::move(w)); }

}  // namespace

TEST_CASE("quasi code basics") {
    Fq F2 = make_field(2, 1);
    Group c3 = Group::cyclic(3);

    QuasiMatrix A(F2, c3, 1, 1);
    A.at(0, 0) = ga_one(F2, c3);
    LinearCode C = quasi_code(A);
    CHECK(C.length() == 3);
    CHECK(C.dim() == 3);
    CHECK(C.rate() == std::pair<std::uint64_t, std::uint64_t>{1, 1});

    // A = (1, x): codewords are (b, b x)
    QuasiMatrix A2(F2, c3, 1, 2);
    A2.at(0, 0) = ga_one(F2, c3);
    A2.at(0, 1) = ga_basis(F2, c3, 1);
    LinearCode C2 = quasi_code(A2);
    CHECK(C2.length() == 6);
    CHECK(C2.dim() == 3);
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        GaElem b(F2, c3, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1});
        Word w = b.c;
        Word right = ga_mul(b, ga_basis(F2, c3, 1)).c;
        w.insert(w.end(), right.begin(), right.end());
        CHECK(C2.contains(w));
    }
}

TEST_CASE("quasi code equals the brute-force module image") {
    Fq F2 = make_field(2, 1);
    Group c3 = Group::cyclic(3);
    RngStream rng = RngStream::substream(5, 0);
    for (int it = 0; it < 5; ++it) {
        QuasiMatrix A = sample_quasi_matrix(F2, c3, 2, 2, rng);
        LinearCode C = quasi_code(A);
        std::set<Word> image;
        for (std::uint32_t m = 0; m < 64; ++m) {  // all b in (F_2 C_3)^2
            GaElem b1(F2, c3, {m & 1, (m >> 1) & 1, (m >> 2) & 1});
            GaElem b2(F2, c3, {(m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1});
            Word w;
            for (std::size_t j = 0; j < 2; ++j) {
                GaElem s = ga_add(ga_mul(b1, A.at(0, j)), ga_mul(b2, A.at(1, j)));
                w.insert(w.end(), s.c.begin(), s.c.end());
            }
            image.insert(w);
        }
        CHECK(codeword_set(C) == image);
    }
}

TEST_CASE("trivial coindex group reduces to random linear codes") {
    Fq F2 = make_field(2, 1);
    Group triv = Group::abelian({});
    RngStream r1 = RngStream::substream(99, 0), r2 = RngStream::substream(99, 0);
    QuasiMatrix A = sample_quasi_matrix(F2, triv, 2, 6, r1);
    LinearCode quasi = quasi_code(A);
    LinearCode lin = random_linear_code(F2, 6, 2, r2);
    CHECK(same_row_space(quasi.basis(), lin.basis()));

    // fixed seed reproduces the same code
    RngStream r3 = RngStream::substream(42, 0);
    LinearCode first = random_linear_code(F2, 6, 2, r3);
    RngStream r4 = RngStream::substream(42, 0);
    LinearCode second = random_linear_code(F2, 6, 2, r4);
    CHECK(first.generators() == second.generators());
}

TEST_CASE("componentwise full rank") {
    Fq F2 = make_field(2, 1);
    Group c3 = Group::cyclic(3);
    Decomposition dec = primitive_idempotents(F2, c3);

    QuasiMatrix zero_row(F2, c3, 1, 2);
    CHECK_FALSE(full_rank(zero_row, dec));

    QuasiMatrix unit(F2, c3, 1, 2);
    unit.at(0, 0) = ga_one(F2, c3);
    CHECK(full_rank(unit, dec));

    QuasiMatrix tall(F2, c3, 2, 1);
    CHECK_THROWS_AS(full_rank(tall, dec), std::invalid_argument);

    // empirical frequency respects the product lower bound
    RngStream rng = RngStream::substream(17, 0);
    int hits = 0, trials = 400;
    for (int it = 0; it < trials; ++it) {
        QuasiMatrix A = sample_quasi_matrix(F2, c3, 1, 2, rng);
        if (full_rank(A, dec)) ++hits;
    }
    double bound = 1.0;
    for (auto d : dec.dims) bound *= 1.0 - std::pow(2.0, -static_cast<double>(d));
    double se = std::sqrt(bound * (1 - bound) / trials);
    CHECK(static_cast<double>(hits) / trials >= bound - 4 * se);

    // full rank forces dim C_A = n k
    for (int it = 0; it < 50; ++it) {
        QuasiMatrix A = sample_quasi_matrix(F2, c3, 1, 2, rng);
        LinearCode C = quasi_code(A);
        CHECK(full_rank(A, dec) == (C.dim() == 3));
    }
}

TEST_CASE("first-moment identity, exhaustively on tiny ensembles") {
    Fq F2 = make_field(2, 1);
    Group c3 = Group::cyclic(3);
    // k = 1, t = 1: average X_b over all 8 one-entry matrices A
    GaElem b = ga_one(F2, c3);  // a unit, so I_b = F G
    double delta = 1.0 / 3.0;
    int count = 0;
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        GaElem a(F2, c3, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1});
        int w = ga_weight(ga_mul(b, a));
        if (w > 0 && w <= 1) ++count;
    }
    double exact = (ball_size(2, 3, delta).to_ldouble() - 1) / 8.0;
    CHECK(static_cast<double>(count) / 8.0 == doctest::Approx(exact));

    // k = 1, t = 2: all 64 matrices
    count = 0;
    for (std::uint32_t m = 0; m < 64; ++m) {
        GaElem a1(F2, c3, {m & 1, (m >> 1) & 1, (m >> 2) & 1});
        GaElem a2(F2, c3, {(m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1});
        int w = ga_weight(ga_mul(b, a1)) + ga_weight(ga_mul(b, a2));
        if (w > 0 && w <= 2) ++count;  // delta = 1/3 of length 6
    }
    exact = (ball_size(2, 6, delta).to_ldouble() - 1) / 64.0;
    CHECK(static_cast<double>(count) / 64.0 == doctest::Approx(exact));
}

TEST_CASE("index-2 codes and annihilators") {
    Fq F2 = make_field(2, 1);
    Group c7 = Group::cyclic(7);
    Decomposition dec = primitive_idempotents(F2, c7);
    RngStream rng = RngStream::substream(13, 0);

    GaElem b = sample_ga(F2, c7, rng);
    auto [ann1, d1] = annihilator(ga_one(F2, c7), b);
    CHECK(d1 == 0);
    LinearCode C1 = index2_code(ga_one(F2, c7), b);
    CHECK(C1.dim() == 7);

    auto [ann0, d0] = annihilator(ga_zero(F2, c7), ga_zero(F2, c7));
    CHECK(d0 == 7);

    auto [annE, dE] = annihilator(dec.idem[0], dec.idem[0]);
    CHECK(dE == 6);
    LinearCode CE = index2_code(dec.idem[0], dec.idem[0]);
    CHECK(CE.dim() == 1);

    // dim C_{a,b} = n - dim Ann(a,b) on random pairs
    for (int it = 0; it < 20; ++it) {
        GaElem a = sample_ga(F2, c7, rng), a2 = sample_ga(F2, c7, rng);
        auto [ann, dim_ann] = annihilator(a, a2);
        CHECK(index2_code(a, a2).dim() == 7 - dim_ann);
    }
}

TEST_CASE("fractional-index embedding") {
    Fq F2 = make_field(2, 1);
    Group c3 = Group::cyclic(3);
    Group c6 = Group::cyclic(6);
    Group c9 = Group::cyclic(9);

    GaElem one = ga_one(F2, c3);
    GaElem img1 = fractional_phi(one, 1, c3);
    CHECK(img1 == one);

    GaElem img2 = fractional_phi(one, 2, c6);
    CHECK(img2.c == Word{1, 0, 0, 1, 0, 0});  // 1 + x~^3
    CHECK(ga_weight(img2) == 2);

    CHECK(ga_weight(fractional_phi(ga_zero(F2, c3), 2, c6)) == 0);

    RngStream rng = RngStream::substream(29, 0);
    for (int it = 0; it < 20; ++it) {
        GaElem a = sample_ga(F2, c3, rng);
        GaElem im = fractional_phi(a, 3, c9);
        CHECK(ga_weight(im) == 3 * ga_weight(a));
        // module property: phi(x o a) = x~ phi(a)
        CHECK(fractional_phi(ga_translate(a, 1), 3, c9) == ga_translate(im, 1));
        // injectivity on nonzero input
        if (!a.is_zero()) CHECK_FALSE(im.is_zero());
    }
}

TEST_CASE("fractional-index codes") {
    Fq F2 = make_field(2, 1);
    Group c3 = Group::cyclic(3);
    Group c6 = Group::cyclic(6);
    RngStream rng = RngStream::substream(31, 0);

    // alpha = 1: literally C_{a,a'}
    for (int it = 0; it < 5; ++it) {
        GaElem a = sample_ga(F2, c3, rng), a2 = sample_ga(F2, c3, rng);
        LinearCode frac = fractional_code(a, a2, 1, c3);
        LinearCode idx2 = index2_code(a, a2);
        CHECK(same_row_space(frac.basis(), idx2.basis()));
    }

    // the worked (q, n, alpha) = (2, 3, 2) point with a = 1, a' = x
    LinearCode C = fractional_code(ga_one(F2, c3), ga_basis(F2, c3, 1), 2, c6);
    CHECK(C.length() == 9);
    CHECK(C.dim() == 3);
    CHECK(C.rate() == std::pair<std::uint64_t, std::uint64_t>{1, 3});

    // rate and distance relations against the exhaustive index-2 values
    for (unsigned alpha : {2u, 3u}) {
        Group big = Group::cyclic(alpha * 3);
        for (int it = 0; it < 10; ++it) {
            GaElem a = sample_ga(F2, c3, rng), a2 = sample_ga(F2, c3, rng);
            LinearCode base = index2_code(a, a2);
            LinearCode frac = fractional_code(a, a2, alpha, big);
            CHECK(frac.dim() == base.dim());  // Phi injective
            if (base.dim() == 0) continue;
            double ratio = 2.0 / (alpha + 1.0);
            CHECK(static_cast<double>(frac.dim()) / frac.length() ==
                  doctest::Approx(ratio * base.dim() / base.length()));
            double d_base = static_cast<double>(base.min_weight()) / base.length();
            double d_frac = static_cast<double>(frac.min_weight()) / frac.length();
            CHECK(d_frac >= ratio * d_base - 1e-12);
        }
    }
}
