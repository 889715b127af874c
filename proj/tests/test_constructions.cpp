#include <doctest.h>

#include "helpers.hpp"

using namespace rankforge;
using namespace testing;

TEST_CASE("Gabidulin codes") {
    auto c = ctx34();
    auto full = gabidulin(c.get(), 4);
    CHECK(full.fp_dim() == 16);  // the whole of L_n
    auto c25 = ctx(2, 1, 5);
    auto G = gabidulin(c25.get(), 2, 2);
    CHECK(G.dim() == 10);
    auto rep = G.attached_verdict();
    REQUIRE(rep.has_value());
    CHECK(rep->mrd);
    CHECK(rep->d == 4);
    // chain property
    for (int k = 1; k < 4; ++k) {
        auto Gk = gabidulin(c.get(), k);
        auto Gk1 = gabidulin(c.get(), k + 1);
        for (const auto& b : Gk.basis()) CHECK(Gk1.contains(b));
        CHECK(Gk.dim() == 4 * k);
    }
    CHECK_THROWS_AS(gabidulin(c.get(), 0), Error);
    CHECK_THROWS_AS(gabidulin(c.get(), 5), Error);
    CHECK_THROWS_AS(gabidulin(c.get(), 2, 2), Error);  // gcd(2,4) != 1
}

TEST_CASE("eta admissibility") {
    auto c = ctx34();
    CHECK(admissible_eta(c.get(), 2, c->alpha()));  // N(alpha) = 2 != 1
    CHECK(admissible_eta(c.get(), 2, 0));
    CHECK(!admissible_eta(c.get(), 2, c->pow(c->alpha(), 2)));  // N(alpha^2) = 1
    // q = 2: the norm is identically 1 on nonzero elements, nothing admissible
    auto c2 = ctx(2, 1, 4);
    for (std::uint32_t eta = 1; eta < 16; ++eta) {
        CHECK(c2->norm(eta) == 1);  // oracle: exhaustive norm table
        CHECK(!admissible_eta(c2.get(), 2, eta));
    }
    // odd nk flips the target sign: at (3,3), k=1 wants N != -1
    auto c33 = ctx(3, 1, 3);
    CHECK(c33->norm(c33->alpha()) == 2);
    CHECK(!admissible_eta(c33.get(), 1, c33->alpha()));
    CHECK(admissible_eta(c33.get(), 1, c33->pow(c33->alpha(), 2)));
}

TEST_CASE("twisted Gabidulin codes") {
    auto c = ctx34();
    auto a = c->alpha();
    auto H = twisted(c.get(), TwistSpec{2, 1, a, 1});
    CHECK(H.dim() == 8);
    REQUIRE(H.attached_verdict().has_value());
    CHECK(H.attached_verdict()->mrd);
    CHECK(H.attached_verdict()->d == 3);
    // the set is exactly { a x + b x^q + alpha a^q x^{q^2} }
    for (const auto& w : H.codewords()) {
        CHECK(w.coeff(3) == 0);
        CHECK(w.coeff(2) == c->mul(a, c->frobenius_q(w.coeff(0), 1)));
    }
    // eta = 0 degenerates to the Gabidulin code
    CHECK(twisted(c.get(), TwistSpec{2, 1, 0, 1}).sets_equal(gabidulin(c.get(), 2)));
    // inadmissible eta over q = 2
    auto c2 = ctx(2, 1, 4);
    CHECK_THROWS_AS(twisted(c2.get(), TwistSpec{2, 1, 3, 1}), Error);
    CHECK_THROWS_AS(twisted(c.get(), TwistSpec{0, 1, a, 1}), Error);
    CHECK_THROWS_AS(twisted(c.get(), TwistSpec{4, 1, a, 1}), Error);
    CHECK_THROWS_AS(twisted(c.get(), TwistSpec{2, 2, a, 1}), Error);
}

TEST_CASE("twisted codes sit between Gabidulin codes") {
    auto c = ctx34();
    auto a = c->alpha();
    for (int h = 0; h < 4; ++h) {
        auto H = twisted(c.get(), TwistSpec{2, 1, a, h});
        auto G3 = gabidulin(c.get(), 3);
        for (const auto& b : H.basis()) CHECK(G3.contains(b));
        // G_{k-1} o x^q inside H_k
        auto G1q = gabidulin(c.get(), 1).compose_right(LinearizedPoly::monomial(c.get(), 1, 1));
        for (const auto& b : G1q.basis()) CHECK(H.contains(b));
    }
}

TEST_CASE("Singer-cycle closures of twisted codes") {
    auto c = ctx34();
    auto a = c->alpha();
    auto ax = LinearizedPoly::monomial(c.get(), a, 0);
    // h = 0: closed under left composition with alpha x (F_{q^n}-linear)
    auto H0 = twisted(c.get(), TwistSpec{2, 1, a, 0});
    for (const auto& b : H0.basis()) CHECK(H0.contains(ax.compose(b)));
    // h = k: closed under right composition with beta x
    auto Hk = twisted(c.get(), TwistSpec{2, 1, a, 2});
    for (const auto& b : Hk.basis()) CHECK(Hk.contains(b.compose(ax)));
    // h = 1 is neither
    auto H1 = twisted(c.get(), TwistSpec{2, 1, a, 1});
    bool left = true, right = true;
    for (const auto& b : H1.basis()) {
        left = left && H1.contains(ax.compose(b));
        right = right && H1.contains(b.compose(ax));
    }
    CHECK(!left);
    CHECK(!right);
}

TEST_CASE("stride-s twisted codes") {
    auto c25 = ctx(2, 1, 5);
    // q = 2 admits no twist, but stride still works through eta = 0
    auto G = twisted(c25.get(), TwistSpec{2, 2, 0, 1});
    CHECK(G.sets_equal(gabidulin(c25.get(), 2, 2)));
    auto c33 = ctx(3, 1, 3);
    auto eta = c33->pow(c33->alpha(), 2);  // admissible for k = 1
    auto H = twisted(c33.get(), TwistSpec{1, 2, eta, 1});
    REQUIRE(H.attached_verdict().has_value());
    CHECK(H.attached_verdict()->mrd);
    CHECK(H.attached_verdict()->d == 3);
    // support lives on the stride lattice {0, s}
    for (const auto& b : H.basis()) {
        CHECK(b.coeff(1) == 0);
        CHECK(b.coeff(2) == c33->mul(eta, c33->frobenius_q(b.coeff(0), 2)));
    }
}

TEST_CASE("general two-functional family") {
    auto c = ctx34();
    auto a = c->alpha();
    auto x = LinearizedPoly::identity(c.get());
    // (x, eta x^{q^h}) reproduces the twisted code
    FunctionalPair pair{x, LinearizedPoly::monomial(c.get(), a, 1)};
    auto Hgen = general_twisted(c.get(), 2, pair);
    CHECK(Hgen.sets_equal(twisted(c.get(), TwistSpec{2, 1, a, 1})));
    // (x, 0) removes the twist
    FunctionalPair gab{x, LinearizedPoly::zero(c.get())};
    CHECK(general_twisted(c.get(), 2, gab).sets_equal(gabidulin(c.get(), 2)));
    // (x, x) is inadmissible with witness x = 1
    FunctionalPair bad{x, x};
    auto w = pair_admissibility_witness(c.get(), 2, bad);
    REQUIRE(w.has_value());
    CHECK(*w == 1);
    CHECK_THROWS_AS(general_twisted(c.get(), 2, bad), Error);
}
