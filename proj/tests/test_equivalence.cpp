#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "rankforge/equivalence.hpp"

using namespace rankforge;
using namespace testing;

namespace {

Isometry random_isometry(const FieldCtx* c, std::mt19937_64& rng) {
    auto rand_invertible = [&]() {
        while (true) {
            std::vector<std::uint32_t> v(c->n());
            for (auto& z : v) z = std::uint32_t(rng() % c->card());
            LinearizedPoly f(c, v);
            if (f.rank_at_least(c->n())) return f;
        }
    };
    return Isometry{rand_invertible(), rand_invertible(), 0};
}

}  // namespace

TEST_CASE("isometries preserve code structure") {
    auto c = ctx34();
    auto G2 = gabidulin(c.get(), 2);
    Isometry id{LinearizedPoly::identity(c.get()), LinearizedPoly::identity(c.get()), 0};
    CHECK(apply_isometry(G2, id).sets_equal(G2));
    std::mt19937_64 rng(3);
    // monomial pairs fix Gabidulin codes
    for (int t = 0; t < 10; ++t) {
        std::uint32_t a = std::uint32_t(1 + rng() % 80), b = std::uint32_t(1 + rng() % 80);
        Isometry iso{LinearizedPoly::monomial(c.get(), c->pow(c->alpha(), a), 0),
                     LinearizedPoly::monomial(c.get(), c->pow(c->alpha(), b), 0), 0};
        CHECK(apply_isometry(G2, iso).sets_equal(G2));
    }
    // rank distribution invariance at (3,3)
    auto c33 = ctx(3, 1, 3);
    auto code = gabidulin(c33.get(), 2);
    auto base = code.rank_distribution().counts;
    std::mt19937_64 rng2(17);
    for (int t = 0; t < 20; ++t) {
        auto img = apply_isometry(code, random_isometry(c33.get(), rng2));
        CHECK(img.rank_distribution().counts == base);
        CHECK(img.min_distance() == code.min_distance());
        CHECK(img.is_mrd().mrd == code.is_mrd().mrd);
    }
    // singular factor rejected
    Isometry bad{LinearizedPoly::monomial(c.get(), 1, 0) - LinearizedPoly::monomial(c.get(), 1, 0),
                 LinearizedPoly::identity(c.get()), 0};
    CHECK_THROWS_AS(apply_isometry(G2, bad), Error);
}

TEST_CASE("idealisers of the worked examples") {
    auto c = ctx34();
    auto G2 = gabidulin(c.get(), 2);
    auto li = left_idealiser(G2);
    CHECK(li.cardinality() == 81);
    // equals { gamma x } as a set
    for (std::uint32_t g = 0; g < 81; ++g) CHECK(li.contains(LinearizedPoly::monomial(c.get(), g, 0)));
    auto H0 = twisted(c.get(), TwistSpec{2, 1, c->alpha(), 0});
    auto ri = right_idealiser(H0);
    CHECK(ri.cardinality() == 9);
    // equals { beta x : beta^{q^2} = beta }
    for (std::uint32_t b = 0; b < 81; ++b)
        if (c->frobenius_q(b, 2) == b) CHECK(ri.contains(LinearizedPoly::monomial(c.get(), b, 0)));
    auto full = gabidulin(c.get(), 4);
    CHECK(left_idealiser(full).fp_dim() == 16);
    // the distinguisher of the inequivalence theorem: 81 vs 9
    CHECK(right_idealiser(G2).cardinality() == 81);
    CHECK(right_idealiser(H0).cardinality() == 9);
}

TEST_CASE("idealiser sizes are isometry invariants") {
    auto c = ctx34();
    std::mt19937_64 rng(29);
    for (auto code : {gabidulin(c.get(), 2), twisted(c.get(), TwistSpec{2, 1, c->alpha(), 0})}) {
        auto l0 = left_idealiser(code).fp_dim(), r0 = right_idealiser(code).fp_dim();
        for (int t = 0; t < 20; ++t) {
            auto img = apply_isometry(code, random_isometry(c.get(), rng));
            CHECK(left_idealiser(img).fp_dim() == l0);
            CHECK(right_idealiser(img).fp_dim() == r0);
        }
    }
}

TEST_CASE("predicted automorphism group of Gabidulin codes") {
    auto c = ctx34();
    auto g = predicted_aut_gabidulin(c.get(), 2);
    CHECK(g.order() == 25600);  // (q^n-1)^2 * n * e
    CHECK(verify_aut(gabidulin(c.get(), 2), g));
    CHECK(g.verify_closure());
    auto c23 = ctx(2, 1, 3);
    auto g23 = predicted_aut_gabidulin(c23.get(), 1);
    CHECK(g23.order() == 147);
    CHECK(g23.verify_closure());  // full 147^2 product table
    CHECK(verify_aut(gabidulin(c23.get(), 1), g23));
}

TEST_CASE("predicted automorphism group of twisted codes") {
    auto c = ctx34();
    auto a = c->alpha();
    for (int h = 0; h < 4; ++h) {
        auto g = predicted_aut_twisted(c.get(), TwistSpec{2, 1, a, h});
        CHECK(g.order() < 25600);  // strictly smaller than the Gabidulin group
        CHECK(verify_aut(twisted(c.get(), TwistSpec{2, 1, a, h}), g));
        CHECK(g.verify_closure());
    }
    // h = 0: contains the Singer cycle (a x, x)
    auto g0 = predicted_aut_twisted(c.get(), TwistSpec{2, 1, a, 0});
    for (long long da = 0; da < 80; ++da) CHECK(g0.contains({da, 0, 0}));
    // h = k: contains the Singer cycle (x, b x)
    auto gk = predicted_aut_twisted(c.get(), TwistSpec{2, 1, a, 2});
    for (long long db = 0; db < 80; ++db) CHECK(gk.contains({0, db, 0}));
    CHECK_THROWS_AS(predicted_aut_twisted(c.get(), TwistSpec{2, 1, 0, 1}), Error);  // EtaZero
}

TEST_CASE("brute-force automorphism scan at (2,3)") {
    auto c = ctx(2, 1, 3);
    auto G1 = gabidulin(c.get(), 1);
    auto brute = brute_force_aut(G1);
    CHECK(brute.order == 147);
    // exactly the predicted 147 elements, as polynomial pairs
    auto predicted = predicted_aut_gabidulin(c.get(), 1);
    std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> brute_set, pred_set;
    for (const auto& el : brute.elements) {
        CHECK(el.rho == 0);
        brute_set.insert({el.a.coeffs(), el.b.coeffs()});
    }
    for (const auto& t : predicted.elements) {
        auto A = LinearizedPoly::monomial(c.get(), c->pow(c->alpha(), t[0]), int(t[2]));
        auto B = LinearizedPoly::monomial(c.get(), c->pow(c->alpha(), t[1]), int((3 - t[2]) % 3));
        pred_set.insert({A.coeffs(), B.coeffs()});
    }
    CHECK(brute_set == pred_set);
    // the full space is fixed by every pair; extended rho multiplies by ne
    auto full = gabidulin(c.get(), 3);
    CHECK(brute_force_aut(full).order == 168ull * 168);
    CHECK(brute_force_aut(full, true).order == 168ull * 168 * 3);
    // the zero code too
    CHECK(brute_force_aut(RankMetricCode::make(c.get(), 1, {}), false).order == 168ull * 168);
    // infeasible sizes refuse
    auto big = ctx34();
    CHECK_THROWS_AS(brute_force_aut(gabidulin(big.get(), 2)), Error);
}

TEST_CASE("twisted equivalence criterion") {
    auto c = ctx34();
    auto a = c->alpha();
    auto self = twisted_equivalent(c.get(), 2, TwistSpec{2, 1, a, 1}, TwistSpec{2, 1, a, 1});
    CHECK(self.equivalent);
    CHECK(self.verified);
    // different twist index h: never equivalent
    auto diff = twisted_equivalent(c.get(), 2, TwistSpec{2, 1, a, 1}, TwistSpec{2, 1, a, 2});
    CHECK(!diff.equivalent);
    // construct nu from the parameter equation with a = b = alpha, i = 0:
    // nu = alpha^{1-q} (alpha^{q^2-q}) alpha = alpha^{2 - 2q + q^2} = alpha^5
    auto made = twisted_equivalent(c.get(), 2, TwistSpec{2, 1, a, 1}, TwistSpec{2, 1, c->pow(a, 5), 1});
    CHECK(made.equivalent);
    CHECK(made.verified);
    CHECK_THROWS_AS(twisted_equivalent(c.get(), 2, TwistSpec{2, 1, 0, 1}, TwistSpec{2, 1, a, 1}), Error);
}

TEST_CASE("Gabidulin subspace search") {
    auto c = ctx34();
    auto G2 = gabidulin(c.get(), 2);
    // inside G_k, only the code itself is equivalent to G_k
    auto self = gabidulin_subspaces(G2, 2);
    REQUIRE(self.size() == 1);
    CHECK(self[0].sets_equal(G2));
    // inside H_2(alpha,1), G_1 o x^q appears among the embedded copies of G_1
    auto H = twisted(c.get(), TwistSpec{2, 1, c->alpha(), 1});
    auto G1q = gabidulin(c.get(), 1).compose_right(LinearizedPoly::monomial(c.get(), 1, 1));
    for (const auto& b : G1q.basis()) CHECK(H.contains(b));  // direct containment oracle
    auto subs = gabidulin_subspaces(H, 1);
    bool found = false;
    for (const auto& s : subs)
        if (s.sets_equal(G1q)) found = true;
    CHECK(found);
}
