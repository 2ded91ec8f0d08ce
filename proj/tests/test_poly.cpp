#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "argshift/errors.hpp"
#include "argshift/poly.hpp"
#include "test_util.hpp"

using namespace argshift;
using testutil::corpus_algebra;
using testutil::parse;
using testutil::point;

TEST_CASE("ring arithmetic") {
    const LieAlgebra alg = corpus_algebra("so3");
    Rng rng(41);
    SUBCASE("identities") {
        for (int t = 0; t < 10; ++t) {
            const Poly p = testutil::random_poly(3, 3, rng);
            CHECK(p + Poly(3) == p);
            CHECK(p * Poly::constant(3, Rat(1)) == p);
            CHECK(p - p == Poly(3));
        }
    }
    SUBCASE("(x1+x2)^2") {
        const Poly sum = parse(alg, "x1 + x2");
        CHECK(sum * sum == parse(alg, "x1^2 + 2*x1*x2 + x2^2"));
    }
    SUBCASE("product picks up the -13/7 coefficient") {
        const LieAlgebra ooms = corpus_algebra("ooms8");
        const Poly f2 = parse(ooms, "-13/7*x3*x7 + x4*x6 + 1/2*x5^2");
        const Poly prod = f2 * parse(ooms, "x7");
        Monomial m{std::vector<std::uint32_t>(8, 0)};
        m.exp[3] = 1; // x3
        m.exp[7] = 2; // x7^2
        CHECK(prod.coefficient(m) == Rat(-13, 7));
    }
    SUBCASE("variable-count mismatch is an input error") {
        CHECK_THROWS_AS(Poly::variable(3, 0) + Poly::variable(2, 0), InputError);
    }
}

TEST_CASE("differential") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    SUBCASE("linear coordinate") {
        const auto d = parse(alg, "x3").differential();
        for (int i = 0; i < 8; ++i)
            CHECK(d[static_cast<size_t>(i)] == (i == 3 ? Poly::constant(8, Rat(1)) : Poly(8)));
    }
    SUBCASE("1/2 x5^2") {
        const auto d = parse(alg, "1/2*x5^2").differential();
        CHECK(d[5] == parse(alg, "x5"));
        CHECK(d[4].is_zero());
    }
    SUBCASE("component x6 of the cubic term") {
        const Poly h3 = parse(alg, "4/49*x4*x7^2 - 1/7*x5*x6*x7 + 1/3*x6^3");
        CHECK(h3.derivative(alg.label_index("x6")) == parse(alg, "-1/7*x5*x7 + x6^2"));
    }
}

TEST_CASE("poisson bracket") {
    SUBCASE("coordinates reproduce structure constants") {
        for (const char* name : {"so3", "ooms8", "nilp7_155"}) {
            const LieAlgebra alg = corpus_algebra(name);
            for (int i = 0; i < alg.dim(); ++i)
                for (int j = 0; j < alg.dim(); ++j) {
                    Poly expected(alg.dim());
                    for (int k = 0; k < alg.dim(); ++k)
                        expected += Poly::variable(alg.dim(), k).scaled(alg.c(i, j, k));
                    CHECK(poisson_bracket(alg, Poly::variable(alg.dim(), i), Poly::variable(alg.dim(), j)) ==
                          expected);
                }
        }
    }
    SUBCASE("so3 casimir commutes with every coordinate") {
        const LieAlgebra alg = corpus_algebra("so3");
        const Poly casimir = parse(alg, "x1^2 + x2^2 + x3^2");
        for (int i = 0; i < 3; ++i)
            CHECK(poisson_bracket(alg, casimir, Poly::variable(3, i)).is_zero());
    }
    SUBCASE("nilp7 quadratic invariant commutes with every coordinate") {
        const LieAlgebra alg = corpus_algebra("nilp7_155");
        const Poly f = parse(alg, "x6^2 - 2*x5*x7");
        for (int i = 0; i < 7; ++i)
            CHECK(poisson_bracket(alg, f, Poly::variable(7, i)).is_zero());
    }
    SUBCASE("bilinear, antisymmetric, leibniz, jacobi on random polynomials") {
        Rng rng(53);
        for (const char* name : {"heisenberg3", "so3"}) {
            const LieAlgebra alg = corpus_algebra(name);
            const int n = alg.dim();
            for (int t = 0; t < 6; ++t) {
                const Poly p = testutil::random_poly(n, 2, rng);
                const Poly q = testutil::random_poly(n, 2, rng);
                const Poly r = testutil::random_poly(n, 2, rng);
                CHECK(poisson_bracket(alg, p, q) == -poisson_bracket(alg, q, p));
                CHECK(poisson_bracket(alg, p * q, r) ==
                      p * poisson_bracket(alg, q, r) + poisson_bracket(alg, p, r) * q);
                const Poly jac = poisson_bracket(alg, p, poisson_bracket(alg, q, r)) +
                                 poisson_bracket(alg, q, poisson_bracket(alg, r, p)) +
                                 poisson_bracket(alg, r, poisson_bracket(alg, p, q));
                CHECK(jac.is_zero());
            }
        }
    }
}

TEST_CASE("frozen bracket") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    Rng rng(59);
    SUBCASE("a = 0 kills everything") {
        const DualPoint zero = point({0, 0, 0, 0, 0, 0, 0, 0});
        const Poly p = testutil::random_poly(8, 2, rng);
        const Poly q = testutil::random_poly(8, 2, rng);
        CHECK(frozen_bracket(alg, zero, p, q).is_zero());
    }
    SUBCASE("linear arguments give the constant pairing") {
        const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                Rat expected = 0;
                for (int k = 0; k < 8; ++k) expected += alg.c(i, j, k) * a.coords[static_cast<size_t>(k)];
                const Poly br = frozen_bracket(alg, a, Poly::variable(8, i), Poly::variable(8, j));
                CHECK(br == Poly::constant(8, expected));
            }
    }
    SUBCASE("{x3, x4}_a vanishes: both lie in Ann(a)") {
        const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
        CHECK(frozen_bracket(alg, a, parse(alg, "x3"), parse(alg, "x4")).is_zero());
    }
    SUBCASE("matches the A_a pairing of gradients at random points") {
        const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
        const Mat aa = poisson_matrix(alg, a);
        for (int t = 0; t < 5; ++t) {
            const Poly p = testutil::random_poly(8, 2, rng);
            const Poly q = testutil::random_poly(8, 2, rng);
            const Poly br = frozen_bracket(alg, a, p, q);
            const DualPoint x0 = testutil::random_point(alg, rng);
            const auto gp = p.gradient_at(x0.coords);
            const auto gq = q.gradient_at(x0.coords);
            Rat pairing = 0;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) pairing += gp[static_cast<size_t>(i)] * aa.at(i, j) * gq[static_cast<size_t>(j)];
            CHECK(br.eval(x0.coords) == pairing);
        }
    }
}

TEST_CASE("taylor components") {
    const LieAlgebra nilp = corpus_algebra("nilp7_155");
    SUBCASE("homogeneous at a = 0") {
        const Poly p = parse(nilp, "x6^2 - 2*x5*x7");
        const auto comps = taylor_components(p, point({0, 0, 0, 0, 0, 0, 0}));
        CHECK(comps[0].is_zero());
        CHECK(comps[1].is_zero());
        CHECK(comps[2] == p);
    }
    SUBCASE("binomial example") {
        const LieAlgebra ab = corpus_algebra("abelian3");
        const auto comps = taylor_components(parse(ab, "x1^2"), point({1, 0, 0}));
        CHECK(comps[0] == Poly::constant(3, Rat(1)));
        CHECK(comps[1] == parse(ab, "2*x1"));
        CHECK(comps[2] == parse(ab, "x1^2"));
    }
    SUBCASE("linear function at e5*") {
        const auto comps = taylor_components(parse(nilp, "x7"), point({0, 0, 0, 0, 1, 0, 0}));
        CHECK(comps[0].is_zero());
        CHECK(comps[1] == parse(nilp, "x7"));
    }
    SUBCASE("components reassemble the polynomial") {
        Rng rng(61);
        for (int t = 0; t < 6; ++t) {
            const Poly p = testutil::random_poly(3, 3, rng);
            const DualPoint a = testutil::random_point(corpus_algebra("abelian3"), rng, 5);
            const auto comps = taylor_components(p, a);
            for (int pt = 0; pt < 4; ++pt) {
                const DualPoint x0 = testutil::random_point(corpus_algebra("abelian3"), rng, 7);
                std::vector<Rat> shifted;
                for (int i = 0; i < 3; ++i)
                    shifted.push_back(a.coords[static_cast<size_t>(i)] + x0.coords[static_cast<size_t>(i)]);
                Rat sum = 0;
                for (const auto& c : comps) sum += c.eval(x0.coords);
                CHECK(sum == p.eval(shifted));
            }
        }
    }
}

TEST_CASE("shift expansion") {
    const LieAlgebra nilp = corpus_algebra("nilp7_155");
    const DualPoint a = point({0, 0, 0, 0, 1, 0, 0});
    SUBCASE("order zero is the polynomial itself") {
        const Poly g = parse(nilp, "x4*x7 - x5*x6");
        CHECK(shift_expansion(g, a)[0] == g);
    }
    SUBCASE("top coefficient is the value at a") {
        const Poly p = parse(nilp, "x5^3");
        const auto shifts = shift_expansion(p, a);
        CHECK(shifts[3] == Poly::constant(7, p.eval(a.coords)));
    }
    SUBCASE("quadratic invariant: first shift is -2 x7") {
        const auto shifts = shift_expansion(parse(nilp, "x6^2 - 2*x5*x7"), a);
        CHECK(shifts[1] == parse(nilp, "-2*x7"));
    }
    SUBCASE("duality with taylor components for homogeneous inputs") {
        Rng rng(67);
        for (int t = 0; t < 6; ++t) {
            Poly p(7);
            for (const auto& mon : homogeneous_monomials(7, 3))
                if (rng.uniform(0, 3) == 0) p.add_term(mon, Rat(rng.uniform(-4, 4)));
            if (p.is_zero()) continue;
            const DualPoint b = testutil::random_point(nilp, rng, 6);
            const auto shifts = shift_expansion(p, b);
            const auto taylor = taylor_components(p, b);
            for (int m = 0; m <= 3; ++m) CHECK(shifts[static_cast<size_t>(m)] == taylor[static_cast<size_t>(3 - m)]);
        }
    }
}

TEST_CASE("restriction to a line") {
    const LieAlgebra nilp = corpus_algebra("nilp7_155");
    SUBCASE("constants stay constant") {
        const UniPoly u = restrict_to_line(Poly::constant(7, Rat(5)), point({1, 2, 3, 4, 5, 6, 7}),
                                           point({0, 0, 0, 0, 1, 0, 0}));
        CHECK(u.degree() == 0);
        CHECK(u.coeff(0) == Rat(5));
    }
    SUBCASE("a coordinate along its own direction") {
        const LieAlgebra ab = corpus_algebra("abelian3");
        const UniPoly u = restrict_to_line(parse(ab, "x1"), point({0, 0, 0}), point({1, 0, 0}));
        CHECK(u == UniPoly({Rat(0), Rat(1)}));
    }
    SUBCASE("x7 along the e5* direction is constant") {
        const DualPoint x = point({2, -1, 3, 1, 4, 1, 9});
        const UniPoly u = restrict_to_line(parse(nilp, "x7"), x, point({0, 0, 0, 0, 1, 0, 0}));
        CHECK(u.degree() == 0);
        CHECK(u.coeff(0) == Rat(9));
    }
    SUBCASE("multiplicative") {
        Rng rng(71);
        for (int t = 0; t < 8; ++t) {
            const Poly p = testutil::random_poly(3, 2, rng);
            const Poly q = testutil::random_poly(3, 2, rng);
            const DualPoint x = testutil::random_point(corpus_algebra("abelian3"), rng, 9);
            const DualPoint d = testutil::random_point(corpus_algebra("abelian3"), rng, 9);
            CHECK(restrict_to_line(p * q, x, d) == restrict_to_line(p, x, d) * restrict_to_line(q, x, d));
        }
    }
}

TEST_CASE("univariate gcd") {
    const UniPoly l{std::vector<Rat>{Rat(0), Rat(1)}}; // lambda
    const UniPoly one = UniPoly::constant(Rat(1));
    SUBCASE("gcd(l^2-1, l-1) = l-1") {
        const UniPoly u({Rat(-1), Rat(0), Rat(1)});
        const UniPoly v({Rat(-1), Rat(1)});
        CHECK(unipoly_gcd(u, v) == v);
    }
    SUBCASE("gcd with a unit is 1") {
        const UniPoly u({Rat(3), Rat(7), Rat(2)});
        CHECK(unipoly_gcd(u, one) == one);
    }
    SUBCASE("gcd(l^3+l, l^2+1) = l^2+1") {
        const UniPoly u({Rat(0), Rat(1), Rat(0), Rat(1)});
        const UniPoly v({Rat(1), Rat(0), Rat(1)});
        CHECK(unipoly_gcd(u, v) == v);
    }
    SUBCASE("gcd(u, 0) is the monic of u") {
        const UniPoly u({Rat(2), Rat(4)});
        CHECK(unipoly_gcd(u, UniPoly()) == UniPoly({Rat(1, 2), Rat(1)}));
    }
    SUBCASE("gcd(0, 0) is an error") { CHECK_THROWS_AS(unipoly_gcd(UniPoly(), UniPoly()), InputError); }
    SUBCASE("divides both inputs") {
        Rng rng(73);
        for (int t = 0; t < 10; ++t) {
            std::vector<Rat> uc, vc;
            for (int i = 0; i <= 4; ++i) uc.emplace_back(rng.uniform(-5, 5));
            for (int i = 0; i <= 3; ++i) vc.emplace_back(rng.uniform(-5, 5));
            const UniPoly u(uc), v(vc);
            if (u.is_zero() && v.is_zero()) continue;
            const UniPoly g = unipoly_gcd(u, v);
            if (!u.is_zero()) CHECK(unipoly_rem(u, g).is_zero());
            if (!v.is_zero()) CHECK(unipoly_rem(v, g).is_zero());
        }
    }
}

TEST_CASE("text syntax round-trips") {
    const LieAlgebra ooms = corpus_algebra("ooms8");
    SUBCASE("canonical print order is graded lexicographic, leading first") {
        const Poly f2 = parse(ooms, "x4*x6 + 1/2*x5^2 - 13/7*x3*x7");
        CHECK(format_poly(f2, ooms.labels()) == "-13/7*x3*x7 + x4*x6 + 1/2*x5^2");
    }
    SUBCASE("zero formats as 0 and parses back") {
        CHECK(format_poly(Poly(8), ooms.labels()) == "0");
        CHECK(parse(ooms, "0").is_zero());
    }
    SUBCASE("random polynomials survive a round trip") {
        Rng rng(79);
        for (int t = 0; t < 20; ++t) {
            const Poly p = testutil::random_poly(8, 3, rng);
            CHECK(parse_poly(format_poly(p, ooms.labels()), ooms.labels()) == p);
        }
    }
    SUBCASE("parse failures") {
        CHECK_THROWS_AS(parse(ooms, "x9 + 1"), InputError);
        CHECK_THROWS_AS(parse(ooms, "x1^-2"), InputError);
        CHECK_THROWS_AS(parse(ooms, ""), InputError);
        CHECK_THROWS_AS(parse(ooms, "2 +"), InputError);
        CHECK_THROWS_AS(parse(ooms, "1/0"), InputError);
    }
    SUBCASE("unipoly formatting") {
        CHECK(format_unipoly(UniPoly({Rat(-1), Rat(0), Rat(1)}), "lambda") == "lambda^2 - 1");
        CHECK(format_unipoly(UniPoly(), "lambda") == "0");
    }
}
