#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "argshift/errors.hpp"
#include "argshift/formal_invariant.hpp"
#include "test_util.hpp"

using namespace argshift;
using testutil::corpus_algebra;
using testutil::parse;
using testutil::point;

namespace {

mpz_class binom(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

TEST_CASE("next_term on the abelian algebra is zero") {
    const LieAlgebra alg = corpus_algebra("abelian3");
    const DualPoint a = point({1, 2, 3});
    CHECK(next_term(alg, a, parse(alg, "x1"), 2).is_zero());
    CHECK(next_term(alg, a, parse(alg, "x1*x3 - x2^2"), 3).is_zero());
}

TEST_CASE("so3 chain from x3 at e3*") {
    const LieAlgebra alg = corpus_algebra("so3");
    const DualPoint a = point({0, 0, 1});
    const Poly f2 = next_term(alg, a, parse(alg, "x3"), 2);
    CHECK(f2 == parse(alg, "1/2*x1^2 + 1/2*x2^2"));
    const Poly f3 = next_term(alg, a, f2, 3);
    CHECK(f3 == parse(alg, "-1/2*x1^2*x3 - 1/2*x2^2*x3"));
}

TEST_CASE("ooms8 basis to order three") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
    const InvariantBasis basis = build_basis(alg, a, 3, 2);
    REQUIRE(basis.size() == 2);
    CHECK(basis.members[0].term(1) == parse(alg, "x3"));
    CHECK(basis.members[0].term(2) == parse(alg, "13/7*x3*x7 - x4*x6 - 1/2*x5^2"));
    CHECK(basis.members[0].term(3) ==
          parse(alg, "39/49*x3*x7^2 - 6/7*x4*x6*x7 - 3/7*x5^2*x7 + x5*x6^2"));
    CHECK(basis.members[1].term(1) == parse(alg, "x4"));
    CHECK(basis.members[1].term(2) == parse(alg, "8/7*x4*x7 - x5*x6"));
    CHECK(basis.members[1].term(3) == parse(alg, "4/49*x4*x7^2 - 1/7*x5*x6*x7 + 1/3*x6^3"));
}

TEST_CASE("heisenberg: the casimir terminates immediately") {
    const LieAlgebra alg = corpus_algebra("heisenberg3");
    const InvariantBasis basis = build_basis(alg, point({0, 0, 1}), 3, 1);
    REQUIRE(basis.size() == 1);
    CHECK(basis.members[0].term(1) == parse(alg, "x3"));
    CHECK(basis.members[0].term(2).is_zero());
    CHECK(basis.members[0].term(3).is_zero());
}

TEST_CASE("nilp7 basis linear terms at e5*") {
    const LieAlgebra alg = corpus_algebra("nilp7_155");
    const InvariantBasis basis = build_basis(alg, point({0, 0, 0, 0, 1, 0, 0}), 1, 3);
    REQUIRE(basis.size() == 3);
    CHECK(basis.members[0].term(1) == parse(alg, "x5"));
    CHECK(basis.members[1].term(1) == parse(alg, "x6"));
    CHECK(basis.members[2].term(1) == parse(alg, "x7"));
}

TEST_CASE("a seed outside Ann(a) breaks the recursion") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(next_term(alg, a, parse(alg, "x5"), 2), RecursionBrokenError);
    CHECK_THROWS_AS(next_term(alg, a, parse(alg, "x0"), 2), RecursionBrokenError);
}

TEST_CASE("singular base points are refused") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    CHECK_THROWS_AS(build_basis(alg, point({1, -2, 3, 4, 5, 0, 0, 0}), 2, 2), SingularPointError);
}

TEST_CASE("check_formal_invariant") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
    const InvariantBasis basis = build_basis(alg, a, 3, 2);
    SUBCASE("accepts build output at every level") {
        for (const auto& member : basis.members) CHECK(!check_formal_invariant(alg, a, member));
    }
    SUBCASE("accepts x3 alone at order one") {
        TruncatedFormalInvariant inv{a, 1, {parse(alg, "x3")}};
        CHECK(!check_formal_invariant(alg, a, inv));
    }
    SUBCASE("rejects a tampered level two") {
        TruncatedFormalInvariant inv = basis.members[0];
        inv.terms[1] = parse(alg, "x4*x6");
        const auto level = check_formal_invariant(alg, a, inv);
        REQUIRE(level.has_value());
        CHECK(*level == 2);
    }
    SUBCASE("rejects a non-annihilator linear term at level one") {
        TruncatedFormalInvariant inv{a, 1, {parse(alg, "x5")}};
        const auto level = check_formal_invariant(alg, a, inv);
        REQUIRE(level.has_value());
        CHECK(*level == 1);
    }
}

TEST_CASE("express_in_basis") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
    const InvariantBasis basis = build_basis(alg, a, 3, 2);
    const std::vector<std::string> symbols{"F1", "F2"};

    SUBCASE("a basis member expands to its own symbol") {
        const auto p = express_in_basis(alg, basis.members[0], basis);
        CHECK(p[0] == parse_poly("F1", symbols));
        CHECK(p[1].is_zero());
        CHECK(p[2].is_zero());
    }
    SUBCASE("a product expands to the product of symbols") {
        const TruncatedFormalInvariant prod = truncated_product(basis.members[0], basis.members[1], 3);
        const auto p = express_in_basis(alg, prod, basis);
        CHECK(p[0].is_zero());
        CHECK(p[1] == parse_poly("F1*F2", symbols));
        CHECK(p[2].is_zero());
    }
    SUBCASE("taylor series of a linear invariant expands to one symbol") {
        const LieAlgebra nilp = corpus_algebra("nilp7_155");
        const DualPoint b = point({0, 0, 0, 0, 1, 0, 0});
        const InvariantBasis nbasis = build_basis(nilp, b, 2, 3);
        const auto comps = taylor_components(parse(nilp, "x7"), b);
        TruncatedFormalInvariant series{b, 2, {comps[1], Poly(7)}};
        const auto p = express_in_basis(nilp, series, nbasis);
        CHECK(p[0] == parse_poly("F3", std::vector<std::string>{"F1", "F2", "F3"}));
        CHECK(p[1].is_zero());
    }
    SUBCASE("rejects input whose lowest term is not made of annihilator forms") {
        TruncatedFormalInvariant bad{a, 1, {parse(alg, "x5")}};
        CHECK_THROWS_AS(express_in_basis(alg, bad, basis), RecursionBrokenError);
    }
}

TEST_CASE("closure under sums and products") {
    for (const char* name : {"so3", "ooms8"}) {
        const LieAlgebra alg = corpus_algebra(name);
        const IndexEstimate est = estimate_index(alg);
        const DualPoint a = name == std::string("so3") ? point({0, 0, 1}) : point({0, 0, 0, 0, 0, 0, 0, 1});
        const int order = 4;
        const InvariantBasis basis = build_basis(alg, a, order, est.index);
        for (int i = 0; i < basis.size(); ++i)
            for (int j = i; j < basis.size(); ++j) {
                CAPTURE(name);
                CHECK(!check_formal_invariant(
                    alg, a, truncated_product(basis.members[static_cast<size_t>(i)],
                                              basis.members[static_cast<size_t>(j)], order)));
                CHECK(!check_formal_invariant(
                    alg, a, truncated_sum(basis.members[static_cast<size_t>(i)],
                                          basis.members[static_cast<size_t>(j)], order)));
            }
    }
}

TEST_CASE("rebuilding is bit-identical") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
    const InvariantBasis b1 = build_basis(alg, a, 3, 2);
    const InvariantBasis b2 = build_basis(alg, a, 3, 2);
    REQUIRE(b1.size() == b2.size());
    for (int i = 0; i < b1.size(); ++i)
        for (int k = 1; k <= 3; ++k)
            CHECK(b1.members[static_cast<size_t>(i)].term(k) == b2.members[static_cast<size_t>(i)].term(k));
}

TEST_CASE("level-one solutions are exactly Ann(a)") {
    for (const char* name : {"so3", "ooms8", "nilp7_155"}) {
        const LieAlgebra alg = corpus_algebra(name);
        const IndexEstimate est = estimate_index(alg);
        const DualPoint a = est.witness;
        CAPTURE(name);
        CHECK(invariant_equation_kernel_dim(alg, a, 1) == est.index);
    }
}

TEST_CASE("homogeneous solution spaces match polynomials in the annihilator forms") {
    // the solution space of the level-k homogeneous constraint has dimension
    // C(s+k-1, k): every solution is a polynomial in the s annihilator forms
    struct Case {
        const char* name;
        std::vector<long> a;
        int s;
    };
    const Case cases[] = {
        {"so3", {0, 0, 1}, 1},
        {"ooms8", {0, 0, 0, 0, 0, 0, 0, 1}, 2},
        {"nilp7_155", {0, 0, 0, 0, 1, 0, 0}, 3},
    };
    for (const auto& c : cases) {
        const LieAlgebra alg = corpus_algebra(c.name);
        DualPoint a;
        for (long v : c.a) a.coords.emplace_back(v);
        for (int k = 2; k <= 3; ++k) {
            CAPTURE(c.name);
            CAPTURE(k);
            CHECK(invariant_equation_kernel_dim(alg, a, k) ==
                  binom(static_cast<unsigned>(c.s + k - 1), static_cast<unsigned>(k)).get_si());
        }
    }
}

TEST_CASE("normalized terms avoid pure annihilator monomials") {
    struct Case {
        const char* name;
        std::vector<long> a;
        std::vector<int> pivots; // 0-based coordinates spanning Ann(a)
    };
    const Case cases[] = {
        {"so3", {0, 0, 1}, {2}},
        {"ooms8", {0, 0, 0, 0, 0, 0, 0, 1}, {3, 4}},
        {"nilp7_155", {0, 0, 0, 0, 1, 0, 0}, {4, 5, 6}},
    };
    for (const auto& c : cases) {
        const LieAlgebra alg = corpus_algebra(c.name);
        DualPoint a;
        for (long v : c.a) a.coords.emplace_back(v);
        const InvariantBasis basis = build_basis(alg, a, 3, estimate_index(alg).index);
        for (const auto& member : basis.members)
            for (int k = 2; k <= 3; ++k)
                for (const auto& [mon, coeff] : member.term(k).terms()) {
                    bool pure = true;
                    for (int v = 0; v < alg.dim(); ++v) {
                        if (mon.exp[static_cast<size_t>(v)] == 0) continue;
                        if (std::find(c.pivots.begin(), c.pivots.end(), v) == c.pivots.end()) pure = false;
                    }
                    CAPTURE(c.name);
                    CHECK(!pure);
                }
    }
}
