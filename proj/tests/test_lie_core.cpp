#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "argshift/errors.hpp"
#include "argshift/io.hpp"
#include "argshift/lie_algebra.hpp"
#include "test_util.hpp"

using namespace argshift;
using testutil::corpus_algebra;
using testutil::point;

TEST_CASE("validate accepts the corpus algebras") {
    for (const char* name : {"abelian3", "heisenberg3", "so3", "aff1", "ooms8", "nilp7_155"}) {
        const LieAlgebra alg = corpus_algebra(name);
        CAPTURE(name);
        CHECK(validate(alg).empty());
    }
}

TEST_CASE("validate reports a jacobi violation with its witness") {
    // Heisenberg corrupted with [x1,x3] = x1.
    LieAlgebra::StructureMap structure;
    structure[{0, 1, 2}] = 1;
    structure[{0, 2, 0}] = 1;
    const LieAlgebra bad(3, {}, structure);
    const auto violations = validate(bad);
    REQUIRE(!violations.empty());
    const auto& v = violations.front();
    CHECK(v.i == 0);
    CHECK(v.j == 1);
    CHECK(v.k == 2);
    CHECK(v.m == 2);
    CHECK(v.residual == Rat(-1));
}

TEST_CASE("malformed structure files are input errors, not jacobi failures") {
    SUBCASE("index out of range") {
        std::istringstream in("dim 3\n1 4 2 1\n");
        CHECK_THROWS_AS(parse_algebra(in, "mem"), InputError);
    }
    SUBCASE("i >= j") {
        std::istringstream in("dim 3\n2 2 1 1\n");
        CHECK_THROWS_AS(parse_algebra(in, "mem"), InputError);
    }
    SUBCASE("duplicate bracket line") {
        std::istringstream in("dim 3\n1 2 3 1\n1 2 3 2\n");
        CHECK_THROWS_AS(parse_algebra(in, "mem"), InputError);
    }
    SUBCASE("missing dim") {
        std::istringstream in("1 2 3 1\n");
        CHECK_THROWS_AS(parse_algebra(in, "mem"), InputError);
    }
}

TEST_CASE("poisson matrix") {
    SUBCASE("abelian gives the zero matrix") {
        const LieAlgebra alg = corpus_algebra("abelian3");
        Rng rng(7);
        CHECK(poisson_matrix(alg, testutil::random_point(alg, rng)).is_zero());
    }
    SUBCASE("so3 at e3*") {
        const LieAlgebra alg = corpus_algebra("so3");
        const Mat m = poisson_matrix(alg, point({0, 0, 1}));
        CHECK(m.at(0, 1) == Rat(1));
        CHECK(m.at(1, 0) == Rat(-1));
        CHECK(m.at(1, 2) == Rat(0));
        CHECK(m.at(2, 0) == Rat(0));
        CHECK(m.is_skew());
    }
    SUBCASE("ooms8 at e7* has a 2-dimensional kernel") {
        const LieAlgebra alg = corpus_algebra("ooms8");
        const Mat m = poisson_matrix(alg, point({0, 0, 0, 0, 0, 0, 0, 1}));
        CHECK(alg.dim() - rank(m) == 2);
    }
    SUBCASE("linearity and skewness at random points") {
        Rng rng(11);
        for (const char* name : {"so3", "ooms8", "nilp7_155"}) {
            const LieAlgebra alg = corpus_algebra(name);
            for (int t = 0; t < 5; ++t) {
                const DualPoint y1 = testutil::random_point(alg, rng);
                const DualPoint y2 = testutil::random_point(alg, rng);
                DualPoint sum;
                for (int i = 0; i < alg.dim(); ++i)
                    sum.coords.push_back(y1.coords[static_cast<size_t>(i)] + y2.coords[static_cast<size_t>(i)]);
                const Mat m1 = poisson_matrix(alg, y1);
                const Mat m2 = poisson_matrix(alg, y2);
                const Mat ms = poisson_matrix(alg, sum);
                CHECK(m1.is_skew());
                for (int i = 0; i < alg.dim(); ++i)
                    for (int j = 0; j < alg.dim(); ++j) CHECK(ms.at(i, j) == m1.at(i, j) + m2.at(i, j));
            }
        }
    }
    SUBCASE("rank is even everywhere sampled") {
        Rng rng(13);
        for (const char* name : {"heisenberg3", "so3", "aff1", "ooms8", "nilp7_155"}) {
            const LieAlgebra alg = corpus_algebra(name);
            for (int t = 0; t < 8; ++t)
                CHECK(rank(poisson_matrix(alg, testutil::random_point(alg, rng))) % 2 == 0);
        }
    }
}

TEST_CASE("coadjoint action") {
    SUBCASE("abelian acts by zero") {
        const LieAlgebra alg = corpus_algebra("abelian3");
        Rng rng(3);
        const auto xi = testutil::random_point(alg, rng).coords;
        const auto out = coadjoint(alg, xi, testutil::random_point(alg, rng));
        for (const auto& c : out) CHECK(c == 0);
    }
    SUBCASE("so3: ad*_{e3} x = (x2, -x1, 0)") {
        const LieAlgebra alg = corpus_algebra("so3");
        const std::vector<Rat> xi{0, 0, 1};
        const DualPoint x = point({3, 5, 7});
        const auto out = coadjoint(alg, xi, x);
        CHECK(out[0] == Rat(5));
        CHECK(out[1] == Rat(-3));
        CHECK(out[2] == Rat(0));
    }
    SUBCASE("annihilator elements act by zero on their point") {
        const LieAlgebra alg = corpus_algebra("ooms8");
        const DualPoint a = point({0, 0, 0, 0, 0, 0, 0, 1});
        // basis vector labeled x3
        std::vector<Rat> xi(8, Rat(0));
        xi[static_cast<size_t>(alg.label_index("x3"))] = 1;
        for (const auto& c : coadjoint(alg, xi, a)) CHECK(c == 0);
    }
    SUBCASE("coadjoint(xi, a) vanishes exactly on Ann(a)") {
        Rng rng(17);
        for (const char* name : {"so3", "ooms8", "nilp7_155"}) {
            const LieAlgebra alg = corpus_algebra(name);
            const DualPoint a = testutil::random_point(alg, rng);
            const Mat ann = annihilator(alg, a);
            for (int t = 0; t < 6; ++t) {
                const auto xi = testutil::random_point(alg, rng, 9).coords;
                const auto image = coadjoint(alg, xi, a);
                bool zero = true;
                for (const auto& c : image) zero = zero && c == 0;
                CHECK(zero == in_row_space(ann, xi));
            }
        }
    }
    SUBCASE("center of heisenberg acts by zero everywhere") {
        const LieAlgebra alg = corpus_algebra("heisenberg3");
        Rng rng(5);
        const std::vector<Rat> e3{0, 0, 1};
        const std::vector<Rat> e1{1, 0, 0};
        bool e1_nontrivial = false;
        for (int t = 0; t < 6; ++t) {
            const DualPoint y = testutil::random_point(alg, rng);
            for (const auto& c : coadjoint(alg, e3, y)) CHECK(c == 0);
            for (const auto& c : coadjoint(alg, e1, y)) e1_nontrivial = e1_nontrivial || c != 0;
        }
        CHECK(e1_nontrivial);
    }
}

TEST_CASE("annihilator bases") {
    SUBCASE("abelian: the full space, for any point") {
        const LieAlgebra alg = corpus_algebra("abelian3");
        CHECK(annihilator(alg, point({1, 2, 3})) == Mat::identity(3));
        CHECK(annihilator(alg, point({0, 0, 0})) == Mat::identity(3));
    }
    SUBCASE("ooms8 at e7*: span{x3, x4}") {
        const LieAlgebra alg = corpus_algebra("ooms8");
        const Mat ann = annihilator(alg, point({0, 0, 0, 0, 0, 0, 0, 1}));
        REQUIRE(ann.rows() == 2);
        Mat expected(2, 8);
        expected.at(0, 3) = 1; // x3 sits at position 3 of the x0..x7 basis
        expected.at(1, 4) = 1;
        CHECK(ann == expected);
    }
    SUBCASE("nilp7 at e5*: span{x5, x6, x7}") {
        const LieAlgebra alg = corpus_algebra("nilp7_155");
        const Mat ann = annihilator(alg, point({0, 0, 0, 0, 1, 0, 0}));
        REQUIRE(ann.rows() == 3);
        Mat expected(3, 7);
        expected.at(0, 4) = 1;
        expected.at(1, 5) = 1;
        expected.at(2, 6) = 1;
        CHECK(ann == expected);
    }
    SUBCASE("independent of scaling") {
        Rng rng(23);
        for (const char* name : {"so3", "ooms8", "nilp7_155"}) {
            const LieAlgebra alg = corpus_algebra(name);
            const DualPoint a = testutil::random_point(alg, rng);
            const Rat c(rng.uniform(1, 40));
            DualPoint scaled;
            for (const auto& v : a.coords) scaled.coords.push_back(c * v);
            CHECK(annihilator(alg, a) == annihilator(alg, scaled));
        }
    }
    SUBCASE("zero point gives the full space") {
        const LieAlgebra alg = corpus_algebra("ooms8");
        CHECK(annihilator(alg, point({0, 0, 0, 0, 0, 0, 0, 0})) == Mat::identity(8));
    }
}

TEST_CASE("index estimates") {
    CHECK(estimate_index(corpus_algebra("abelian3")).index == 3);
    CHECK(estimate_index(corpus_algebra("heisenberg3")).index == 1);
    CHECK(estimate_index(corpus_algebra("so3")).index == 1);
    CHECK(estimate_index(corpus_algebra("aff1")).index == 0);
    CHECK(estimate_index(corpus_algebra("ooms8")).index == 2);
    CHECK(estimate_index(corpus_algebra("nilp7_155")).index == 3);

    SUBCASE("the witness point is regular and n - ind is even") {
        for (const char* name : {"abelian3", "heisenberg3", "so3", "aff1", "ooms8", "nilp7_155"}) {
            const LieAlgebra alg = corpus_algebra(name);
            const IndexEstimate est = estimate_index(alg);
            CHECK(is_regular(alg, est.witness, est.index));
            CHECK((alg.dim() - est.index) % 2 == 0);
        }
    }
}

TEST_CASE("regularity membership") {
    const LieAlgebra alg = corpus_algebra("ooms8");
    const int ind = estimate_index(alg).index;
    CHECK(is_regular(alg, point({0, 0, 0, 0, 0, 0, 0, 1}), ind));
    // the singular locus: x5 = x6 = x7 = 0
    CHECK(!is_regular(alg, point({1, -2, 3, 4, 5, 0, 0, 0}), ind));
    const LieAlgebra ab = corpus_algebra("abelian3");
    CHECK(is_regular(ab, point({4, 0, -1}), estimate_index(ab).index));
}
