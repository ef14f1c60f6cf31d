#include <doctest.h>

#include "oredet/cdsk.hpp"
#include "oredet/errors.hpp"
#include "oredet/generator.hpp"
#include "random_support.hpp"

using namespace oredet;

namespace {

const OreOp D = OreOp::d();
const OreOp X = OreOp::x();
const Poly PX = Poly::x();

OreMatrix mat(std::vector<std::vector<OreOp>> rows) { return OreMatrix(rows); }

RatFunc rf(long c) { return RatFunc(c); }

}  // namespace

TEST_CASE("padding to a uniform majorant") {
    OreMatrix a = mat({{D * D, D}, {D, X}});
    UniformForm u = pad_to_uniform(a, Majorant{{2, 1}, {0, 1}});
    CHECK(u.N == 2);
    CHECK(u.h == 0);
    CHECK(u.col_pads == std::vector<std::int64_t>{0, 1});
    CHECK(u.row_pads == std::vector<std::int64_t>{0, 1});
    // d * x * d = x d^2 + d
    CHECK(u.Mp == mat({{D * D, D * D}, {D * D, X * D * D + D}}));
    CHECK(u.majorant() == Majorant{{2, 2}, {0, 0}});

    LeadingSplit s = leading_split(u);
    CHECK(s.A == KMatrix{{rf(1), rf(1)}, {rf(1), RatFunc::x()}});
    CHECK(s.B == KMatrix{{rf(0), rf(0)}, {rf(0), rf(1)}});

    CHECK_THROWS_AS(pad_to_uniform(a, Majorant{{3, 1}, {0, 1}}), PreconditionError);
}

TEST_CASE("kernel relations") {
    RelationVector r = kernel_relation(KMatrix{{rf(1), rf(1)}, {rf(1), rf(1)}});
    CHECK(r.c == std::vector<Poly>{Poly(1), Poly(-1)});
    CHECK(r.pivot == 0);

    // row 1 = x * row 2
    RelationVector r2 = kernel_relation(KMatrix{{RatFunc::x(), RatFunc(PX * PX)}, {rf(1), RatFunc::x()}});
    CHECK(r2.c == std::vector<Poly>{Poly(1), -PX});

    // First row is zero: the relation is carried by row 1 alone.
    RelationVector r3 = kernel_relation(KMatrix{{rf(0), rf(0)}, {rf(1), rf(2)}});
    CHECK(r3.c == std::vector<Poly>{Poly(1), Poly()});

    // Relation with a rational-function coefficient, cleared to Q[x].
    RelationVector r4 = kernel_relation(KMatrix{{rf(1), RatFunc::x(), rf(0)},
                                                {RatFunc(PX + 1), RatFunc(PX * PX + PX), rf(0)},
                                                {rf(0), rf(1), rf(1)}});
    CHECK(r4.c == std::vector<Poly>{PX + 1, Poly(-1), Poly()});

    CHECK_THROWS_AS(kernel_relation(KMatrix{{rf(1), rf(0)}, {rf(0), rf(1)}}), NoKernel);
}

TEST_CASE("worked example end to end") {
    OreMatrix m = mat({{D, D}, {D, D + 1}});
    Dd1Certificate c = cdsk_reduce(m);
    CHECK(c.tord == 2);
    CHECK(c.det == DieudonneDet{rf(1), 1});
    CHECK(c.majorant == Majorant{{1, 1}, {0, 0}});
    CHECK(c.uniform.Mp == m);
    CHECK(c.split.A == KMatrix{{rf(1), rf(1)}, {rf(1), rf(1)}});
    CHECK(c.split.B == KMatrix{{rf(0), rf(0)}, {rf(0), rf(1)}});
    CHECK(c.relation.c == std::vector<Poly>{Poly(1), Poly(-1)});
    CHECK(c.swap_sign == 1);
    // row 0 <- row 0 - row 1 = (0, -1)
    CHECK(c.m2 == mat({{0, -1}, {D, D + 1}}));
    CHECK(c.m2_majorant == Majorant{{1, 1}, {1, 0}});
    CHECK(c.m2_char == KMatrix{{rf(0), rf(-1)}, {rf(1), rf(1)}});
    CHECK(c.summands == std::vector<Poly>{Poly(), Poly(1)});
    CHECK(c.char_det == Poly(1));
    CHECK(c.D == Poly(1));
    CHECK(verify_certificate(c).empty());
}

TEST_CASE("pivot row swap") {
    // Rows 2 and 3 of the leading matrix coincide, so the relation skips row 1.
    OreMatrix m = mat({{D, 0, 0}, {0, D, D}, {0, D, D + 1}});
    Dd1Certificate c = cdsk_reduce(m);
    CHECK(c.relation.pivot == 1);
    CHECK(c.swapped_row == 1);
    CHECK(c.swap_sign == -1);
    CHECK(c.c[0] != Poly());
    CHECK(c.D == Poly(1));
    CHECK(verify_certificate(c).empty());
}

TEST_CASE("tampered certificates are rejected") {
    Dd1Certificate c = cdsk_reduce(mat({{D, D}, {D, D + 1}}));
    Dd1Certificate bad = c;
    bad.D = Poly(2);
    CHECK_FALSE(verify_certificate(bad).empty());
    bad = c;
    bad.summands[1] = Poly(3);
    CHECK_FALSE(verify_certificate(bad).empty());
    bad = c;
    bad.c[1] = Poly(1);
    CHECK_FALSE(verify_certificate(bad).empty());
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(cdsk_reduce(mat({{D, 1}, {1, D}})), PreconditionError);  // dd = 0
    CHECK_THROWS_AS(cdsk_reduce(mat({{D, D}, {D, D}})), ZeroDeterminant);
    OreOp inv_x(RatFunc(Poly(1), PX));
    CHECK_THROWS_AS(cdsk_reduce(mat({{inv_x * D, D}, {D, D + 1}})), PreconditionError);
}

TEST_CASE("membership") {
    CHECK(verify_membership(mat({{D, D}, {D, D + 1}})));
    CHECK(verify_membership(mat({{D * D, D}, {D, X}})));
    MembershipReport r = membership_report(mat({{D, D}, {D, D + 1}}));
    CHECK(r.dd == 1);
    CHECK(r.in_subring);
    CHECK(membership_report(mat({{X * D, X * D}, {D, D + 1}})).det.det1 == RatFunc::x());
    CHECK_THROWS_AS(membership_report(mat({{D, D}, {D, D}})), ZeroDeterminant);
}

TEST_CASE("property: generated dd = 1 instances certify") {
    int certified = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorConfig cfg;
        cfg.n = 2 + seed % 2;
        cfg.max_ord = 2;
        cfg.max_deg = 1 + seed % 2;
        cfg.seed = seed;
        cfg.target = Target::dd1;
        GeneratedInstance g = random_matrix(cfg);
        REQUIRE(g.dd == std::optional<std::int64_t>(1));
        Dd1Certificate c = cdsk_reduce(g.matrix);
        CHECK(verify_certificate(c).empty());
        CHECK(RatFunc(c.D) == c.det.det1);
        CHECK(c.char_det == c.c[0] * c.D * Rational(c.swap_sign));
        for (std::size_t i = 0; i < c.summands.size(); ++i) CHECK(c.summand_quotients[i] * c.c[0] == c.summands[i]);
        ++certified;
    }
    CHECK(certified == 40);
}
