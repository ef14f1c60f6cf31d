#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "oredet/errors.hpp"
#include "oredet/majorant.hpp"
#include "random_support.hpp"

using namespace oredet;
using oredet::testing::Rng;

namespace {

const OreOp D = OreOp::d();
const OreOp X = OreOp::x();

OreMatrix mat(std::vector<std::vector<OreOp>> rows) { return OreMatrix(rows); }

bool dominated_by(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("assignment examples") {
    WeightMatrix w{{Weight(3), Weight(1)}, {Weight(2), Weight(2)}};
    auto a = max_weight_assignment(w);
    REQUIRE(a);
    CHECK(a->weight == 5);
    CHECK(a->col_of_row == std::vector<std::size_t>{0, 1});

    WeightMatrix forced{{std::nullopt, Weight(0)}, {Weight(-4), Weight(9)}};
    a = max_weight_assignment(forced);
    REQUIRE(a);
    CHECK(a->weight == -4);
    CHECK(a->col_of_row == std::vector<std::size_t>{1, 0});

    WeightMatrix blocked{{Weight(1), std::nullopt}, {Weight(1), std::nullopt}};
    CHECK_FALSE(max_weight_assignment(blocked).has_value());
}

TEST_CASE("property: assignment duals certify optimality") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
        WeightMatrix w(n, std::vector<Weight>(n));
        for (auto& row : w)
            for (auto& e : row)
                if (!testing::chance(rng, 0.25)) e = testing::uniform(rng, -5, 9);
        auto a = max_weight_assignment(w);
        if (!a) continue;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(w[i][a->col_of_row[i]].has_value());
            sum += *w[i][a->col_of_row[i]];
            for (std::size_t j = 0; j < n; ++j)
                if (w[i][j]) CHECK(a->row_pot[i] + a->col_pot[j] >= *w[i][j]);
        }
        CHECK(sum == a->weight);
        std::int64_t pot = 0;
        for (std::size_t i = 0; i < n; ++i) pot += a->row_pot[i] + a->col_pot[i];
        CHECK(pot == a->weight);
    }
}

TEST_CASE("total order examples") {
    CHECK(total_order(mat({{D * D, D}, {D, X}})) == OrderValue(2));
    CHECK(total_order(mat({{D, 1}, {1, D}})) == OrderValue(2));
    CHECK(total_order(mat({{D, 0}, {D * D, 0}})).is_neg_inf());
    CHECK(total_order(mat({{0, D}, {X, 0}})) == OrderValue(1));
    CHECK(tord_bruteforce(mat({{0, D}, {X, 0}})) == OrderValue(1));
    CHECK_THROWS_AS(tord_bruteforce(OreMatrix(9)), PreconditionError);
}

TEST_CASE("optimal majorant examples") {
    // N = (2,1), h = (0,1) is the only optimal majorant with min h = 0.
    Majorant m = optimal_majorant(mat({{D * D, D}, {D, X}}));
    CHECK(m == Majorant{{2, 1}, {0, 1}});
    CHECK(m.to_string() == "N=(2,1), h=(0,1)");
    // diag(d, d): (1,1;0,0) and (2,1;1,0) are both optimal; the least h wins.
    CHECK(optimal_majorant(mat({{D, 0}, {0, D}})) == Majorant{{1, 1}, {0, 0}});
    CHECK(optimal_majorant(mat({{D, 1}, {1, D}})) == Majorant{{1, 1}, {0, 0}});
    CHECK_THROWS_AS(optimal_majorant(mat({{D, 0}, {D, 0}})), PreconditionError);
}

TEST_CASE("majorant validity and shifts") {
    OreMatrix a = mat({{D * D, D}, {D, X}});
    CHECK(is_majorant(a, Majorant{{2, 1}, {0, 1}}));
    CHECK(is_majorant(a, Majorant{{3, 3}, {0, 0}}));
    CHECK_FALSE(is_majorant(a, Majorant{{1, 1}, {0, 0}}));
    CHECK_THROWS_AS(is_majorant(a, Majorant{{1}, {0, 0}}), std::invalid_argument);
    CHECK(Majorant{{2, 1}, {0, 1}}.shifted(3) == Majorant{{5, 4}, {3, 4}});
}

TEST_CASE("characteristic matrices") {
    OreMatrix a = mat({{D * D, D}, {D, X}});
    CharMatrix cm = characteristic_matrix(a, Majorant{{2, 1}, {0, 1}});
    CHECK(cm.C == KMatrix{{RatFunc(1), RatFunc(1)}, {RatFunc(1), RatFunc::x()}});
    CHECK(cm.total_power == 2);
    CharDet cd = char_det(a, Majorant{{2, 1}, {0, 1}});
    CHECK(cd.coeff == RatFunc(Poly::x() - 1));
    CHECK(cd.power == 2);

    // Degenerate: leading matrix [[1,1],[1,1]].
    CHECK(char_det(mat({{D, D}, {D, D + 1}}), Majorant{{1, 1}, {0, 0}}).coeff.is_zero());
    CHECK_THROWS_AS(characteristic_matrix(a, Majorant{{1, 1}, {0, 0}}), PreconditionError);
}

TEST_CASE("degeneracy degree") {
    CHECK(degeneracy_degree(mat({{D, 1}, {1, D}})) == OrderValue(0));
    CHECK(degeneracy_degree(mat({{D, D}, {D, D + 1}})) == OrderValue(1));
    CHECK(degeneracy_degree(mat({{D * D, D}, {D, X}})) == OrderValue(0));
    CHECK_THROWS_AS(degeneracy_degree(mat({{D, D}, {D, D}})), ZeroDeterminant);
}

TEST_CASE("perturbed majorants") {
    Majorant opt{{2, 1}, {0, 1}};
    auto ps = perturbed_majorants(opt);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == Majorant{{3, 1}, {0, 1}});
    CHECK(ps[1] == Majorant{{2, 2}, {0, 1}});
}

TEST_CASE("property: total order matches brute force") {
    Rng rng(32);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
        OreMatrix a = testing::random_ore_matrix(rng, n, 3, 0, 0.35);
        CHECK(total_order(a) == tord_bruteforce(a));
    }
}

TEST_CASE("property: optimal majorant is the least optimal one") {
    Rng rng(33);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        OreMatrix a = testing::random_ore_matrix(rng, n, 2, 0, 0.3);
        if (total_order(a).is_neg_inf()) {
            CHECK_THROWS_AS(optimal_majorant(a), PreconditionError);
            continue;
        }
        Majorant opt = optimal_majorant(a);
        CHECK(is_majorant(a, opt));
        CHECK(opt.weight() == tord_bruteforce(a).value());
        CHECK(*std::min_element(opt.h.begin(), opt.h.end()) == 0);

        auto all = testing::enumerate_optimal_majorants(a, 4);
        CHECK(std::find(all.begin(), all.end(), opt) != all.end());
        for (const auto& other : all) CHECK(dominated_by(opt.h, other.h));

        for (std::int64_t k : {1, 3}) {
            Majorant s = opt.shifted(k);
            CHECK(is_majorant(a, s));
            CHECK(s.weight() == opt.weight());
        }
    }
}

TEST_CASE("property: char_det agrees with cofactor expansion") {
    Rng rng(34);
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
        OreMatrix a = testing::random_ore_matrix(rng, n, 2, 2, 0.2, true);
        if (total_order(a).is_neg_inf()) continue;
        Majorant opt = optimal_majorant(a);
        std::vector<Majorant> ms{opt};
        for (auto& p : perturbed_majorants(opt)) ms.push_back(p);
        for (const auto& maj : ms) {
            CharMatrix cm = characteristic_matrix(a, maj);
            CharDet cd = char_det(a, maj);
            CHECK(cd.coeff == testing::cofactor_det(cm.C));
            if (n <= 3) CHECK(cd.coeff == testing::permutation_det(cm.C));
            CHECK(cd.power == maj.weight());
        }
    }
}

TEST_CASE("property: characteristic-matrix theorem clauses") {
    Rng rng(35);
    int checked = 0;
    for (int t = 0; checked < 80 && t < 400; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        OreMatrix a = testing::random_ore_matrix(rng, n, 2, 1, 0.2);
        DieudonneDet det = dieudonne_det(a);
        if (det.is_zero()) {
            CHECK_THROWS_AS(check_char_theorem(a, {}), ZeroDeterminant);
            continue;
        }
        ++checked;
        Majorant opt = optimal_majorant(a);
        CharTheoremReport rep = check_char_theorem(a, perturbed_majorants(opt));
        CHECK(rep.passed());
        CHECK(rep.dd >= 0);
        CHECK(rep.optimal.weight() == rep.tord.value());
        if (rep.dd == 0) {
            CharDet cd = char_det(a, opt);
            CHECK(cd.coeff == det.det1);
            CHECK(OrderValue(cd.power) == det.d);
        }
    }
    CHECK(checked >= 80);
}
