#include "analysis.hpp"
#include "errors.hpp"
#include "structure.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace cableops;

TEST_CASE("component classification") {
    const auto params = cabling::CableParams::make(2, 3, 13);
    const auto c1 = structure::classify(1, 1, params); // index 4
    CHECK(c1.k == 0);
    CHECK(c1.rem == 4);
    CHECK(c1.form == 'g');
    CHECK(c1.value == 4);
    CHECK(c1.reduced == skein::ReducedIndex{1, 4});

    const auto c2 = structure::classify(3, 1, params); // index 10 > m
    CHECK(c2.form == 'h');
    CHECK(c2.value == 3);

    const auto c3 = structure::classify(4, 1, params); // index 13 vanishes
    CHECK(c3.value == 0);

    const auto c5 = structure::classify(5, 1, params); // index 16 = 13 + 3
    CHECK(c5.k == 1);
    CHECK(c5.form == 'g');
    CHECK(c5.value == 3);
    CHECK(c5.reduced.sign == -1);
}

TEST_CASE("pivot index: pinned values and agreement of both computations") {
    auto pivot = structure::find_pivot(cabling::CableParams::make(2, 3, 13));
    CHECK(pivot.l == 4);
    CHECK(pivot.which == 1);
    pivot = structure::find_pivot(cabling::CableParams::make(1, 2, 9));
    CHECK(pivot.l == 4); // = m
    CHECK(pivot.which == 1);
    pivot = structure::find_pivot(cabling::CableParams::make(2, 1, 9));
    CHECK(pivot.l == 1);
    CHECK(pivot.which == -1);
    pivot = structure::find_pivot(cabling::CableParams::make(2, 5, 13));
    CHECK(pivot.l == 5);
    CHECK(pivot.which == 1);
    // unique for every coprime pair in a wide window
    for (long q = 1; q <= 8; ++q) {
        for (long r = 3; r <= 101; r += 2) {
            if (std::gcd(r, q) != 1) continue;
            CHECK_NOTHROW(structure::find_pivot(cabling::CableParams::make(1, q, r)));
        }
    }
    CHECK_THROWS_AS(structure::find_pivot(cabling::CableParams::make(1, 3, 9)),
                    PreconditionError);
}

TEST_CASE("single-row closed forms, taken literally") {
    CHECK(structure::single_row_formula(3, 6) == std::pair<long, long>{4, 6});
    CHECK(structure::single_row_formula(4, 10) == std::pair<long, long>{1, 3});
    CHECK(structure::single_row_formula(6, 9) == std::pair<long, long>{2, 4});
    CHECK(structure::single_row_formula(5, 8) == std::pair<long, long>{5, 7});
    // the degenerate windings produce out-of-range values
    CHECK(structure::single_row_formula(1, 6) == std::pair<long, long>{5, 7});
    CHECK(structure::single_row_formula(2, 6) == std::pair<long, long>{0, 2});
}

TEST_CASE("adjacent column on the last two rows") {
    const auto rm23 =
        cabling::build_twist_matrix(cabling::CableParams::make(2, 3, 13));
    CHECK(structure::find_adjacent_column(rm23) == 3);
    const auto rm32 =
        cabling::build_twist_matrix(cabling::CableParams::make(3, 2, 11));
    CHECK(structure::find_adjacent_column(rm32) == 4);
    const auto rm21 =
        cabling::build_twist_matrix(cabling::CableParams::make(2, 1, 13));
    CHECK_FALSE(structure::find_adjacent_column(rm21).has_value());
}

TEST_CASE("zero rows: prediction and observation") {
    CHECK(structure::predicted_zero_rows(cabling::CableParams::make(1, 3, 9)) ==
          std::vector<long>{3});
    CHECK(structure::predicted_zero_rows(cabling::CableParams::make(1, 3, 15)) ==
          std::vector<long>{3, 6});
    CHECK_THROWS_AS(structure::predicted_zero_rows(cabling::CableParams::make(2, 3, 13)),
                    PreconditionError);

    // prediction is a subset of observation, sometimes proper
    const auto params = cabling::CableParams::make(1, 5, 15);
    CHECK(structure::predicted_zero_rows(params) == std::vector<long>{5});
    const auto observed =
        structure::observed_zero_rows(cabling::build_twist_matrix(params));
    CHECK(observed == std::vector<long>{2, 3, 5, 7});
}

TEST_CASE("cofactor expansion: sign bookkeeping on an antidiagonal block") {
    const auto sys = cyc::RootSystem::make(5); // m = 2
    cabling::SparseMatrix rm;
    rm.m = 2;
    rm.cols.resize(2);
    rm.cols[0].emplace(2, cyc::CycElem::from_monomial(cyc::Monomial{1, 0}));
    rm.cols[1].emplace(1, cyc::CycElem::from_monomial(cyc::Monomial{1, 0}));
    const auto res = structure::cofactor_det(rm, sys);
    REQUIRE(res.status == "ok");
    CHECK(res.det == cyc::Monomial{-1, 0});
    CHECK(res.trace.size() == 2);
}

TEST_CASE("cofactor expansion: pinned run at (2,3,13)") {
    const auto params = cabling::CableParams::make(2, 3, 13);
    const auto rm = cabling::build_twist_matrix(params);
    const auto res = structure::cofactor_det(rm, params.sys);
    REQUIRE(res.status == "ok");
    CHECK(res.trace.size() == 6);
    CHECK((res.det.sign == 1 || res.det.sign == -1));
    // exact result agrees with the numeric determinant
    const auto numeric = analysis::numeric_det(analysis::eval_sparse(rm, params.sys));
    CHECK(std::abs(eval_complex(res.det, params.sys) - numeric) < 1e-9);
}

TEST_CASE("cofactor expansion: zero-row certificate when gcd(r, q) > 1") {
    const auto params = cabling::CableParams::make(1, 3, 9);
    const auto rm = cabling::build_twist_matrix(params);
    const auto res = structure::cofactor_det(rm, params.sys);
    CHECK(res.status == "zero-row");
    CHECK(res.zero_row == 3);
    CHECK(res.det.is_zero());
}

TEST_CASE("elimination schedules: pinned orders") {
    using rows_t = std::vector<long>;
    CHECK(structure::elimination_schedule(3, 5).rows == rows_t{3, 1, 5, 4, 2});
    CHECK(structure::elimination_schedule(5, 6).rows == rows_t{3, 1, 5, 6, 4, 2});
    CHECK(structure::elimination_schedule(4, 5).rows == rows_t{1, 3, 5, 4, 2});
    CHECK(structure::elimination_schedule(7, 7).rows == rows_t{3, 1, 5, 7, 6, 4, 2});
    const auto s6 = structure::elimination_schedule(6, 6);
    CHECK(s6.rows == rows_t{2, 4, 6, 5, 3, 1});
    CHECK_FALSE(s6.amended);
    const auto s6odd = structure::elimination_schedule(6, 9);
    CHECK(s6odd.rows == rows_t{2, 4, 6, 8, 9, 7, 5, 3, 1});
    CHECK(s6odd.amended);

    CHECK_THROWS_AS(structure::elimination_schedule(2, 9), PreconditionError);
    CHECK_THROWS_AS(structure::elimination_schedule(5, 2), PreconditionError);
}

TEST_CASE("elimination schedules are permutations across the grid") {
    for (long q = 3; q <= 8; ++q) {
        for (long r = q + 7 + ((q + 7) % 2 == 0 ? 1 : 0); r <= 201; r += 2) {
            CHECK_NOTHROW(structure::elimination_schedule(q, (r - 1) / 2));
        }
    }
}

TEST_CASE("schedule replay succeeds on the real matrix and fails on a bad order") {
    const auto params = cabling::CableParams::make(2, 3, 13);
    const auto rm = cabling::build_twist_matrix(params);
    const auto sched = structure::elimination_schedule(3, 6);
    std::string why;
    CHECK(structure::schedule_runs(rm, sched.rows, &why));
    // eliminating a double-entry row first must fail
    std::vector<long> bad = sched.rows;
    std::reverse(bad.begin(), bad.end());
    CHECK_FALSE(structure::schedule_runs(rm, bad, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("structure report: standard mode") {
    const auto rep = structure::verify_structure(cabling::CableParams::make(2, 3, 13));
    CHECK(rep.mode == "standard");
    CHECK(rep.all_pass());
    CHECK(rep.pivot_l == 4);
    CHECK(rep.single_row_lo == 4);
    CHECK(rep.single_row_hi == 6);
    CHECK(rep.formula_scan_agree);
    CHECK(rep.adjacent_col == 3);
    CHECK(rep.nonzero_total == 10);
    CHECK(rep.schedule_applicable);
    CHECK(rep.schedule_ok);
    CHECK(rep.cofactor.status == "ok");
    CHECK(rep.pairing.violations == 0);
    REQUIRE(rep.clause("single-rows-match-mode") != nullptr);
    CHECK(rep.clause("single-rows-match-mode")->result == structure::ClauseResult::Pass);
}

TEST_CASE("structure report: degenerate windings") {
    const auto q1 = structure::verify_structure(cabling::CableParams::make(2, 1, 13));
    CHECK(q1.mode == "degenerate-q1");
    CHECK(q1.all_pass());
    CHECK(q1.pivot_l == 1);
    CHECK(q1.single_row_lo == 5);
    CHECK(q1.single_row_hi == 6);
    CHECK_FALSE(q1.formula_scan_agree);
    CHECK(q1.adjacent_col == 0);
    CHECK_FALSE(q1.notes.empty());

    const auto q2 = structure::verify_structure(cabling::CableParams::make(3, 2, 13));
    CHECK(q2.mode == "degenerate-q2");
    CHECK(q2.all_pass());
    CHECK(q2.pivot_l == 6); // = m
    CHECK(q2.single_row_lo == 0);
    CHECK(q2.single_row_hi == 2);
    CHECK(q2.nonzero_total == 2 * 6 - 1);
    CHECK(q2.adjacent_col != 0);
}

TEST_CASE("structure report: small-r and noncoprime modes") {
    const auto small = structure::verify_structure(cabling::CableParams::make(1, 3, 7));
    CHECK(small.mode == "small-r");
    CHECK(small.all_pass());
    REQUIRE(small.clause("single-rows-match-mode") != nullptr);
    CHECK(small.clause("single-rows-match-mode")->result == structure::ClauseResult::Skip);

    const auto nc = structure::verify_structure(cabling::CableParams::make(1, 3, 9));
    CHECK(nc.mode == "noncoprime");
    CHECK_FALSE(nc.all_pass()); // the unit-monomial clause fails honestly
    REQUIRE(nc.clause("entries-are-unit-monomials") != nullptr);
    CHECK(nc.clause("entries-are-unit-monomials")->result == structure::ClauseResult::Fail);
    REQUIRE(nc.clause("predicted-zero-rows-vanish") != nullptr);
    CHECK(nc.clause("predicted-zero-rows-vanish")->result == structure::ClauseResult::Pass);
    CHECK(nc.zero_rows_predicted == std::vector<long>{3});
}

TEST_CASE("structure report: pairing statistics see both parity classes") {
    // equal-sign pairings with equal quotient parity exist (e.g. q=3, r=11)
    const auto rep = structure::verify_structure(cabling::CableParams::make(1, 3, 11));
    CHECK(rep.pairing.violations == 0);
    CHECK(rep.pairing.equal_sign_same_k_parity >= 1);
    CHECK(rep.pairing.checked_pairs > 0);
}

TEST_CASE("structure report: single-column coincidences at q=4 and q=6") {
    const auto rep4 = structure::verify_structure(cabling::CableParams::make(1, 4, 13));
    CHECK(rep4.all_pass());
    CHECK(rep4.col_of_single_lo == 1);
    const auto rep6 = structure::verify_structure(cabling::CableParams::make(1, 6, 17));
    CHECK(rep6.all_pass());
    CHECK(rep6.col_of_single_lo == rep6.pivot_l + 1);
    const auto rep5 = structure::verify_structure(cabling::CableParams::make(1, 5, 19));
    CHECK(rep5.all_pass());
    CHECK(rep5.col_of_single_lo != 1);
    CHECK(rep5.col_of_single_lo != rep5.pivot_l + 1);
}
