#include "cyclotomic.hpp"
#include "errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

using namespace cableops;
using cyc::CycElem;
using cyc::Monomial;
using cyc::RootSystem;

TEST_CASE("root system validation") {
    const RootSystem sys = RootSystem::make(13);
    CHECK(sys.r == 13);
    CHECK(sys.m == 6);
    CHECK(sys.order == 52);
    CHECK(RootSystem::make(3).m == 1);
    CHECK_THROWS_AS(RootSystem::make(4), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::make(1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::make(-5), std::invalid_argument);
}

TEST_CASE("exponent canonicalization") {
    const RootSystem sys = RootSystem::make(7);
    CHECK(sys.canon(0) == 0);
    CHECK(sys.canon(28) == 0);
    CHECK(sys.canon(-1) == 27);
    CHECK(sys.canon(29) == 1);
    CHECK(sys.canon(-29) == 27);
    CHECK(sys.canon(1000000007LL) == 1000000007LL % 28);
}

TEST_CASE("monomial construction and multiplication") {
    const RootSystem sys = RootSystem::make(5);
    const Monomial zero;
    CHECK(zero.is_zero());
    CHECK(cyc::make_monomial(0, 3, sys) == zero);
    CHECK_THROWS_AS(cyc::make_monomial(2, 0, sys), std::invalid_argument);

    const Monomial a = cyc::make_monomial(1, 7, sys);
    const Monomial b = cyc::make_monomial(-1, 18, sys);
    const Monomial ab = cyc::mono_mul(a, b, sys);
    CHECK(ab.sign == -1);
    CHECK(ab.exp == (7 + 18) % 20);
    CHECK(cyc::mono_mul(a, zero, sys).is_zero());
    CHECK(cyc::mono_neg(a) == cyc::make_monomial(-1, 7, sys));
}

TEST_CASE("monomial evaluation is the expected root of unity") {
    const RootSystem sys = RootSystem::make(9);
    // zeta^(2r) = exp(i*pi) = -1
    const auto v = cyc::eval_complex(cyc::make_monomial(1, 2 * sys.r, sys), sys);
    CHECK(std::abs(v - std::complex<double>(-1.0, 0.0)) < 1e-12);
    const auto w = cyc::eval_complex(cyc::make_monomial(1, sys.r, sys), sys);
    CHECK(std::abs(w - std::complex<double>(0.0, 1.0)) < 1e-12);
    for (long e = 0; e < sys.order; e += 5) {
        const auto z = cyc::eval_complex(cyc::make_monomial(-1, e, sys), sys);
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    }
}

TEST_CASE("monomial multiplication agrees with complex multiplication") {
    const RootSystem sys = RootSystem::make(5);
    for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
            for (long ea = 0; ea < sys.order; ea += 3) {
                for (long eb = 0; eb < sys.order; eb += 7) {
                    const Monomial a = cyc::make_monomial(sa, ea, sys);
                    const Monomial b = cyc::make_monomial(sb, eb, sys);
                    const auto lhs = cyc::eval_complex(cyc::mono_mul(a, b, sys), sys);
                    const auto rhs = cyc::eval_complex(a, sys) * cyc::eval_complex(b, sys);
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("monomial multiplication is associative and commutative at r=3") {
    const RootSystem sys = RootSystem::make(3);
    std::vector<Monomial> all;
    all.push_back(Monomial{});
    for (int s : {1, -1}) {
        for (long e = 0; e < sys.order; ++e) all.push_back(cyc::make_monomial(s, e, sys));
    }
    for (const auto& a : all) {
        for (const auto& b : all) {
            CHECK(cyc::mono_mul(a, b, sys) == cyc::mono_mul(b, a, sys));
            for (const auto& c : all) {
                CHECK(cyc::mono_mul(cyc::mono_mul(a, b, sys), c, sys) ==
                      cyc::mono_mul(a, cyc::mono_mul(b, c, sys), sys));
            }
        }
    }
}

TEST_CASE("cyclotomic elements add with cancellation") {
    const RootSystem sys = RootSystem::make(7);
    const Monomial a = cyc::make_monomial(1, 5, sys);
    CycElem x = CycElem::from_monomial(a);
    CHECK(x.is_monomial());
    CHECK(x.as_monomial() == a);

    const CycElem y = CycElem::from_monomial(cyc::mono_neg(a));
    CHECK(cyc::cyc_add(x, y).is_zero());

    CycElem two;
    two.add_term(5, 1, sys);
    two.add_term(5 + sys.order, 1, sys); // same canonical exponent
    CHECK(two.terms().size() == 1);
    CHECK(two.terms().begin()->second == 2);
    CHECK_FALSE(two.is_monomial());
    CHECK_THROWS_AS(two.as_monomial(), InternalError);
}

TEST_CASE("cyclotomic multiplication agrees with complex arithmetic") {
    const RootSystem sys = RootSystem::make(5);
    CycElem x, y;
    x.add_term(3, 1, sys);
    x.add_term(11, -2, sys);
    y.add_term(0, 1, sys);
    y.add_term(7, 1, sys);
    y.add_term(19, -1, sys);
    const CycElem xy = cyc::cyc_mul(x, y, sys);
    const auto lhs = cyc::eval_complex(xy, sys);
    const auto rhs = cyc::eval_complex(x, sys) * cyc::eval_complex(y, sys);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    const CycElem zero;
    CHECK(cyc::cyc_mul(x, zero, sys).is_zero());
    CHECK(cyc::cyc_scale(cyc::make_monomial(-1, 2, sys), x, sys).terms().size() == 2);
    CHECK(cyc::cyc_scale(Monomial{}, x, sys).is_zero());
}

TEST_CASE("scaling matches multiplication by a one-term element") {
    const RootSystem sys = RootSystem::make(9);
    CycElem x;
    x.add_term(4, 3, sys);
    x.add_term(17, -1, sys);
    const Monomial a = cyc::make_monomial(-1, 31, sys);
    CHECK(cyc::cyc_scale(a, x, sys) == cyc::cyc_mul(CycElem::from_monomial(a), x, sys));
}
