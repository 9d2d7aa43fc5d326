#include "cyclotomic.hpp"

#include "errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cableops::cyc {

RootSystem RootSystem::make(long r) {
    if (r < 3 || r % 2 == 0) {
        throw std::invalid_argument("root order r must be odd and >= 3, got " +
                                    std::to_string(r));
    }
    RootSystem sys;
    sys.r = r;
    sys.m = (r - 1) / 2;
    sys.order = 4 * r;
    return sys;
}

Monomial make_monomial(int sign, long long exp, const RootSystem& sys) {
    if (sign == 0) return Monomial{};
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("monomial sign must be -1, 0 or +1");
    }
    return Monomial{sign, sys.canon(exp)};
}

Monomial mono_mul(const Monomial& a, const Monomial& b, const RootSystem& sys) {
    if (a.is_zero() || b.is_zero()) return Monomial{};
    return Monomial{a.sign * b.sign, sys.canon(static_cast<long long>(a.exp) + b.exp)};
}

Monomial mono_neg(const Monomial& a) {
    return Monomial{-a.sign, a.exp};
}

std::complex<double> eval_complex(const Monomial& a, const RootSystem& sys) {
    if (a.is_zero()) return {0.0, 0.0};
    const double theta = std::numbers::pi * static_cast<double>(a.exp) /
                         (2.0 * static_cast<double>(sys.r));
    return static_cast<double>(a.sign) * std::polar(1.0, theta);
}

CycElem CycElem::from_monomial(const Monomial& a) {
    CycElem e;
    if (!a.is_zero()) e.terms_[a.exp] = a.sign;
    return e;
}

void CycElem::add_term(long long exp, long long coeff, const RootSystem& sys) {
    if (coeff == 0) return;
    const long key = sys.canon(exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool CycElem::is_monomial() const {
    if (terms_.size() != 1) return false;
    const long long c = terms_.begin()->second;
    return c == 1 || c == -1;
}

Monomial CycElem::as_monomial() const {
    if (!is_monomial()) {
        throw InternalError("cyclotomic element is not a signed power of zeta");
    }
    const auto& [exp, coeff] = *terms_.begin();
    return Monomial{static_cast<int>(coeff), exp};
}

CycElem cyc_add(const CycElem& a, const CycElem& b) {
    CycElem out = a;
    for (const auto& [exp, coeff] : b.terms()) {
        // keys are already canonical, so merge directly
        auto it = out.terms_.find(exp);
        if (it == out.terms_.end()) {
            out.terms_.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

CycElem cyc_mul(const CycElem& a, const CycElem& b, const RootSystem& sys) {
    CycElem out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            out.add_term(static_cast<long long>(ea) + eb, ca * cb, sys);
        }
    }
    return out;
}

CycElem cyc_scale(const Monomial& a, const CycElem& b, const RootSystem& sys) {
    if (a.is_zero()) return CycElem{};
    CycElem out;
    for (const auto& [eb, cb] : b.terms()) {
        out.add_term(static_cast<long long>(a.exp) + eb, a.sign * cb, sys);
    }
    return out;
}

std::complex<double> eval_complex(const CycElem& a, const RootSystem& sys) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [exp, coeff] : a.terms()) {
        const double theta = std::numbers::pi * static_cast<double>(exp) /
                             (2.0 * static_cast<double>(sys.r));
        acc += static_cast<double>(coeff) * std::polar(1.0, theta);
    }
    return acc;
}

} // namespace cableops::cyc
