#include "skein.hpp"

#include <stdexcept>
#include <string>

namespace cableops::skein {

ReducedIndex reduce_index(long long i, const cyc::RootSystem& sys) {
    const long long period = 2LL * sys.r;
    long long t = i % period;
    if (t < 0) t += period;
    int sign = 1;
    if (t >= sys.r) {
        sign = -1;
        t -= sys.r;
    }
    if (t == 0) return ReducedIndex{0, 0};
    // e_(m+1+k) = e_(m-k): fold the upper half down, keeping the sign
    if (t > sys.m) t = sys.r - t;
    return ReducedIndex{sign, static_cast<long>(t)};
}

void add_reduced_term(SkeinVector& v, long long raw_index, const cyc::Monomial& coeff,
                      const cyc::RootSystem& sys) {
    if (coeff.is_zero()) return;
    const ReducedIndex red = reduce_index(raw_index, sys);
    if (red.is_zero()) return;
    const cyc::Monomial signed_coeff{red.sign * coeff.sign, coeff.exp};
    auto it = v.find(red.j);
    if (it == v.end()) {
        v.emplace(red.j, cyc::CycElem::from_monomial(signed_coeff));
    } else {
        it->second = cyc_add(it->second, cyc::CycElem::from_monomial(signed_coeff));
        if (it->second.is_zero()) v.erase(it);
    }
}

bool vectors_equal(const SkeinVector& a, const SkeinVector& b) {
    return a == b;
}

std::vector<FTerm> f_raw(long l, const cabling::CableParams& params) {
    const auto& sys = params.sys;
    if (l < 0 || l > sys.m - 1) {
        throw std::invalid_argument("f_l is defined for 0 <= l <= m-1, got l=" +
                                    std::to_string(l));
    }
    if (l == 0) {
        return {FTerm{1, cyc::Monomial{1, 0}}};
    }
    const long long plus = static_cast<long long>(params.q) * l + 1;
    const long long minus = static_cast<long long>(params.q) * l - 1;
    return {
        FTerm{plus, cyc::Monomial{1, 0}},
        FTerm{minus, make_monomial(-1, 4LL * params.p * l, sys)},
    };
}

SkeinVector f_tilde(long l, const cabling::CableParams& params) {
    SkeinVector v;
    for (const FTerm& term : f_raw(l, params)) {
        add_reduced_term(v, term.index, term.coeff, params.sys);
    }
    return v;
}

ReducedIndex fpm_reduced(long l, int sign, const cabling::CableParams& params) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("component selector must be +1 or -1");
    }
    if (l < 0 || l > params.sys.m) {
        throw std::invalid_argument("component index l out of range [0, m]: " +
                                    std::to_string(l));
    }
    if (l == 0 && sign == -1) return ReducedIndex{0, 0};
    return reduce_index(static_cast<long long>(params.q) * l + sign, params.sys);
}

} // namespace cableops::skein
