#pragma once

#include <complex>
#include <cstdint>
#include <map>

namespace cableops::cyc {

// Root data for the coefficient ring Z[zeta] with zeta^(4r) = 1, where
// zeta is evaluated as exp(i*pi/(2r)). r must be odd and >= 3; m = (r-1)/2
// is the dimension of the reduced skein module the operators act on.
struct RootSystem {
    long r = 0;
    long m = 0;
    long order = 0; // 4r

    static RootSystem make(long r);

    // exponent reduced into [0, 4r)
    long canon(long long e) const {
        long long v = e % order;
        if (v < 0) v += order;
        return static_cast<long>(v);
    }

    friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

// sign * zeta^exp with canonical zero (sign == 0, exp == 0). exp is always
// stored reduced into [0, 4r).
struct Monomial {
    int sign = 0;
    long exp = 0;

    bool is_zero() const { return sign == 0; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial make_monomial(int sign, long long exp, const RootSystem& sys);
Monomial mono_mul(const Monomial& a, const Monomial& b, const RootSystem& sys);
Monomial mono_neg(const Monomial& a);
std::complex<double> eval_complex(const Monomial& a, const RootSystem& sys);

// General element of Z[zeta]/(zeta^(4r) - 1): sparse exponent -> integer
// coefficient map. Zero coefficients are never stored, so map equality is
// element equality. No cyclotomic-polynomial reduction is applied; equality
// is checked in this group ring, which is finer than equality in Z[zeta]
// and therefore safe for identity checks.
class CycElem {
public:
    CycElem() = default;

    static CycElem from_monomial(const Monomial& a);

    void add_term(long long exp, long long coeff, const RootSystem& sys);

    bool is_zero() const { return terms_.empty(); }
    // exactly one term with coefficient +-1
    bool is_monomial() const;
    Monomial as_monomial() const;

    const std::map<long, long long>& terms() const { return terms_; }

    friend bool operator==(const CycElem&, const CycElem&) = default;
    friend CycElem cyc_add(const CycElem& a, const CycElem& b);

private:
    std::map<long, long long> terms_; // canonical exp -> nonzero coeff
};

CycElem cyc_add(const CycElem& a, const CycElem& b);
CycElem cyc_mul(const CycElem& a, const CycElem& b, const RootSystem& sys);
CycElem cyc_scale(const Monomial& a, const CycElem& b, const RootSystem& sys);
std::complex<double> eval_complex(const CycElem& a, const RootSystem& sys);

} // namespace cableops::cyc
