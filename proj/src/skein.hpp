#pragma once

#include "cyclotomic.hpp"
#include "params.hpp"

#include <map>
#include <vector>

namespace cableops::skein {

// Canonical form of a basis index: e_i collapses to sign * e_j with
// j in [0, m]. j == 0 means the vector is zero (sign is then 0 too).
// The reduction has period 2r, is odd (i -> -i flips the sign), and
// folds indices above m back down without a sign change.
struct ReducedIndex {
    int sign = 0;
    long j = 0;

    bool is_zero() const { return j == 0; }
    friend bool operator==(const ReducedIndex&, const ReducedIndex&) = default;
};

ReducedIndex reduce_index(long long i, const cyc::RootSystem& sys);

// Sparse vector in the reduced basis e_1..e_m: row index -> coefficient.
// Zero coefficients are never stored.
using SkeinVector = std::map<long, cyc::CycElem>;

// Accumulate coeff * e_raw_index into v after reduction.
void add_reduced_term(SkeinVector& v, long long raw_index, const cyc::Monomial& coeff,
                      const cyc::RootSystem& sys);

bool vectors_equal(const SkeinVector& a, const SkeinVector& b);

// One unreduced term coeff * e_index.
struct FTerm {
    long long index = 0;
    cyc::Monomial coeff;
};

// The twisted column vectors before reduction:
//   f_0 = e_1,   f_l = e_(ql+1) - zeta^(4pl) e_(ql-1)  for l >= 1.
// Valid for 0 <= l <= m-1 (the columns of the twist matrix).
std::vector<FTerm> f_raw(long l, const cabling::CableParams& params);

// f_l pushed through the index reduction.
SkeinVector f_tilde(long l, const cabling::CableParams& params);

// Reduced index of the + (sign=+1) or - (sign=-1) component of f_l,
// i.e. of e_(ql+1) or e_(ql-1). Defined for 0 <= l <= m; the - component
// of f_0 is the zero vector by convention.
ReducedIndex fpm_reduced(long l, int sign, const cabling::CableParams& params);

} // namespace cableops::skein
