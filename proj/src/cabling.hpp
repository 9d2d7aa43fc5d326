#pragma once

#include "cyclotomic.hpp"
#include "params.hpp"
#include "skein.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cableops::cabling {

// Sparse m x m matrix over Z[zeta], stored column-major. Column c (1-based)
// lives at cols[c-1] as a row -> entry map. For the twist matrix R_m,
// column l+1 is the reduced vector f~_l; entries are single signed powers
// of zeta whenever gcd(r, q) = 1, and may be two-term sums otherwise
// (both components of some f_l can fold onto the same row).
struct SparseMatrix {
    long m = 0;
    std::vector<skein::SkeinVector> cols;

    const cyc::CycElem* at(long row, long col) const; // nullptr when zero
    long nonzero_count() const;
};

SparseMatrix build_twist_matrix(const CableParams& params);

// Column i of the cable operator in the e-basis, computed directly from
// the cabling formula: the image of e_i is
//   sum over j in {-(i-1), -(i-3), ..., i-1} of
//     zeta^(pq(i^2-1) - pq j^2 - 2pj) e_(qj+1),
// reduced into e_1..e_m. Valid for 1 <= i <= m.
skein::SkeinVector operator_column(long i, const CableParams& params);

// The same column expressed over the f~ columns: e_i maps to
//   sum over l in T_i of zeta^(pq(i^2-1) - pq l^2 - 2pl) f~_l,
// where T_i = {0, 2, ..., i-1} for odd i and {1, 3, ..., i-1} for even i.
// Returned as l -> coefficient.
std::map<long, cyc::Monomial> f_expansion(long i, const CableParams& params);

// Upper unitriangular 0/1 pattern: u(a,b) = 1 iff a <= b and a = b mod 2.
struct ParityPattern {
    long m = 0;
    std::vector<std::uint8_t> bits; // row-major m x m

    bool at(long a, long b) const { return bits[static_cast<std::size_t>((a - 1) * m + b - 1)] != 0; }
};

// The diagonal-triangular factorization of the cable operator in the
// e-basis: RT = R_m * D1 * U * D2 with
//   D1 = diag(zeta^(-2pl - pq l^2)), entry at position l+1 for l = 0..m-1,
//   U  = the parity pattern above,
//   D2 = diag(zeta^(pq(i^2-1))), i = 1..m.
struct FactorTriple {
    std::vector<cyc::Monomial> d1; // index l = 0..m-1 holds entry (l+1, l+1)
    ParityPattern u;
    std::vector<cyc::Monomial> d2; // index i-1 holds entry (i, i)
};

FactorTriple factor_matrices(const CableParams& params);

// Exact inverses of the three structured factors:
//   D2^-1 = diag(zeta^(-pq(i^2-1))),
//   U^-1  = I with an extra -1 at (i, i+2) for i = 1..m-2,
//   D1^-1 = diag(zeta^(2pl + pq l^2)).
struct InverseFactors {
    std::vector<cyc::Monomial> d2_inv;
    std::vector<cyc::Monomial> d1_inv;
};

InverseFactors inverse_factors(const CableParams& params);

// Full cable operator in the e-basis. Each column is assembled two ways,
// from the direct cabling formula and as R_m * D1 * U * D2, and the two
// must agree exactly; a mismatch throws InternalError.
struct CableOperator {
    long m = 0;
    std::vector<skein::SkeinVector> cols;
};

CableOperator cable_operator(const CableParams& params);

} // namespace cableops::cabling
