#include "cabling.hpp"

#include "errors.hpp"

#include <stdexcept>
#include <string>

namespace cableops::cabling {

const cyc::CycElem* SparseMatrix::at(long row, long col) const {
    const auto& column = cols.at(static_cast<std::size_t>(col - 1));
    auto it = column.find(row);
    return it == column.end() ? nullptr : &it->second;
}

long SparseMatrix::nonzero_count() const {
    long n = 0;
    for (const auto& column : cols) n += static_cast<long>(column.size());
    return n;
}

SparseMatrix build_twist_matrix(const CableParams& params) {
    SparseMatrix rm;
    rm.m = params.sys.m;
    rm.cols.reserve(static_cast<std::size_t>(rm.m));
    for (long l = 0; l <= rm.m - 1; ++l) {
        rm.cols.push_back(skein::f_tilde(l, params));
    }
    return rm;
}

skein::SkeinVector operator_column(long i, const CableParams& params) {
    const auto& sys = params.sys;
    if (i < 1 || i > sys.m) {
        throw std::invalid_argument("column index out of range [1, m]: " + std::to_string(i));
    }
    skein::SkeinVector col;
    const long long pq = static_cast<long long>(params.p) * params.q;
    const long long lead = pq * (static_cast<long long>(i) * i - 1);
    for (long long j = -(i - 1); j <= i - 1; j += 2) {
        const long long exp = lead - pq * j * j - 2LL * params.p * j;
        skein::add_reduced_term(col, static_cast<long long>(params.q) * j + 1,
                                make_monomial(1, exp, sys), sys);
    }
    return col;
}

std::map<long, cyc::Monomial> f_expansion(long i, const CableParams& params) {
    const auto& sys = params.sys;
    if (i < 1 || i > sys.m) {
        throw std::invalid_argument("column index out of range [1, m]: " + std::to_string(i));
    }
    std::map<long, cyc::Monomial> out;
    const long long pq = static_cast<long long>(params.p) * params.q;
    const long long lead = pq * (static_cast<long long>(i) * i - 1);
    // T_i: same parity as i-1, from 0 or 1 up to i-1
    for (long l = (i - 1) % 2; l <= i - 1; l += 2) {
        const long long exp = lead - pq * static_cast<long long>(l) * l - 2LL * params.p * l;
        out.emplace(l, make_monomial(1, exp, sys));
    }
    return out;
}

FactorTriple factor_matrices(const CableParams& params) {
    const auto& sys = params.sys;
    const long m = sys.m;
    FactorTriple f;
    const long long pq = static_cast<long long>(params.p) * params.q;
    f.d1.reserve(static_cast<std::size_t>(m));
    for (long l = 0; l <= m - 1; ++l) {
        f.d1.push_back(make_monomial(1, -2LL * params.p * l - pq * static_cast<long long>(l) * l, sys));
    }
    f.d2.reserve(static_cast<std::size_t>(m));
    for (long i = 1; i <= m; ++i) {
        f.d2.push_back(make_monomial(1, pq * (static_cast<long long>(i) * i - 1), sys));
    }
    f.u.m = m;
    f.u.bits.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (long a = 1; a <= m; ++a) {
        for (long b = a; b <= m; b += 2) {
            f.u.bits[static_cast<std::size_t>((a - 1) * m + b - 1)] = 1;
        }
    }
    return f;
}

InverseFactors inverse_factors(const CableParams& params) {
    const auto& sys = params.sys;
    const long m = sys.m;
    InverseFactors inv;
    const long long pq = static_cast<long long>(params.p) * params.q;
    inv.d2_inv.reserve(static_cast<std::size_t>(m));
    for (long i = 1; i <= m; ++i) {
        inv.d2_inv.push_back(make_monomial(1, -pq * (static_cast<long long>(i) * i - 1), sys));
    }
    inv.d1_inv.reserve(static_cast<std::size_t>(m));
    for (long l = 0; l <= m - 1; ++l) {
        inv.d1_inv.push_back(make_monomial(1, 2LL * params.p * l + pq * static_cast<long long>(l) * l, sys));
    }
    return inv;
}

CableOperator cable_operator(const CableParams& params) {
    const auto& sys = params.sys;
    CableOperator op;
    op.m = sys.m;
    op.cols.reserve(static_cast<std::size_t>(op.m));

    const SparseMatrix rm = build_twist_matrix(params);
    const FactorTriple factors = factor_matrices(params);

    for (long i = 1; i <= op.m; ++i) {
        skein::SkeinVector direct = operator_column(i, params);

        // factored route: column i of R_m * D1 * U * D2
        skein::SkeinVector assembled;
        for (long a = 1; a <= op.m; ++a) {
            if (!factors.u.at(a, i)) continue;
            const cyc::Monomial coeff =
                mono_mul(factors.d1[static_cast<std::size_t>(a - 1)],
                         factors.d2[static_cast<std::size_t>(i - 1)], sys);
            for (const auto& [row, elem] : rm.cols[static_cast<std::size_t>(a - 1)]) {
                cyc::CycElem scaled = cyc_scale(coeff, elem, sys);
                auto it = assembled.find(row);
                if (it == assembled.end()) {
                    if (!scaled.is_zero()) assembled.emplace(row, std::move(scaled));
                } else {
                    it->second = cyc_add(it->second, scaled);
                    if (it->second.is_zero()) assembled.erase(it);
                }
            }
        }

        if (!skein::vectors_equal(direct, assembled)) {
            throw InternalError("cable operator assembly mismatch in column " +
                                std::to_string(i) + " at p=" + std::to_string(params.p) +
                                " q=" + std::to_string(params.q) +
                                " r=" + std::to_string(sys.r));
        }
        op.cols.push_back(std::move(direct));
    }
    return op;
}

} // namespace cableops::cabling
