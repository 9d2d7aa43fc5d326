#include "structure.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cableops::structure {

const char* to_string(ClauseResult v) {
    switch (v) {
        case ClauseResult::Pass: return "pass";
        case ClauseResult::Fail: return "fail";
        case ClauseResult::Skip: return "skip";
    }
    return "?";
}

Component classify(long l, int sign, const cabling::CableParams& params) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("component selector must be +-1");
    if (l < 1 || l > params.sys.m) throw std::invalid_argument("component index out of [1, m]");
    const long r = params.sys.r;
    const long long idx = static_cast<long long>(params.q) * l + sign;
    Component c;
    c.l = l;
    c.sign = sign;
    c.k = static_cast<long>(idx / r);
    c.rem = static_cast<long>(idx % r);
    if (c.rem == 0) {
        c.value = 0;
        c.form = 'g';
    } else if (c.rem <= params.sys.m) {
        c.form = 'g';
        c.value = c.rem;
    } else {
        c.form = 'h';
        c.value = r - c.rem;
    }
    c.reduced = skein::reduce_index(idx, params.sys);
    if (c.reduced.j != c.value) {
        throw InternalError("component classification disagrees with index reduction");
    }
    return c;
}

namespace {

long mod_inverse(long a, long n) {
    // extended Euclid; requires gcd(a, n) = 1
    long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
    while (new_r != 0) {
        const long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    return ((t % n) + n) % n;
}

} // namespace

Pivot find_pivot(const cabling::CableParams& params) {
    if (!params.coprime_r()) {
        throw PreconditionError("no pivot index exists when gcd(r, q) > 1");
    }
    const long r = params.sys.r;
    const long m = params.sys.m;

    std::vector<Pivot> hits;
    for (long l = 1; l <= m; ++l) {
        const long long plus = static_cast<long long>(params.q) * l + 1;
        const long long minus = static_cast<long long>(params.q) * l - 1;
        if (plus % r == 0) hits.push_back(Pivot{l, 1});
        if (minus % r == 0) hits.push_back(Pivot{l, -1});
    }
    if (hits.size() != 1) {
        throw InternalError("pivot index not unique: found " + std::to_string(hits.size()) +
                            " candidates at q=" + std::to_string(params.q) +
                            " r=" + std::to_string(r));
    }

    // ql = -+1 mod r, so l = -+ q^-1; exactly one representative lies in [1, m]
    const long u = mod_inverse(params.q, r);
    const long bezout_l = (u <= m) ? u : r - u;
    const int bezout_which = (u <= m) ? -1 : 1;
    if (bezout_l != hits[0].l || bezout_which != hits[0].which) {
        throw InternalError("pivot scan and Bezout computation disagree");
    }
    return hits[0];
}

std::pair<long, long> single_row_formula(long q, long m) {
    if (q % 2 == 0) return {q / 2 - 1, q / 2 + 1};
    return {m - (q + 1) / 2, m - (q - 3) / 2};
}

std::optional<long> find_adjacent_column(const cabling::SparseMatrix& rm) {
    const long m = rm.m;
    std::optional<long> found;
    if (m < 2) return found;
    for (long c = 1; c <= m; ++c) {
        const auto& col = rm.cols[static_cast<std::size_t>(c - 1)];
        if (col.size() == 2 && col.count(m - 1) == 1 && col.count(m) == 1) {
            if (found) {
                throw InternalError("multiple columns supported on the last two rows");
            }
            found = c;
        }
    }
    return found;
}

std::vector<long> predicted_zero_rows(const cabling::CableParams& params) {
    const long d = params.gcd_rq();
    if (d == 1) {
        throw PreconditionError("no zero rows are predicted when gcd(r, q) = 1");
    }
    std::vector<long> rows;
    for (long nd = d; nd <= params.sys.m; nd += d) rows.push_back(nd);
    return rows;
}

std::vector<long> observed_zero_rows(const cabling::SparseMatrix& rm) {
    std::vector<char> seen(static_cast<std::size_t>(rm.m + 1), 0);
    for (const auto& col : rm.cols) {
        for (const auto& [row, elem] : col) seen[static_cast<std::size_t>(row)] = 1;
    }
    std::vector<long> rows;
    for (long r = 1; r <= rm.m; ++r) {
        if (!seen[static_cast<std::size_t>(r)]) rows.push_back(r);
    }
    return rows;
}

namespace {

// Row-major view of the live submatrix during the expansion.
struct LiveState {
    long m = 0;
    // per row: list of (col, entry) for every stored entry
    std::vector<std::vector<std::pair<long, const cyc::CycElem*>>> row_entries;
    std::vector<char> row_alive, col_alive;

    explicit LiveState(const cabling::SparseMatrix& rm) : m(rm.m) {
        row_entries.assign(static_cast<std::size_t>(m + 1), {});
        row_alive.assign(static_cast<std::size_t>(m + 1), 1);
        col_alive.assign(static_cast<std::size_t>(m + 1), 1);
        for (long c = 1; c <= m; ++c) {
            for (const auto& [row, elem] : rm.cols[static_cast<std::size_t>(c - 1)]) {
                row_entries[static_cast<std::size_t>(row)].emplace_back(c, &elem);
            }
        }
    }

    long live_count(long row) const {
        long n = 0;
        for (const auto& [c, e] : row_entries[static_cast<std::size_t>(row)]) {
            if (col_alive[static_cast<std::size_t>(c)]) ++n;
        }
        return n;
    }

    std::pair<long, const cyc::CycElem*> sole_entry(long row) const {
        for (const auto& [c, e] : row_entries[static_cast<std::size_t>(row)]) {
            if (col_alive[static_cast<std::size_t>(c)]) return {c, e};
        }
        return {0, nullptr};
    }

    // 1-based position of `idx` among live rows/cols
    long rank(const std::vector<char>& alive, long idx) const {
        long pos = 0;
        for (long i = 1; i <= idx; ++i) {
            if (alive[static_cast<std::size_t>(i)]) ++pos;
        }
        return pos;
    }
};

} // namespace

CofactorResult cofactor_det(const cabling::SparseMatrix& rm, const cyc::RootSystem& sys) {
    CofactorResult res;
    const long m = rm.m;
    LiveState st(rm);
    int parity = 1;
    cyc::Monomial acc{1, 0};

    for (long step = 0; step < m; ++step) {
        long single_row = 0;
        for (long row = 1; row <= m; ++row) {
            if (!st.row_alive[static_cast<std::size_t>(row)]) continue;
            const long n = st.live_count(row);
            if (n == 0) {
                res.status = "zero-row";
                res.zero_row = row;
                res.det = cyc::Monomial{};
                return res;
            }
            if (n == 1 && single_row == 0) single_row = row;
        }
        if (single_row == 0) {
            res.status = "stall";
            res.det = cyc::Monomial{};
            return res;
        }
        const auto [col, elem] = st.sole_entry(single_row);
        if (!elem->is_monomial()) {
            res.status = "stall";
            res.det = cyc::Monomial{};
            return res;
        }
        const cyc::Monomial entry = elem->as_monomial();
        // sign of the cofactor inside the current minor
        const long i_local = st.rank(st.row_alive, single_row);
        const long j_local = st.rank(st.col_alive, col);
        if ((i_local + j_local) % 2 != 0) parity = -parity;
        acc = mono_mul(acc, entry, sys);
        res.trace.push_back(Elimination{single_row, col, entry});
        st.row_alive[static_cast<std::size_t>(single_row)] = 0;
        st.col_alive[static_cast<std::size_t>(col)] = 0;
    }
    res.status = "ok";
    res.det = cyc::Monomial{parity * acc.sign, acc.exp};
    return res;
}

namespace {

void push_down(std::vector<long>& v, long from, long to) {
    for (long x = from; x >= to; x -= 2) v.push_back(x);
}

void push_up(std::vector<long>& v, long from, long to) {
    for (long x = from; x <= to; x += 2) v.push_back(x);
}

} // namespace

Schedule elimination_schedule(long q, long m) {
    if (q < 3) throw PreconditionError("no elimination schedule is defined for q < 3");
    if (2 * m + 1 <= q + 6) {
        throw PreconditionError("elimination schedule requires r > q + 6");
    }
    const auto [lo, hi] = single_row_formula(q, m);
    const bool m_odd = (m % 2 != 0);
    Schedule s;
    s.rows.reserve(static_cast<std::size_t>(m));
    s.rows.push_back(lo);
    switch (q % 4) {
        case 0:
            push_down(s.rows, lo - 2, 1);
            push_up(s.rows, hi, m_odd ? m : m - 1);
            push_down(s.rows, m_odd ? m - 1 : m, 2);
            break;
        case 1:
            push_down(s.rows, lo - 2, m_odd ? 2 : 1);
            push_up(s.rows, hi, m - 1);
            push_down(s.rows, m, m_odd ? 1 : 2);
            break;
        case 2:
            push_down(s.rows, lo - 2, 2);
            push_up(s.rows, hi, m_odd ? m - 1 : m);
            if (m_odd) {
                // the descending run must start at m to cover every row
                push_down(s.rows, m, 1);
                s.amended = true;
            } else {
                push_down(s.rows, m - 1, 1);
            }
            break;
        case 3:
            push_down(s.rows, lo - 2, m_odd ? 1 : 2);
            push_up(s.rows, hi, m);
            push_down(s.rows, m - 1, m_odd ? 2 : 1);
            break;
    }
    std::vector<char> seen(static_cast<std::size_t>(m + 1), 0);
    if (static_cast<long>(s.rows.size()) != m) {
        throw InternalError("elimination schedule has wrong length for q=" + std::to_string(q) +
                            " m=" + std::to_string(m));
    }
    for (long row : s.rows) {
        if (row < 1 || row > m || seen[static_cast<std::size_t>(row)]) {
            throw InternalError("elimination schedule is not a permutation for q=" +
                                std::to_string(q) + " m=" + std::to_string(m));
        }
        seen[static_cast<std::size_t>(row)] = 1;
    }
    return s;
}

bool schedule_runs(const cabling::SparseMatrix& rm, const std::vector<long>& order,
                   std::string* why) {
    LiveState st(rm);
    for (long row : order) {
        if (row < 1 || row > rm.m || !st.row_alive[static_cast<std::size_t>(row)]) {
            if (why) *why = "row " + std::to_string(row) + " not available";
            return false;
        }
        if (st.live_count(row) != 1) {
            if (why) {
                *why = "row " + std::to_string(row) + " holds " +
                       std::to_string(st.live_count(row)) + " surviving entries at its turn";
            }
            return false;
        }
        const auto [col, elem] = st.sole_entry(row);
        st.row_alive[static_cast<std::size_t>(row)] = 0;
        st.col_alive[static_cast<std::size_t>(col)] = 0;
    }
    return true;
}

namespace {

void add_clause(StructureReport& rep, const std::string& name, ClauseResult result,
                std::string detail = {}) {
    rep.clauses.push_back(Clause{name, result, std::move(detail)});
}

ClauseResult as_clause(bool ok) { return ok ? ClauseResult::Pass : ClauseResult::Fail; }

} // namespace

bool StructureReport::all_pass() const {
    return std::none_of(clauses.begin(), clauses.end(),
                        [](const Clause& c) { return c.result == ClauseResult::Fail; });
}

const Clause* StructureReport::clause(const std::string& name) const {
    for (const auto& c : clauses) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

StructureReport verify_structure(const cabling::CableParams& params) {
    StructureReport rep;
    rep.p = params.p;
    rep.q = params.q;
    rep.r = params.sys.r;
    rep.m = params.sys.m;
    rep.gcd_rq = params.gcd_rq();
    rep.large_r = params.large_r();

    const bool coprime = rep.gcd_rq == 1;
    if (!coprime) {
        rep.mode = "noncoprime";
    } else if (!rep.large_r) {
        rep.mode = "small-r";
    } else if (params.q == 1) {
        rep.mode = "degenerate-q1";
    } else if (params.q == 2) {
        rep.mode = "degenerate-q2";
    } else {
        rep.mode = "standard";
    }

    const cabling::SparseMatrix rm = build_twist_matrix(params);
    const long m = rep.m;

    rep.row_counts.assign(static_cast<std::size_t>(m + 1), 0);
    rep.col_counts.assign(static_cast<std::size_t>(m + 1), 0);
    for (long c = 1; c <= m; ++c) {
        const auto& col = rm.cols[static_cast<std::size_t>(c - 1)];
        rep.col_counts[static_cast<std::size_t>(c)] = static_cast<long>(col.size());
        for (const auto& [row, elem] : col) {
            ++rep.row_counts[static_cast<std::size_t>(row)];
        }
    }
    rep.nonzero_total = rm.nonzero_count();
    rep.zero_rows_observed = observed_zero_rows(rm);

    // sparsity shape, checked in every mode
    {
        bool ok = true;
        for (long c = 1; c <= m; ++c) ok = ok && rep.col_counts[static_cast<std::size_t>(c)] <= 2;
        add_clause(rep, "columns-have-at-most-two-entries", as_clause(ok));
    }
    {
        bool ok = true;
        for (long r = 1; r <= m; ++r) ok = ok && rep.row_counts[static_cast<std::size_t>(r)] <= 2;
        add_clause(rep, "rows-have-at-most-two-entries", as_clause(ok));
    }
    {
        const auto& col1 = rm.cols[0];
        const bool ok = col1.size() == 1 && col1.count(1) == 1 &&
                        col1.at(1) == cyc::CycElem::from_monomial(cyc::Monomial{1, 0});
        add_clause(rep, "first-column-is-e1", as_clause(ok));
    }
    {
        bool ok = true;
        for (long c = 1; c <= m && ok; ++c) {
            const auto& col = rm.cols[static_cast<std::size_t>(c - 1)];
            if (col.size() == 2) {
                const long r1 = col.begin()->first;
                const long r2 = std::next(col.begin())->first;
                ok = (r2 - r1) <= 2;
            }
        }
        add_clause(rep, "column-support-gap-at-most-two", as_clause(ok));
    }
    {
        bool ok = true;
        std::ostringstream bad;
        for (long c = 1; c <= m; ++c) {
            for (const auto& [row, elem] : rm.cols[static_cast<std::size_t>(c - 1)]) {
                if (!elem.is_monomial()) {
                    if (ok) bad << "first non-monomial entry at (" << row << ", " << c << ")";
                    ok = false;
                }
            }
        }
        add_clause(rep, "entries-are-unit-monomials", as_clause(ok), bad.str());
    }

    // pivot column
    long pivot_col = 0; // l* + 1 when it indexes a column, else 0
    if (coprime) {
        try {
            const Pivot pivot = find_pivot(params);
            rep.pivot_l = pivot.l;
            rep.pivot_which = pivot.which;
            add_clause(rep, "pivot-exists-unique", ClauseResult::Pass,
                       "l=" + std::to_string(pivot.l) + " which=" + std::to_string(pivot.which));
        } catch (const InternalError& e) {
            add_clause(rep, "pivot-exists-unique", ClauseResult::Fail, e.what());
        }
        if (rep.pivot_l != 0) {
            if (!rep.large_r) {
                // below the threshold the pivot may sit anywhere in [1, m]
                add_clause(rep, "pivot-location-matches-mode", ClauseResult::Skip,
                           "no location constraint when r <= q + 6");
            } else {
                const bool expect_at_m = (params.q == 2);
                const bool ok = expect_at_m ? (rep.pivot_l == m) : (rep.pivot_l <= m - 1);
                add_clause(rep, "pivot-location-matches-mode", as_clause(ok),
                           expect_at_m ? "q=2 places the pivot at l=m for every admissible r"
                                       : "pivot must satisfy l <= m-1");
            }
            if (rep.pivot_l <= m - 1) {
                pivot_col = rep.pivot_l + 1;
                const auto& col = rm.cols[static_cast<std::size_t>(pivot_col - 1)];
                const bool single_at_2 = col.size() == 1 && col.count(2) == 1;
                add_clause(rep, "pivot-column-single-entry-row-2", as_clause(single_at_2));
            } else {
                add_clause(rep, "pivot-column-single-entry-row-2", ClauseResult::Skip,
                           "pivot at l=m indexes no column");
            }
        }
    } else {
        add_clause(rep, "pivot-exists-unique", ClauseResult::Skip, "gcd(r, q) > 1");
        add_clause(rep, "pivot-location-matches-mode", ClauseResult::Skip, "gcd(r, q) > 1");
        add_clause(rep, "pivot-column-single-entry-row-2", ClauseResult::Skip, "gcd(r, q) > 1");
    }

    if (coprime) {
        bool ok = true;
        for (long c = 1; c <= m; ++c) {
            const long expected = (c == 1 || c == pivot_col) ? 1 : 2;
            ok = ok && rep.col_counts[static_cast<std::size_t>(c)] == expected;
        }
        add_clause(rep, "column-counts-match", as_clause(ok));
    } else {
        add_clause(rep, "column-counts-match", ClauseResult::Skip, "gcd(r, q) > 1");
    }

    // single-entry rows and the closed forms for their positions
    const auto [flo, fhi] = single_row_formula(params.q, m);
    rep.formula_lo = flo;
    rep.formula_hi = fhi;
    if (coprime && rep.large_r) {
        std::vector<long> singles;
        for (long r = 1; r <= m; ++r) {
            if (rep.row_counts[static_cast<std::size_t>(r)] == 1) singles.push_back(r);
        }
        std::vector<long> expected;
        if (params.q == 1) {
            expected = {m - 1, m};
            rep.notes.push_back("q=1: literal single-row forms (m-1, m+1) clip to (m-1, m)");
        } else if (params.q == 2) {
            expected = {2};
            rep.notes.push_back("q=2: literal single-row forms (0, 2) clip to (2)");
        } else {
            expected = {flo, fhi};
        }
        rep.formula_scan_agree = (params.q >= 3) && singles == expected;
        if (singles.size() >= 1) {
            if (singles.size() == 1) {
                rep.single_row_hi = singles[0];
            } else {
                rep.single_row_lo = singles.front();
                rep.single_row_hi = singles.back();
            }
        }
        add_clause(rep, "single-rows-match-mode", as_clause(singles == expected));

        // columns holding those single entries
        auto col_of_row_single = [&](long row) -> long {
            if (row == 0) return 0;
            for (long c = 1; c <= m; ++c) {
                if (rm.cols[static_cast<std::size_t>(c - 1)].count(row)) return c;
            }
            return 0;
        };
        rep.col_of_single_lo = col_of_row_single(rep.single_row_lo);
        rep.col_of_single_hi = col_of_row_single(rep.single_row_hi);

        {
            bool ok = true;
            for (long r = 1; r <= m; ++r) {
                const bool is_single =
                    std::find(expected.begin(), expected.end(), r) != expected.end();
                const long want = is_single ? 1 : 2;
                ok = ok && rep.row_counts[static_cast<std::size_t>(r)] == want;
            }
            add_clause(rep, "row-counts-match", as_clause(ok));
        }
        {
            const long want = (params.q == 2) ? 2 * m - 1 : 2 * m - 2;
            add_clause(rep, "nonzero-total-matches", as_clause(rep.nonzero_total == want),
                       "expected " + std::to_string(want) + ", got " +
                           std::to_string(rep.nonzero_total));
        }

        // the column supported on the last two rows
        try {
            const auto adjacent = find_adjacent_column(rm);
            rep.adjacent_col = adjacent.value_or(0);
            const bool expect_present = params.q >= 2;
            add_clause(rep, "adjacent-column-matches-mode",
                       as_clause(adjacent.has_value() == expect_present),
                       expect_present ? "one column must live on rows {m-1, m}"
                                      : "q=1 has no column on rows {m-1, m}");
        } catch (const InternalError& e) {
            add_clause(rep, "adjacent-column-matches-mode", ClauseResult::Fail, e.what());
        }

        if (params.q == 2) {
            add_clause(rep, "single-columns-distinct", ClauseResult::Skip,
                       "only one single-entry row when q=2");
        } else {
            add_clause(rep, "single-columns-distinct",
                       as_clause(rep.col_of_single_lo != 0 && rep.col_of_single_hi != 0 &&
                                 rep.col_of_single_lo != rep.col_of_single_hi));
        }
        {
            // designated coincidences: the lower single entry sits in column 1
            // exactly when q=4 and in the pivot column exactly when q=6
            const bool q4_ok = (rep.col_of_single_lo == 1) == (params.q == 4);
            const bool q6_ok =
                (pivot_col != 0 && rep.col_of_single_lo == pivot_col) == (params.q == 6);
            const bool hi_ok =
                rep.col_of_single_hi != 1 &&
                (pivot_col == 0 || rep.col_of_single_hi != pivot_col);
            add_clause(rep, "single-column-coincidences", as_clause(q4_ok && q6_ok && hi_ok));
        }
    } else {
        for (const char* name :
             {"single-rows-match-mode", "row-counts-match", "nonzero-total-matches",
              "adjacent-column-matches-mode", "single-columns-distinct",
              "single-column-coincidences"}) {
            add_clause(rep, name, ClauseResult::Skip,
                       coprime ? "r <= q + 6" : "gcd(r, q) > 1");
        }
    }

    // component pairing audit over f_1 .. f_(m-1)
    if (coprime) {
        std::vector<Component> comps;
        for (long l = 1; l <= m - 1; ++l) {
            for (int sgn : {1, -1}) {
                Component c = classify(l, sgn, params);
                if (c.value != 0) comps.push_back(c);
            }
        }
        std::map<long, long> per_value;
        per_value[1] += 1; // f_0 contributes e_1
        for (const auto& c : comps) per_value[c.value] += 1;
        for (const auto& [value, count] : per_value) {
            if (count > 2) ++rep.pairing.indices_over_two;
        }
        for (std::size_t a = 0; a < comps.size(); ++a) {
            for (std::size_t b = a + 1; b < comps.size(); ++b) {
                const Component& c1 = comps[a];
                const Component& c2 = comps[b];
                if (c1.l == c2.l || c1.value != c2.value) continue;
                ++rep.pairing.checked_pairs;
                const bool same_sign = c1.sign == c2.sign;
                const bool same_form = c1.form == c2.form;
                const bool same_k_parity = (c1.k % 2) == (c2.k % 2);
                if (same_sign) {
                    ++rep.pairing.equal_sign_pairings;
                    if (same_form) ++rep.pairing.violations;
                    if (same_k_parity) ++rep.pairing.equal_sign_same_k_parity;
                } else {
                    ++rep.pairing.mixed_sign_pairings;
                    if (!same_form) ++rep.pairing.violations;
                    if (!same_k_parity) ++rep.pairing.mixed_sign_cross_k_parity;
                }
            }
        }
        add_clause(rep, "pairing-form-exclusions", as_clause(rep.pairing.violations == 0),
                   "equal-sign pairings must mix g/h forms; mixed-sign pairings must not");
        add_clause(rep, "pairing-at-most-two-per-row",
                   as_clause(rep.pairing.indices_over_two == 0));
    } else {
        add_clause(rep, "pairing-form-exclusions", ClauseResult::Skip, "gcd(r, q) > 1");
        add_clause(rep, "pairing-at-most-two-per-row", ClauseResult::Skip, "gcd(r, q) > 1");
    }

    // zero rows
    if (!coprime) {
        rep.zero_rows_predicted = predicted_zero_rows(params);
        bool ok = true;
        for (long row : rep.zero_rows_predicted) {
            ok = ok && std::find(rep.zero_rows_observed.begin(), rep.zero_rows_observed.end(),
                                 row) != rep.zero_rows_observed.end();
        }
        add_clause(rep, "predicted-zero-rows-vanish", as_clause(ok));
        if (rep.zero_rows_observed.size() > rep.zero_rows_predicted.size()) {
            rep.notes.push_back("matrix has zero rows beyond the predicted multiples of gcd(r, q)");
        }
    } else {
        add_clause(rep, "predicted-zero-rows-vanish", ClauseResult::Skip, "gcd(r, q) = 1");
    }

    // determinant by cofactor expansion
    rep.cofactor = cofactor_det(rm, params.sys);
    if (coprime && rep.large_r) {
        add_clause(rep, "cofactor-expansion-completes", as_clause(rep.cofactor.status == "ok"),
                   "status: " + rep.cofactor.status);
        if (params.q >= 3) {
            rep.schedule_applicable = true;
            try {
                const Schedule sched = elimination_schedule(params.q, m);
                rep.schedule_amended = sched.amended;
                std::string why;
                rep.schedule_ok = schedule_runs(rm, sched.rows, &why);
                add_clause(rep, "elimination-schedule-compatible", as_clause(rep.schedule_ok),
                           why);
            } catch (const InternalError& e) {
                add_clause(rep, "elimination-schedule-compatible", ClauseResult::Fail, e.what());
            }
        } else {
            add_clause(rep, "elimination-schedule-compatible", ClauseResult::Skip,
                       "no schedule is defined for q < 3");
        }
    } else if (!coprime) {
        const bool singular = !rep.zero_rows_observed.empty();
        add_clause(rep, "cofactor-matches-singularity",
                   as_clause(singular ? rep.cofactor.status == "zero-row"
                                      : rep.cofactor.status == "ok"),
                   "status: " + rep.cofactor.status);
        add_clause(rep, "elimination-schedule-compatible", ClauseResult::Skip, "gcd(r, q) > 1");
    } else {
        add_clause(rep, "cofactor-expansion-completes", ClauseResult::Skip,
                   "r <= q + 6: expansion recorded but not required");
        add_clause(rep, "elimination-schedule-compatible", ClauseResult::Skip, "r <= q + 6");
    }

    return rep;
}

} // namespace cableops::structure
