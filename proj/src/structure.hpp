#pragma once

#include "cabling.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cableops::structure {

enum class ClauseResult { Pass, Fail, Skip };
const char* to_string(ClauseResult v);

struct Clause {
    std::string name;
    ClauseResult result = ClauseResult::Skip;
    std::string detail;
};

// Bookkeeping for one component of f_l. Write ql + sign = k*r + rem with
// 0 <= rem < r. The component reduces to row `value`: rem itself when
// rem <= m (form 'g'), r - rem when rem > m (form 'h'); value 0 means the
// component vanishes. The coefficient picks up a minus sign iff k is odd.
struct Component {
    long l = 0;
    int sign = 0;
    long k = 0;
    long rem = 0;
    char form = 'g';
    long value = 0;
    skein::ReducedIndex reduced;
};

Component classify(long l, int sign, const cabling::CableParams& params);

// The unique l in [1, m] with r | ql+1 or r | ql-1 (which exists exactly
// when gcd(r, q) = 1). Found both by scanning and from q^-1 mod r; the two
// must agree.
struct Pivot {
    long l = 0;
    int which = 0; // +1 if r | ql+1, -1 if r | ql-1
};

Pivot find_pivot(const cabling::CableParams& params);

// Closed forms for the two rows holding a single nonzero entry, taken
// literally: q even -> (q/2 - 1, q/2 + 1); q odd -> (m - (q+1)/2,
// m - (q-3)/2). For q in {1, 2} one of the values leaves [1, m] and the
// actual single rows differ; the verifier records that discrepancy.
std::pair<long, long> single_row_formula(long q, long m);

// The unique column supported exactly on rows {m-1, m}. Absent when q = 1;
// more than one such column is a structure violation.
std::optional<long> find_adjacent_column(const cabling::SparseMatrix& rm);

// Rows that vanish identically when d = gcd(r, q) > 1: the multiples of d
// in [1, m]. This is a guaranteed subset of the actual zero rows; callers
// compare against observed_zero_rows for the full picture.
std::vector<long> predicted_zero_rows(const cabling::CableParams& params);
std::vector<long> observed_zero_rows(const cabling::SparseMatrix& rm);

struct Elimination {
    long row = 0;
    long col = 0;
    cyc::Monomial entry;
};

struct CofactorResult {
    std::string status; // "ok" | "zero-row" | "stall"
    cyc::Monomial det;  // zero monomial unless status == "ok"
    long zero_row = 0;  // certificate row when status == "zero-row"
    std::vector<Elimination> trace;
};

// Exact determinant by repeatedly expanding along a row with a single
// surviving entry. The cofactor sign at each step comes from the positions
// of the pivot row and column among the rows/columns still alive in the
// current minor. A row with no surviving entries certifies det = 0; if no
// single-entry row exists the expansion stalls, which for these matrices
// signals a structure violation.
CofactorResult cofactor_det(const cabling::SparseMatrix& rm, const cyc::RootSystem& sys);

struct Schedule {
    std::vector<long> rows;
    bool amended = false; // q = 2 mod 4 with odd m: final descending run completed to row m
};

// The elimination order determined by (q mod 4, parity of m). Requires
// q >= 3 and r > q + 6 so the single-row closed forms are in range.
Schedule elimination_schedule(long q, long m);

// Replay the expansion following `order`, requiring each listed row to
// hold exactly one surviving entry at its turn.
bool schedule_runs(const cabling::SparseMatrix& rm, const std::vector<long>& order,
                   std::string* why = nullptr);

struct PairingStats {
    long checked_pairs = 0;
    long violations = 0;
    long indices_over_two = 0;
    long equal_sign_pairings = 0; // mixed g/h form, by exclusion
    long mixed_sign_pairings = 0; // same form, by exclusion
    long equal_sign_same_k_parity = 0;
    long mixed_sign_cross_k_parity = 0;
};

struct StructureReport {
    long p = 0, q = 0, r = 0, m = 0;
    long gcd_rq = 1;
    bool large_r = true;
    std::string mode; // standard | degenerate-q1 | degenerate-q2 | noncoprime | small-r

    long pivot_l = 0;
    int pivot_which = 0;
    long adjacent_col = 0; // 0 = absent
    long single_row_lo = 0, single_row_hi = 0; // rows found by scanning; 0 = absent
    long formula_lo = 0, formula_hi = 0;       // literal closed forms
    bool formula_scan_agree = true;
    long col_of_single_lo = 0, col_of_single_hi = 0;
    long nonzero_total = 0;
    std::vector<long> row_counts, col_counts; // index 0 unused
    std::vector<long> zero_rows_predicted, zero_rows_observed;
    PairingStats pairing;
    CofactorResult cofactor;
    bool schedule_applicable = false;
    bool schedule_ok = false;
    bool schedule_amended = false;
    std::vector<Clause> clauses;
    std::vector<std::string> notes;

    bool all_pass() const;
    const Clause* clause(const std::string& name) const;
};

StructureReport verify_structure(const cabling::CableParams& params);

} // namespace cableops::structure
