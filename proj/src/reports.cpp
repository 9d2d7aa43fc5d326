#include "reports.hpp"

#include "errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <numeric>

namespace cableops::reports {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json monomial_json(const cyc::Monomial& a) {
    if (a.is_zero()) return nullptr;
    return json{{"sign", a.sign}, {"exp", a.exp}};
}

json cofactor_json(const structure::CofactorResult& c, bool with_trace) {
    json j;
    j["status"] = c.status;
    j["det"] = monomial_json(c.det);
    j["zero_row"] = c.zero_row == 0 ? json(nullptr) : json(c.zero_row);
    if (with_trace) {
        json trace = json::array();
        for (const auto& e : c.trace) {
            trace.push_back(json{{"row", e.row},
                                 {"col", e.col},
                                 {"sign", e.entry.sign},
                                 {"exp", e.entry.exp}});
        }
        j["trace"] = std::move(trace);
    }
    j["trace_length"] = static_cast<long>(c.trace.size());
    return j;
}

json fit_json(const analysis::GrowthFit& fit) {
    json j;
    j["ok"] = fit.ok;
    j["kind"] = fit.kind;
    if (fit.ok) {
        j["slope"] = fit.slope;
        j["intercept"] = fit.intercept;
        j["residual_rms"] = fit.residual_rms;
        j["n_used"] = fit.n_used;
    } else {
        j["error"] = fit.error;
    }
    return j;
}

json records_json(const std::vector<analysis::SweepRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) {
        json j;
        j["p"] = rec.p;
        j["q"] = rec.q;
        j["r"] = rec.r;
        j["m"] = rec.m;
        j["status"] = rec.status;
        if (rec.status == "ok") {
            j["det_modulus"] = rec.det_modulus;
            j["inv_norm"] = rec.inv_norm;
            j["rt_norm"] = rec.rt_norm;
            j["tv_cable"] = rec.tv_cable;
        } else {
            j["det_modulus"] = nullptr;
            j["inv_norm"] = nullptr;
            j["rt_norm"] = nullptr;
            j["tv_cable"] = nullptr;
            if (!rec.detail.empty()) j["detail"] = rec.detail;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string records_csv(const std::vector<analysis::SweepRecord>& records) {
    std::string out = "p,q,r,m,det_modulus,inv_norm,rt_norm,tv_cable,status\n";
    for (const auto& rec : records) {
        out += std::to_string(rec.p) + "," + std::to_string(rec.q) + "," +
               std::to_string(rec.r) + "," + std::to_string(rec.m) + ",";
        if (rec.status == "ok") {
            out += fmt_double(rec.det_modulus) + "," + fmt_double(rec.inv_norm) + "," +
                   fmt_double(rec.rt_norm) + "," + fmt_double(rec.tv_cable);
        } else {
            out += ",,,";
        }
        out += "," + rec.status + "\n";
    }
    return out;
}

std::string gnuplot_text(const std::vector<analysis::SweepRecord>& records, bool tv) {
    std::string out = tv ? "# r tv_cable\n" : "# r inv_norm\n";
    for (const auto& rec : records) {
        if (rec.status != "ok") continue;
        out += std::to_string(rec.r) + "\t" + fmt_double(tv ? rec.tv_cable : rec.inv_norm) + "\n";
    }
    return out;
}

json sweep_json_obj(const analysis::SweepResult& res, bool with_color) {
    json j;
    j["p"] = res.p;
    j["q"] = res.q;
    j["r_min"] = res.r_min;
    j["r_max"] = res.r_max;
    if (with_color) j["color"] = res.color;
    j["records"] = records_json(res.records);
    j["fit"] = fit_json(res.fit);
    return j;
}

} // namespace

std::string matrix_json(const cabling::CableParams& params) {
    const auto rm = cabling::build_twist_matrix(params);
    json entries = json::array();
    for (long c = 1; c <= rm.m; ++c) {
        for (const auto& [row, elem] : rm.cols[static_cast<std::size_t>(c - 1)]) {
            for (const auto& [exp, coeff] : elem.terms()) {
                entries.push_back(json{{"row", row},
                                       {"col", c},
                                       {"sign", static_cast<int>(coeff)},
                                       {"exp", exp}});
            }
        }
    }
    json j;
    j["p"] = params.p;
    j["q"] = params.q;
    j["r"] = params.sys.r;
    j["m"] = params.sys.m;
    j["gcd_rq"] = params.gcd_rq();
    j["entries"] = std::move(entries);
    return j.dump();
}

std::string verify_json(const cabling::CableParams& params) {
    const structure::StructureReport rep = structure::verify_structure(params);
    json j;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["r"] = rep.r;
    j["m"] = rep.m;
    j["gcd_rq"] = rep.gcd_rq;
    j["large_r"] = rep.large_r;
    j["mode"] = rep.mode;
    j["pivot"] = rep.pivot_l == 0
                     ? json(nullptr)
                     : json{{"l", rep.pivot_l}, {"which", rep.pivot_which}};
    j["adjacent_col"] = rep.adjacent_col == 0 ? json(nullptr) : json(rep.adjacent_col);
    j["single_rows"] = json{
        {"scan_lo", rep.single_row_lo == 0 ? json(nullptr) : json(rep.single_row_lo)},
        {"scan_hi", rep.single_row_hi == 0 ? json(nullptr) : json(rep.single_row_hi)},
        {"formula_lo", rep.formula_lo},
        {"formula_hi", rep.formula_hi},
        {"formula_scan_agree", rep.formula_scan_agree},
        {"col_lo", rep.col_of_single_lo == 0 ? json(nullptr) : json(rep.col_of_single_lo)},
        {"col_hi", rep.col_of_single_hi == 0 ? json(nullptr) : json(rep.col_of_single_hi)},
    };
    j["nonzero_total"] = rep.nonzero_total;
    j["row_counts"] = std::vector<long>(rep.row_counts.begin() + 1, rep.row_counts.end());
    j["col_counts"] = std::vector<long>(rep.col_counts.begin() + 1, rep.col_counts.end());
    j["zero_rows"] = json{{"predicted", rep.zero_rows_predicted},
                          {"observed", rep.zero_rows_observed}};
    j["pairing"] = json{
        {"checked_pairs", rep.pairing.checked_pairs},
        {"violations", rep.pairing.violations},
        {"indices_over_two", rep.pairing.indices_over_two},
        {"equal_sign_pairings", rep.pairing.equal_sign_pairings},
        {"mixed_sign_pairings", rep.pairing.mixed_sign_pairings},
        {"equal_sign_same_k_parity", rep.pairing.equal_sign_same_k_parity},
        {"mixed_sign_cross_k_parity", rep.pairing.mixed_sign_cross_k_parity},
    };
    j["cofactor"] = cofactor_json(rep.cofactor, false);
    j["schedule"] = json{{"applicable", rep.schedule_applicable},
                         {"ok", rep.schedule_ok},
                         {"amended", rep.schedule_amended}};
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
        json cj;
        cj["name"] = c.name;
        cj["result"] = structure::to_string(c.result);
        if (!c.detail.empty()) cj["detail"] = c.detail;
        clauses.push_back(std::move(cj));
    }
    j["clauses"] = std::move(clauses);
    j["notes"] = rep.notes;
    j["all_pass"] = rep.all_pass();
    return j.dump();
}

std::string det_json(const cabling::CableParams& params) {
    if (params.coprime_r() && !params.large_r()) {
        throw PreconditionError(
            "determinant reporting requires r > q + 6 when gcd(r, q) = 1; "
            "use the small-r exploration instead");
    }
    const auto rm = cabling::build_twist_matrix(params);
    const auto cof = structure::cofactor_det(rm, params.sys);
    const std::complex<double> numeric =
        analysis::numeric_det(analysis::eval_sparse(rm, params.sys));

    json j;
    j["p"] = params.p;
    j["q"] = params.q;
    j["r"] = params.sys.r;
    j["m"] = params.sys.m;
    j["gcd_rq"] = params.gcd_rq();
    j["cofactor"] = cofactor_json(cof, true);
    j["numeric"] = json{{"re", numeric.real()},
                        {"im", numeric.imag()},
                        {"modulus", std::abs(numeric)}};
    if (cof.status == "ok") {
        const std::complex<double> exact = eval_complex(cof.det, params.sys);
        const double diff = std::abs(exact - numeric);
        j["agreement"] = json{{"complex_abs_diff", diff}, {"within_tolerance", diff <= 1e-9}};
    } else {
        j["agreement"] = json{{"complex_abs_diff", nullptr},
                              {"within_tolerance", std::abs(numeric) <= 1e-9}};
    }
    std::vector<long> predicted;
    if (!params.coprime_r()) predicted = structure::predicted_zero_rows(params);
    j["zero_rows"] = json{{"predicted", predicted},
                          {"observed", structure::observed_zero_rows(rm)}};
    if (params.coprime_r() && params.q >= 3) {
        const auto sched = structure::elimination_schedule(params.q, params.sys.m);
        std::string why;
        const bool ok = structure::schedule_runs(rm, sched.rows, &why);
        j["schedule"] = json{
            {"applicable", true}, {"ok", ok}, {"amended", sched.amended}, {"rows", sched.rows}};
        if (!ok) j["schedule"]["why"] = why;
    } else {
        j["schedule"] = json{{"applicable", false}, {"ok", false}, {"amended", false}};
    }
    return j.dump();
}

std::string sweep_norm_json(long p, long q, long r_min, long r_max) {
    return sweep_json_obj(analysis::norm_growth_sweep(p, q, r_min, r_max), false).dump();
}

std::string sweep_norm_csv(long p, long q, long r_min, long r_max) {
    return records_csv(analysis::norm_growth_sweep(p, q, r_min, r_max).records);
}

std::string sweep_tv_json(long p, long q, long r_min, long r_max, long color) {
    return sweep_json_obj(analysis::tv_sweep(p, q, r_min, r_max, color), true).dump();
}

std::string sweep_tv_csv(long p, long q, long r_min, long r_max, long color) {
    return records_csv(analysis::tv_sweep(p, q, r_min, r_max, color).records);
}

std::string gnuplot_norm(long p, long q, long r_min, long r_max) {
    return gnuplot_text(analysis::norm_growth_sweep(p, q, r_min, r_max).records, false);
}

std::string gnuplot_tv(long p, long q, long r_min, long r_max, long color) {
    return gnuplot_text(analysis::tv_sweep(p, q, r_min, r_max, color).records, true);
}

std::string sandwich_json(long p, long q, long r_min, long r_max,
                          unsigned long long seed, long n_random) {
    const analysis::SandwichResult res =
        analysis::sandwich_check(p, q, r_min, r_max, seed, n_random);
    json vectors = json::array();
    for (std::size_t vi = 0; vi < res.vectors.size(); ++vi) {
        const auto& sv = res.vectors[vi];
        vectors.push_back(json{
            {"label", sv.label},
            {"slope", sv.slope},
            {"upper_head_max", sv.upper_head_max},
            {"upper_tail_max", sv.upper_tail_max},
            {"lower_head_max", sv.lower_head_max},
            {"lower_tail_max", sv.lower_tail_max},
            {"bounded", sv.bounded},
            {"ratios", res.ratios[vi]},
        });
    }
    json j;
    j["p"] = res.p;
    j["q"] = res.q;
    j["r_min"] = res.r_min;
    j["r_max"] = res.r_max;
    j["seed"] = res.seed;
    j["n_random"] = res.n_random;
    j["exponent"] = res.exponent;
    j["r_values"] = res.r_values;
    j["vectors"] = std::move(vectors);
    j["all_bounded"] = res.all_bounded;
    return j.dump();
}

std::string explore_small_r_json(long p, long q) {
    if (q < 1 || std::gcd(p, q) != 1) {
        throw std::invalid_argument("cable windings must be coprime with q >= 1");
    }
    json rows = json::array();
    for (long r = 3; r <= q + 6; r += 2) {
        json row;
        row["r"] = r;
        row["m"] = (r - 1) / 2;
        row["gcd_rq"] = std::gcd(r, q);
        const auto params = cabling::CableParams::make(p, q, r);
        const auto rm = cabling::build_twist_matrix(params);
        const auto cof = structure::cofactor_det(rm, params.sys);
        const std::complex<double> numeric =
            analysis::numeric_det(analysis::eval_sparse(rm, params.sys));
        row["cofactor"] = cofactor_json(cof, false);
        row["numeric_modulus"] = std::abs(numeric);
        if (cof.status == "ok") {
            row["matches_numeric"] =
                std::abs(eval_complex(cof.det, params.sys) - numeric) <= 1e-9;
        } else {
            row["matches_numeric"] = std::abs(numeric) <= 1e-9;
        }
        const auto rep = structure::verify_structure(params);
        long passed = 0, failed = 0, skipped = 0;
        for (const auto& c : rep.clauses) {
            switch (c.result) {
                case structure::ClauseResult::Pass: ++passed; break;
                case structure::ClauseResult::Fail: ++failed; break;
                case structure::ClauseResult::Skip: ++skipped; break;
            }
        }
        row["mode"] = rep.mode;
        row["clauses_passed"] = passed;
        row["clauses_failed"] = failed;
        row["clauses_skipped"] = skipped;
        row["all_pass"] = rep.all_pass();
        rows.push_back(std::move(row));
    }
    json j;
    j["p"] = p;
    j["q"] = q;
    j["r_range"] = json{{"min", 3}, {"max", q + 6}};
    j["rows"] = std::move(rows);
    return j.dump();
}

} // namespace cableops::reports
