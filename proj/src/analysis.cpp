#include "analysis.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace cableops::analysis {

Matrix eval_sparse(const cabling::SparseMatrix& rm, const cyc::RootSystem& sys) {
    Matrix a = Matrix::Zero(rm.m, rm.m);
    for (long c = 1; c <= rm.m; ++c) {
        for (const auto& [row, elem] : rm.cols[static_cast<std::size_t>(c - 1)]) {
            a(row - 1, c - 1) = eval_complex(elem, sys);
        }
    }
    return a;
}

Matrix eval_columns(const std::vector<skein::SkeinVector>& cols, long m,
                    const cyc::RootSystem& sys) {
    Matrix a = Matrix::Zero(m, m);
    for (long c = 1; c <= static_cast<long>(cols.size()); ++c) {
        for (const auto& [row, elem] : cols[static_cast<std::size_t>(c - 1)]) {
            a(row - 1, c - 1) = eval_complex(elem, sys);
        }
    }
    return a;
}

std::complex<double> numeric_det(const Matrix& a) {
    if (a.rows() == 0) return {1.0, 0.0};
    return Eigen::PartialPivLU<Matrix>(a).determinant();
}

PowerIteration operator_norm(const Matrix& a) {
    PowerIteration out;
    const long n = a.cols();
    if (n == 0) {
        out.converged = true;
        return out;
    }
    const Matrix gram = a.adjoint() * a;
    Eigen::VectorXcd x = Eigen::VectorXcd::Constant(
        n, std::complex<double>(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    double lambda_prev = -1.0;
    constexpr long kMaxIter = 10000;
    for (long iter = 1; iter <= kMaxIter; ++iter) {
        const Eigen::VectorXcd y = gram * x;
        const double lambda = std::max(0.0, std::real(x.dot(y)));
        const double ny = y.norm();
        out.iterations = iter;
        if (ny == 0.0) {
            out.norm = 0.0;
            out.converged = true;
            return out;
        }
        x = y / ny;
        if (lambda_prev >= 0.0 && std::abs(lambda - lambda_prev) <= 1e-10 * std::max(lambda, 1e-300)) {
            out.norm = std::sqrt(lambda);
            out.converged = true;
            return out;
        }
        lambda_prev = lambda;
    }
    out.norm = std::sqrt(std::max(lambda_prev, 0.0));
    out.converged = false;
    return out;
}

Matrix inverse_from_factors(const cabling::CableParams& params,
                            const cabling::SparseMatrix& rm) {
    if (!params.coprime_r()) {
        throw PreconditionError("the cable operator is singular when gcd(r, q) > 1");
    }
    const auto& sys = params.sys;
    const long m = sys.m;
    const Matrix rm_eval = eval_sparse(rm, sys);
    Eigen::PartialPivLU<Matrix> lu(rm_eval);
    if (std::abs(lu.determinant()) < 1e-12) {
        throw InternalError("twist matrix is numerically singular despite gcd(r, q) = 1");
    }
    Matrix x = lu.inverse();

    const cabling::InverseFactors inv = cabling::inverse_factors(params);
    for (long l = 0; l <= m - 1; ++l) {
        x.row(l) *= eval_complex(inv.d1_inv[static_cast<std::size_t>(l)], sys);
    }
    // U^-1 = I - sum of unit entries at (i, i+2); ascending order leaves
    // each source row untouched until after it has been consumed
    for (long i = 1; i + 2 <= m; ++i) {
        x.row(i - 1) -= x.row(i + 1);
    }
    for (long i = 1; i <= m; ++i) {
        x.row(i - 1) *= eval_complex(inv.d2_inv[static_cast<std::size_t>(i - 1)], sys);
    }
    return x;
}

double inverse_residual(const Matrix& rt, const Matrix& x) {
    const Matrix resid = rt * x - Matrix::Identity(rt.rows(), rt.cols());
    return resid.cwiseAbs().maxCoeff();
}

double image_norm_squared(long color, const cabling::CableParams& params) {
    const skein::SkeinVector col = cabling::operator_column(color, params);
    double acc = 0.0;
    for (const auto& [row, elem] : col) {
        acc += std::norm(eval_complex(elem, params.sys));
    }
    return acc;
}

namespace {

struct Line {
    double slope = 0, intercept = 0, rms = 0;
};

Line ols(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    Line line;
    line.slope = sxy / sxx;
    line.intercept = my - line.slope * mx;
    double se = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (line.intercept + line.slope * xs[i]);
        se += e * e;
    }
    line.rms = std::sqrt(se / n);
    return line;
}

std::vector<SweepRecord> sweep_records(long p, long q, long r_min, long r_max, long color) {
    if (q < 1 || std::gcd(p, q) != 1) {
        throw std::invalid_argument("cable windings must be coprime with q >= 1");
    }
    if (r_min < 3 || r_min > r_max) {
        throw std::invalid_argument("need 3 <= r_min <= r_max");
    }
    if (color < 1) {
        throw std::invalid_argument("color must be >= 1");
    }
    std::vector<SweepRecord> records;
    for (long r = (r_min % 2 == 0) ? r_min + 1 : r_min; r <= r_max; r += 2) {
        SweepRecord rec;
        rec.p = p;
        rec.q = q;
        rec.r = r;
        rec.m = (r - 1) / 2;
        if (std::gcd(r, q) != 1) {
            rec.status = "skipped-gcd";
            records.push_back(rec);
            continue;
        }
        if (r <= q + 6) {
            rec.status = "skipped-small-r";
            records.push_back(rec);
            continue;
        }
        try {
            const auto params = cabling::CableParams::make(p, q, r);
            const auto rm = cabling::build_twist_matrix(params);
            const auto op = cabling::cable_operator(params);
            const Matrix rt_eval = eval_columns(op.cols, op.m, params.sys);
            rec.det_modulus = std::abs(numeric_det(eval_sparse(rm, params.sys)));
            const Matrix x = inverse_from_factors(params, rm);
            const PowerIteration pi_inv = operator_norm(x);
            const PowerIteration pi_rt = operator_norm(rt_eval);
            if (!pi_inv.converged || !pi_rt.converged) {
                rec.status = "failed";
                rec.detail = "power iteration did not converge";
                records.push_back(rec);
                continue;
            }
            rec.inv_norm = pi_inv.norm;
            rec.rt_norm = pi_rt.norm;
            if (color > params.sys.m) {
                rec.status = "failed";
                rec.detail = "color exceeds the matrix size m";
            } else {
                rec.tv_cable = image_norm_squared(color, params);
                rec.status = "ok";
            }
        } catch (const std::exception& e) {
            rec.status = "failed";
            rec.detail = e.what();
        }
        records.push_back(rec);
    }
    return records;
}

GrowthFit fit_records(const std::vector<SweepRecord>& records, bool tv_kind) {
    GrowthFit fit;
    fit.kind = tv_kind ? "scaled-log-linear" : "log-log";
    std::vector<const SweepRecord*> ok;
    for (const auto& rec : records) {
        if (rec.status == "ok") ok.push_back(&rec);
    }
    if (ok.empty()) {
        fit.error = "no admissible records";
        return fit;
    }
    const double r_lo = static_cast<double>(ok.front()->r);
    const double r_hi = static_cast<double>(ok.back()->r);
    const double threshold = r_lo + (r_hi - r_lo) / 3.0;
    std::vector<double> xs, ys;
    for (const auto* rec : ok) {
        if (static_cast<double>(rec->r) < threshold) continue;
        if (tv_kind) {
            xs.push_back(static_cast<double>(rec->r));
            ys.push_back(2.0 * std::numbers::pi / static_cast<double>(rec->r) *
                         std::log(rec->tv_cable));
        } else {
            xs.push_back(std::log(static_cast<double>(rec->r)));
            ys.push_back(std::log(rec->inv_norm));
        }
    }
    if (xs.size() < 5) {
        fit.error = "need at least 5 records in the fit window, have " +
                    std::to_string(xs.size());
        return fit;
    }
    const Line line = ols(xs, ys);
    fit.ok = true;
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.residual_rms = line.rms;
    fit.n_used = static_cast<long>(xs.size());
    return fit;
}

} // namespace

SweepResult norm_growth_sweep(long p, long q, long r_min, long r_max) {
    SweepResult res;
    res.p = p;
    res.q = q;
    res.r_min = r_min;
    res.r_max = r_max;
    res.color = 1;
    res.records = sweep_records(p, q, r_min, r_max, 1);
    res.fit = fit_records(res.records, false);
    return res;
}

SweepResult tv_sweep(long p, long q, long r_min, long r_max, long color) {
    SweepResult res;
    res.p = p;
    res.q = q;
    res.r_min = r_min;
    res.r_max = r_max;
    res.color = color;
    res.records = sweep_records(p, q, r_min, r_max, color);
    res.fit = fit_records(res.records, true);
    return res;
}

SandwichResult sandwich_check(long p, long q, long r_min, long r_max,
                              unsigned long long seed, long n_random) {
    if (q < 1 || std::gcd(p, q) != 1) {
        throw std::invalid_argument("cable windings must be coprime with q >= 1");
    }
    if (r_min < 3 || r_min > r_max) {
        throw std::invalid_argument("need 3 <= r_min <= r_max");
    }
    if (n_random < 0) {
        throw std::invalid_argument("n_random must be >= 0");
    }
    SandwichResult res;
    res.p = p;
    res.q = q;
    res.r_min = r_min;
    res.r_max = r_max;
    res.seed = seed;
    res.n_random = n_random;

    for (long r = (r_min % 2 == 0) ? r_min + 1 : r_min; r <= r_max; r += 2) {
        if (std::gcd(r, q) == 1 && r > q + 6) res.r_values.push_back(r);
    }
    if (res.r_values.empty()) {
        throw PreconditionError("no admissible r in [" + std::to_string(r_min) + ", " +
                                std::to_string(r_max) + "]");
    }
    const long m_min = (res.r_values.front() - 1) / 2;
    const long k = std::min<long>(6, m_min);

    // test vectors as dense coefficient lists over e_1..e_K
    std::vector<std::vector<std::complex<double>>> vecs;
    for (long i = 1; i <= k; ++i) {
        std::vector<std::complex<double>> v(static_cast<std::size_t>(k), {0.0, 0.0});
        v[static_cast<std::size_t>(i - 1)] = {1.0, 0.0};
        vecs.push_back(std::move(v));
        res.vectors.push_back(SandwichVector{"e" + std::to_string(i)});
    }
    // engine draws mapped through an explicit Box-Muller transform so the
    // stream is identical on every platform
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    };
    for (long t = 1; t <= n_random; ++t) {
        std::vector<std::complex<double>> v;
        v.reserve(static_cast<std::size_t>(k));
        double norm2 = 0.0;
        for (long i = 0; i < k; ++i) {
            const double u1 = uniform01();
            const double u2 = uniform01();
            const double rad = std::sqrt(-2.0 * std::log(u1));
            const std::complex<double> z{rad * std::cos(2.0 * std::numbers::pi * u2),
                                         rad * std::sin(2.0 * std::numbers::pi * u2)};
            norm2 += std::norm(z);
            v.push_back(z);
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& z : v) z *= scale;
        vecs.push_back(std::move(v));
        res.vectors.push_back(SandwichVector{"random-" + std::to_string(t)});
    }

    res.ratios.assign(vecs.size(), {});
    for (const long r : res.r_values) {
        const auto params = cabling::CableParams::make(p, q, r);
        const long m = params.sys.m;
        // only the first K operator columns matter for these vectors
        std::vector<Eigen::VectorXcd> cols;
        for (long i = 1; i <= k; ++i) {
            Eigen::VectorXcd col = Eigen::VectorXcd::Zero(m);
            for (const auto& [row, elem] : cabling::operator_column(i, params)) {
                col(row - 1) = eval_complex(elem, params.sys);
            }
            cols.push_back(std::move(col));
        }
        for (std::size_t vi = 0; vi < vecs.size(); ++vi) {
            Eigen::VectorXcd image = Eigen::VectorXcd::Zero(m);
            double vnorm2 = 0.0;
            for (long i = 0; i < k; ++i) {
                image += vecs[vi][static_cast<std::size_t>(i)] * cols[static_cast<std::size_t>(i)];
                vnorm2 += std::norm(vecs[vi][static_cast<std::size_t>(i)]);
            }
            res.ratios[vi].push_back(image.squaredNorm() / vnorm2);
        }
    }

    // slopes, growth exponent, and the two-sided boundedness probe
    double max_abs_slope = 0.0;
    std::vector<double> log_r;
    for (const long r : res.r_values) log_r.push_back(std::log(static_cast<double>(r)));
    for (std::size_t vi = 0; vi < vecs.size(); ++vi) {
        std::vector<double> log_ratio;
        for (const double x : res.ratios[vi]) log_ratio.push_back(std::log(x));
        if (log_r.size() >= 2) {
            res.vectors[vi].slope = ols(log_r, log_ratio).slope;
        }
        max_abs_slope = std::max(max_abs_slope, std::abs(res.vectors[vi].slope));
    }
    res.exponent = static_cast<long>(std::ceil(max_abs_slope - 1e-12));

    const double r_lo = static_cast<double>(res.r_values.front());
    const double r_hi = static_cast<double>(res.r_values.back());
    const double head_threshold = r_lo + 2.0 * (r_hi - r_lo) / 3.0;
    res.all_bounded = true;
    for (std::size_t vi = 0; vi < vecs.size(); ++vi) {
        auto& sv = res.vectors[vi];
        for (std::size_t ri = 0; ri < res.r_values.size(); ++ri) {
            const double r = static_cast<double>(res.r_values[ri]);
            const double rn = std::pow(r, static_cast<double>(res.exponent));
            const double upper = res.ratios[vi][ri] / rn;
            const double lower = 1.0 / (res.ratios[vi][ri] * rn);
            if (r >= head_threshold) {
                sv.upper_head_max = std::max(sv.upper_head_max, upper);
                sv.lower_head_max = std::max(sv.lower_head_max, lower);
            } else {
                sv.upper_tail_max = std::max(sv.upper_tail_max, upper);
                sv.lower_tail_max = std::max(sv.lower_tail_max, lower);
            }
        }
        // a degenerate window (all points in the head) has no comparison basis
        sv.bounded = (sv.upper_tail_max == 0.0 || sv.upper_head_max <= sv.upper_tail_max * 1.05) &&
                     (sv.lower_tail_max == 0.0 || sv.lower_head_max <= sv.lower_tail_max * 1.05);
        res.all_bounded = res.all_bounded && sv.bounded;
    }
    return res;
}

} // namespace cableops::analysis
