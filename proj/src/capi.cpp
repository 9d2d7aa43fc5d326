#include "cableops/cableops.h"

#include "analysis.hpp"
#include "cabling.hpp"
#include "errors.hpp"
#include "reports.hpp"
#include "structure.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Translate the C++ error taxonomy at the boundary.
template <typename Fn>
cableops_status guarded(Fn&& fn) {
    try {
        fn();
        return CABLEOPS_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return CABLEOPS_EINVAL;
    } catch (const cableops::PreconditionError& e) {
        set_error(e.what());
        return CABLEOPS_EPRECOND;
    } catch (const cableops::ConvergenceError& e) {
        set_error(e.what());
        return CABLEOPS_ENOCONV;
    } catch (const cableops::InternalError& e) {
        set_error(e.what());
        return CABLEOPS_EINTERNAL;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return CABLEOPS_ENOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return CABLEOPS_EINTERNAL;
    }
}

cableops_status string_result(char** out, const std::string& payload) {
    if (!out) {
        set_error("output pointer is NULL");
        return CABLEOPS_EINVAL;
    }
    *out = dup_string(payload);
    if (!*out) {
        set_error("out of memory");
        return CABLEOPS_ENOMEM;
    }
    return CABLEOPS_OK;
}

} // namespace

struct cableops_ctx {
    cableops::cabling::CableParams params;
    cableops::cabling::SparseMatrix rm;
    cableops::cabling::CableOperator op;
    // numeric state built on demand
    std::optional<cableops::analysis::Matrix> rt_eval;
    std::optional<cableops::analysis::Matrix> inv;

    const cableops::analysis::Matrix& rt() {
        if (!rt_eval) {
            rt_eval = cableops::analysis::eval_columns(op.cols, op.m, params.sys);
        }
        return *rt_eval;
    }
    const cableops::analysis::Matrix& inverse() {
        if (!inv) {
            inv = cableops::analysis::inverse_from_factors(params, rm);
        }
        return *inv;
    }
};

extern "C" {

const char* cableops_version(void) { return "0.1.0"; }

const char* cableops_last_error(void) { return g_last_error.c_str(); }

cableops_status cableops_ctx_create(long p, long q, long r, cableops_ctx** out_ctx) {
    if (!out_ctx) {
        set_error("output pointer is NULL");
        return CABLEOPS_EINVAL;
    }
    *out_ctx = nullptr;
    return guarded([&] {
        auto ctx = std::make_unique<cableops_ctx>();
        ctx->params = cableops::cabling::CableParams::make(p, q, r);
        ctx->rm = cableops::cabling::build_twist_matrix(ctx->params);
        ctx->op = cableops::cabling::cable_operator(ctx->params);
        *out_ctx = ctx.release();
    });
}

void cableops_ctx_destroy(cableops_ctx* ctx) { delete ctx; }

long cableops_ctx_m(const cableops_ctx* ctx) { return ctx ? ctx->params.sys.m : 0; }

long cableops_ctx_gcd_rq(const cableops_ctx* ctx) { return ctx ? ctx->params.gcd_rq() : 0; }

cableops_status cableops_det_modulus(cableops_ctx* ctx, double* out) {
    if (!ctx || !out) {
        set_error("NULL argument");
        return CABLEOPS_EINVAL;
    }
    return guarded([&] {
        *out = std::abs(cableops::analysis::numeric_det(
            cableops::analysis::eval_sparse(ctx->rm, ctx->params.sys)));
    });
}

cableops_status cableops_operator_norm(cableops_ctx* ctx, double* out) {
    if (!ctx || !out) {
        set_error("NULL argument");
        return CABLEOPS_EINVAL;
    }
    return guarded([&] {
        const auto pi = cableops::analysis::operator_norm(ctx->rt());
        if (!pi.converged) {
            throw cableops::ConvergenceError("operator norm power iteration hit its cap");
        }
        *out = pi.norm;
    });
}

cableops_status cableops_inverse_norm(cableops_ctx* ctx, double* out) {
    if (!ctx || !out) {
        set_error("NULL argument");
        return CABLEOPS_EINVAL;
    }
    return guarded([&] {
        const auto pi = cableops::analysis::operator_norm(ctx->inverse());
        if (!pi.converged) {
            throw cableops::ConvergenceError("inverse norm power iteration hit its cap");
        }
        *out = pi.norm;
    });
}

cableops_status cableops_inverse_residual(cableops_ctx* ctx, double* out) {
    if (!ctx || !out) {
        set_error("NULL argument");
        return CABLEOPS_EINVAL;
    }
    return guarded([&] {
        *out = cableops::analysis::inverse_residual(ctx->rt(), ctx->inverse());
    });
}

cableops_status cableops_tv_solid_torus(cableops_ctx* ctx, double* out) {
    return cableops_tv_colored(ctx, 1, out);
}

cableops_status cableops_tv_colored(cableops_ctx* ctx, long color, double* out) {
    if (!ctx || !out) {
        set_error("NULL argument");
        return CABLEOPS_EINVAL;
    }
    return guarded([&] {
        *out = cableops::analysis::image_norm_squared(color, ctx->params);
    });
}

cableops_status cableops_matrix_json(cableops_ctx* ctx, char** out) {
    if (!ctx) {
        set_error("NULL context");
        return CABLEOPS_EINVAL;
    }
    std::string payload;
    const cableops_status st =
        guarded([&] { payload = cableops::reports::matrix_json(ctx->params); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_verify_json(cableops_ctx* ctx, char** out) {
    if (!ctx) {
        set_error("NULL context");
        return CABLEOPS_EINVAL;
    }
    std::string payload;
    const cableops_status st =
        guarded([&] { payload = cableops::reports::verify_json(ctx->params); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_det_json(cableops_ctx* ctx, char** out) {
    if (!ctx) {
        set_error("NULL context");
        return CABLEOPS_EINVAL;
    }
    std::string payload;
    const cableops_status st =
        guarded([&] { payload = cableops::reports::det_json(ctx->params); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_sweep_norm_json(long p, long q, long r_min, long r_max, char** out) {
    std::string payload;
    const cableops_status st =
        guarded([&] { payload = cableops::reports::sweep_norm_json(p, q, r_min, r_max); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_sweep_norm_csv(long p, long q, long r_min, long r_max, char** out) {
    std::string payload;
    const cableops_status st =
        guarded([&] { payload = cableops::reports::sweep_norm_csv(p, q, r_min, r_max); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_sweep_tv_json(long p, long q, long r_min, long r_max, long color,
                                       char** out) {
    std::string payload;
    const cableops_status st = guarded(
        [&] { payload = cableops::reports::sweep_tv_json(p, q, r_min, r_max, color); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_sweep_tv_csv(long p, long q, long r_min, long r_max, long color,
                                      char** out) {
    std::string payload;
    const cableops_status st = guarded(
        [&] { payload = cableops::reports::sweep_tv_csv(p, q, r_min, r_max, color); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_gnuplot_norm(long p, long q, long r_min, long r_max, char** out) {
    std::string payload;
    const cableops_status st =
        guarded([&] { payload = cableops::reports::gnuplot_norm(p, q, r_min, r_max); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_gnuplot_tv(long p, long q, long r_min, long r_max, long color,
                                    char** out) {
    std::string payload;
    const cableops_status st = guarded(
        [&] { payload = cableops::reports::gnuplot_tv(p, q, r_min, r_max, color); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_sandwich_json(long p, long q, long r_min, long r_max,
                                       unsigned long long seed, long n_random, char** out) {
    std::string payload;
    const cableops_status st = guarded([&] {
        payload = cableops::reports::sandwich_json(p, q, r_min, r_max, seed, n_random);
    });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

cableops_status cableops_explore_small_r_json(long p, long q, char** out) {
    std::string payload;
    const cableops_status st =
        guarded([&] { payload = cableops::reports::explore_small_r_json(p, q); });
    return st != CABLEOPS_OK ? st : string_result(out, payload);
}

void cableops_string_free(char* s) { std::free(s); }

} // extern "C"
