#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cableops/cableops.h>

#include <cmath>
#include <cstring>
#include <string>

namespace {

struct Ctx {
    cableops_ctx* handle = nullptr;
    ~Ctx() { cableops_ctx_destroy(handle); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    cableops_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version string is set") {
    CHECK(std::strcmp(cableops_version(), "0.1.0") == 0);
}

TEST_CASE("context lifecycle and scalar probes") {
    Ctx ctx;
    REQUIRE(cableops_ctx_create(2, 3, 13, &ctx.handle) == CABLEOPS_OK);
    CHECK(cableops_ctx_m(ctx.handle) == 6);
    CHECK(cableops_ctx_gcd_rq(ctx.handle) == 1);

    double v = 0;
    REQUIRE(cableops_det_modulus(ctx.handle, &v) == CABLEOPS_OK);
    CHECK(std::abs(v - 1.0) < 1e-9);
    REQUIRE(cableops_operator_norm(ctx.handle, &v) == CABLEOPS_OK);
    CHECK(v > 1.0);
    REQUIRE(cableops_inverse_norm(ctx.handle, &v) == CABLEOPS_OK);
    CHECK(v > 1.0);
    REQUIRE(cableops_inverse_residual(ctx.handle, &v) == CABLEOPS_OK);
    CHECK(v < 1e-10);
    REQUIRE(cableops_tv_solid_torus(ctx.handle, &v) == CABLEOPS_OK);
    CHECK(std::abs(v - 1.0) < 1e-12);
    REQUIRE(cableops_tv_colored(ctx.handle, 2, &v) == CABLEOPS_OK);
    CHECK(v > 0.0);
}

TEST_CASE("invalid parameters are rejected with messages") {
    cableops_ctx* raw = nullptr;
    CHECK(cableops_ctx_create(2, 4, 13, &raw) == CABLEOPS_EINVAL); // gcd(p, q) = 2
    CHECK(raw == nullptr);
    CHECK(std::strlen(cableops_last_error()) > 0);
    CHECK(cableops_ctx_create(2, 3, 12, &raw) == CABLEOPS_EINVAL); // even r
    CHECK(cableops_ctx_create(2, 3, 1, &raw) == CABLEOPS_EINVAL);  // r too small
    CHECK(cableops_ctx_create(2, 0, 13, &raw) == CABLEOPS_EINVAL); // q < 1
    CHECK(cableops_ctx_create(2, 3, 13, nullptr) == CABLEOPS_EINVAL);
}

TEST_CASE("precondition failures carry their own status") {
    Ctx nc;
    REQUIRE(cableops_ctx_create(1, 3, 9, &nc.handle) == CABLEOPS_OK);
    CHECK(cableops_ctx_gcd_rq(nc.handle) == 3);
    double v = 0;
    CHECK(cableops_det_modulus(nc.handle, &v) == CABLEOPS_OK);
    CHECK(v < 1e-9);
    CHECK(cableops_inverse_norm(nc.handle, &v) == CABLEOPS_EPRECOND);
    CHECK(cableops_inverse_residual(nc.handle, &v) == CABLEOPS_EPRECOND);
    // color out of range is an argument error
    CHECK(cableops_tv_colored(nc.handle, 99, &v) == CABLEOPS_EINVAL);
    CHECK(cableops_tv_colored(nc.handle, 0, &v) == CABLEOPS_EINVAL);

    Ctx small;
    REQUIRE(cableops_ctx_create(1, 3, 7, &small.handle) == CABLEOPS_OK);
    char* s = nullptr;
    CHECK(cableops_det_json(small.handle, &s) == CABLEOPS_EPRECOND);
    CHECK(s == nullptr);
    CHECK(std::string(cableops_last_error()).find("r > q + 6") != std::string::npos);
}

TEST_CASE("payload builders return JSON text") {
    Ctx ctx;
    REQUIRE(cableops_ctx_create(2, 3, 13, &ctx.handle) == CABLEOPS_OK);
    char* s = nullptr;
    REQUIRE(cableops_matrix_json(ctx.handle, &s) == CABLEOPS_OK);
    auto text = take(s);
    CHECK(text.find("\"entries\"") != std::string::npos);
    s = nullptr;
    REQUIRE(cableops_verify_json(ctx.handle, &s) == CABLEOPS_OK);
    text = take(s);
    CHECK(text.find("\"all_pass\":true") != std::string::npos);
    s = nullptr;
    REQUIRE(cableops_det_json(ctx.handle, &s) == CABLEOPS_OK);
    text = take(s);
    CHECK(text.find("\"within_tolerance\":true") != std::string::npos);
}

TEST_CASE("standalone payload builders and validation") {
    char* s = nullptr;
    REQUIRE(cableops_sweep_norm_csv(2, 3, 3, 15, &s) == CABLEOPS_OK);
    auto text = take(s);
    CHECK(text.rfind("p,q,r,m,det_modulus,inv_norm,rt_norm,tv_cable,status\n", 0) == 0);

    s = nullptr;
    REQUIRE(cableops_sweep_tv_json(2, 3, 3, 31, 1, &s) == CABLEOPS_OK);
    text = take(s);
    CHECK(text.find("\"scaled-log-linear\"") != std::string::npos);

    s = nullptr;
    REQUIRE(cableops_gnuplot_norm(2, 3, 3, 31, &s) == CABLEOPS_OK);
    text = take(s);
    CHECK(text.rfind("# r inv_norm\n", 0) == 0);

    s = nullptr;
    REQUIRE(cableops_sandwich_json(3, 2, 11, 41, 42, 1, &s) == CABLEOPS_OK);
    text = take(s);
    CHECK(text.find("\"all_bounded\":true") != std::string::npos);

    s = nullptr;
    REQUIRE(cableops_explore_small_r_json(1, 3, &s) == CABLEOPS_OK);
    text = take(s);
    CHECK(text.find("\"rows\"") != std::string::npos);

    s = nullptr;
    CHECK(cableops_sweep_norm_json(2, 4, 3, 31, &s) == CABLEOPS_EINVAL);
    CHECK(s == nullptr);
    CHECK(cableops_sandwich_json(1, 3, 3, 9, 1, 0, &s) == CABLEOPS_EPRECOND);
    CHECK(cableops_sweep_norm_json(2, 3, 31, 3, &s) == CABLEOPS_EINVAL);
}

TEST_CASE("string free tolerates NULL") {
    cableops_string_free(nullptr);
    cableops_ctx_destroy(nullptr);
}
