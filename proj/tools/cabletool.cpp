// cabletool: command-line front end for the cable operator library.
//
// Every invocation prints a JSON envelope on stdout:
//   {"tool", "version", "timestamp", "config", "payload"}
// For --format csv the payload field holds the CSV text as a string.
// --out writes the bare payload (JSON or CSV) to a file as well.
//
// Exit codes: 0 success, 1 invalid arguments or failed precondition
// (stdout then carries an "error" object instead of a payload),
// 2 internal consistency failure.

#include "cableops/cableops.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

using nlohmann::json;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct Options {
    long p = 0, q = 0, r = 0;
    long r_min = 0, r_max = 0;
    long color = 1;
    long n_random = 4;
    unsigned long long seed = 1;
    std::string format = "json";
    std::string out_path;
    std::string gnuplot_path;
};

int emit_error(const std::string& subcommand, const json& config, const std::string& code,
               const std::string& message, int exit_code) {
    json envelope;
    envelope["tool"] = "cabletool";
    envelope["version"] = cableops_version();
    envelope["timestamp"] = iso_timestamp();
    envelope["command"] = subcommand;
    envelope["config"] = config;
    envelope["error"] = json{{"code", code}, {"message", message}};
    std::cout << envelope.dump() << "\n";
    return exit_code;
}

int status_exit_code(cableops_status st) {
    switch (st) {
        case CABLEOPS_OK: return 0;
        case CABLEOPS_EINVAL:
        case CABLEOPS_EPRECOND: return 1;
        default: return 2;
    }
}

const char* status_code_name(cableops_status st) {
    switch (st) {
        case CABLEOPS_OK: return "ok";
        case CABLEOPS_EINVAL: return "invalid-arguments";
        case CABLEOPS_EPRECOND: return "precondition-failed";
        case CABLEOPS_ENOCONV: return "no-convergence";
        case CABLEOPS_ENOMEM: return "out-of-memory";
        default: return "internal-consistency";
    }
}

bool write_file(const std::string& path, const std::string& content, std::string* err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        *err = "cannot open " + path + " for writing";
        return false;
    }
    f << content;
    f.flush();
    if (!f) {
        *err = "failed writing " + path;
        return false;
    }
    return true;
}

// payload_is_json: embed as object; otherwise embed as a string
int emit_payload(const std::string& subcommand, const json& config, const std::string& payload,
                 bool payload_is_json, const Options& opt, const std::string& gnuplot_content) {
    json envelope;
    envelope["tool"] = "cabletool";
    envelope["version"] = cableops_version();
    envelope["timestamp"] = iso_timestamp();
    envelope["command"] = subcommand;
    envelope["config"] = config;
    envelope["payload"] = payload_is_json ? json::parse(payload) : json(payload);

    std::string err;
    if (!opt.out_path.empty() && !write_file(opt.out_path, payload, &err)) {
        return emit_error(subcommand, config, "io-error", err, 1);
    }
    if (!opt.gnuplot_path.empty() && !write_file(opt.gnuplot_path, gnuplot_content, &err)) {
        return emit_error(subcommand, config, "io-error", err, 1);
    }
    std::cout << envelope.dump() << "\n";
    return 0;
}

struct CtxDeleter {
    void operator()(cableops_ctx* c) const { cableops_ctx_destroy(c); }
};
using CtxPtr = std::unique_ptr<cableops_ctx, CtxDeleter>;

struct StringDeleter {
    void operator()(char* s) const { cableops_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cable operator toolbox"};
    app.require_subcommand(1);
    Options opt;

    auto add_pq = [&](CLI::App* cmd) {
        cmd->add_option("--p", opt.p, "meridian winding p")->required();
        cmd->add_option("--q", opt.q, "longitude winding q (>= 1)")->required();
    };
    auto add_r = [&](CLI::App* cmd) {
        cmd->add_option("--r", opt.r, "odd level r >= 3")->required();
    };
    auto add_range = [&](CLI::App* cmd) {
        cmd->add_option("--r-min", opt.r_min, "lowest level")->required();
        cmd->add_option("--r-max", opt.r_max, "highest level")->required();
    };
    auto add_out = [&](CLI::App* cmd, bool with_format, bool with_gnuplot) {
        cmd->add_option("--out", opt.out_path, "write the bare payload to this file");
        if (with_format) {
            cmd->add_option("--format", opt.format, "payload format: json or csv")
                ->check(CLI::IsMember({"json", "csv"}));
        }
        if (with_gnuplot) {
            cmd->add_option("--gnuplot", opt.gnuplot_path,
                            "also write a two-column 'r value' file for plotting");
        }
    };

    CLI::App* cmd_matrix = app.add_subcommand("matrix", "dump the twist matrix entries");
    add_pq(cmd_matrix);
    add_r(cmd_matrix);
    add_out(cmd_matrix, false, false);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the structural verification clauses");
    add_pq(cmd_verify);
    add_r(cmd_verify);
    add_out(cmd_verify, false, false);

    CLI::App* cmd_det =
        app.add_subcommand("det", "exact cofactor determinant with numeric cross-check");
    add_pq(cmd_det);
    add_r(cmd_det);
    add_out(cmd_det, false, false);

    CLI::App* cmd_sweep_norm =
        app.add_subcommand("sweep-norm", "inverse/operator norm growth across levels");
    add_pq(cmd_sweep_norm);
    add_range(cmd_sweep_norm);
    add_out(cmd_sweep_norm, true, true);

    CLI::App* cmd_sweep_tv =
        app.add_subcommand("sweep-tv", "squared image norms of a colored core curve");
    add_pq(cmd_sweep_tv);
    add_range(cmd_sweep_tv);
    cmd_sweep_tv->add_option("--color", opt.color, "basis color i (default 1)");
    add_out(cmd_sweep_tv, true, true);

    CLI::App* cmd_sandwich =
        app.add_subcommand("sandwich", "two-sided polynomial growth probe for |RT v|^2");
    add_pq(cmd_sandwich);
    add_range(cmd_sandwich);
    cmd_sandwich->add_option("--seed", opt.seed, "seed for the random test vectors");
    cmd_sandwich->add_option("--n-random", opt.n_random,
                             "number of random test vectors (default 4)");
    add_out(cmd_sandwich, false, false);

    CLI::App* cmd_explore =
        app.add_subcommand("explore-small-r", "survey every odd level r <= q + 6");
    add_pq(cmd_explore);
    add_out(cmd_explore, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json config = json::object();
        std::cout << json{{"tool", "cabletool"},
                          {"version", cableops_version()},
                          {"timestamp", iso_timestamp()},
                          {"config", config},
                          {"error",
                           json{{"code", "invalid-arguments"}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 1;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();

    json config;
    config["p"] = opt.p;
    config["q"] = opt.q;
    if (cmd == cmd_matrix || cmd == cmd_verify || cmd == cmd_det) config["r"] = opt.r;
    if (cmd == cmd_sweep_norm || cmd == cmd_sweep_tv || cmd == cmd_sandwich) {
        config["r_min"] = opt.r_min;
        config["r_max"] = opt.r_max;
    }
    if (cmd == cmd_sweep_tv) config["color"] = opt.color;
    if (cmd == cmd_sandwich) {
        config["seed"] = opt.seed;
        config["n_random"] = opt.n_random;
    }
    if (cmd == cmd_sweep_norm || cmd == cmd_sweep_tv) config["format"] = opt.format;
    if (!opt.out_path.empty()) config["out"] = opt.out_path;
    if (!opt.gnuplot_path.empty()) config["gnuplot"] = opt.gnuplot_path;

    cableops_status st = CABLEOPS_OK;
    std::string payload;
    bool payload_is_json = true;
    std::string gnuplot_content;

    auto take = [](ApiString& dst, char* raw) { dst.reset(raw); };

    if (cmd == cmd_matrix || cmd == cmd_verify || cmd == cmd_det) {
        cableops_ctx* raw_ctx = nullptr;
        st = cableops_ctx_create(opt.p, opt.q, opt.r, &raw_ctx);
        CtxPtr ctx(raw_ctx);
        if (st == CABLEOPS_OK) {
            char* s = nullptr;
            if (cmd == cmd_matrix) {
                st = cableops_matrix_json(ctx.get(), &s);
            } else if (cmd == cmd_verify) {
                st = cableops_verify_json(ctx.get(), &s);
            } else {
                st = cableops_det_json(ctx.get(), &s);
            }
            ApiString holder;
            take(holder, s);
            if (st == CABLEOPS_OK) payload = holder.get();
        }
    } else if (cmd == cmd_sweep_norm || cmd == cmd_sweep_tv) {
        const bool tv = (cmd == cmd_sweep_tv);
        char* s = nullptr;
        if (opt.format == "csv") {
            st = tv ? cableops_sweep_tv_csv(opt.p, opt.q, opt.r_min, opt.r_max, opt.color, &s)
                    : cableops_sweep_norm_csv(opt.p, opt.q, opt.r_min, opt.r_max, &s);
            payload_is_json = false;
        } else {
            st = tv ? cableops_sweep_tv_json(opt.p, opt.q, opt.r_min, opt.r_max, opt.color, &s)
                    : cableops_sweep_norm_json(opt.p, opt.q, opt.r_min, opt.r_max, &s);
        }
        ApiString holder;
        take(holder, s);
        if (st == CABLEOPS_OK) payload = holder.get();
        if (st == CABLEOPS_OK && !opt.gnuplot_path.empty()) {
            char* g = nullptr;
            st = tv ? cableops_gnuplot_tv(opt.p, opt.q, opt.r_min, opt.r_max, opt.color, &g)
                    : cableops_gnuplot_norm(opt.p, opt.q, opt.r_min, opt.r_max, &g);
            ApiString gholder;
            take(gholder, g);
            if (st == CABLEOPS_OK) gnuplot_content = gholder.get();
        }
    } else if (cmd == cmd_sandwich) {
        char* s = nullptr;
        st = cableops_sandwich_json(opt.p, opt.q, opt.r_min, opt.r_max, opt.seed,
                                    opt.n_random, &s);
        ApiString holder;
        take(holder, s);
        if (st == CABLEOPS_OK) payload = holder.get();
    } else if (cmd == cmd_explore) {
        char* s = nullptr;
        st = cableops_explore_small_r_json(opt.p, opt.q, &s);
        ApiString holder;
        take(holder, s);
        if (st == CABLEOPS_OK) payload = holder.get();
    }

    if (st != CABLEOPS_OK) {
        return emit_error(name, config, status_code_name(st), cableops_last_error(),
                          status_exit_code(st));
    }
    return emit_payload(name, config, payload, payload_is_json, opt, gnuplot_content);
}
