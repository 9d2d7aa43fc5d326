#pragma once

#include "analysis.hpp"
#include "structure.hpp"

#include <string>

namespace cableops::reports {

// All builders return finished payload strings: JSON objects or CSV text.
// Payloads carry no timestamps, so identical inputs give identical bytes.

std::string matrix_json(const cabling::CableParams& params);
std::string verify_json(const cabling::CableParams& params);

// Requires r > q + 6 when gcd(r, q) = 1; small coprime r is served by
// explore_small_r_json instead.
std::string det_json(const cabling::CableParams& params);

std::string sweep_norm_json(long p, long q, long r_min, long r_max);
std::string sweep_norm_csv(long p, long q, long r_min, long r_max);
std::string sweep_tv_json(long p, long q, long r_min, long r_max, long color);
std::string sweep_tv_csv(long p, long q, long r_min, long r_max, long color);

// two-column "r value" text for plotting: inv_norm resp. tv_cable
std::string gnuplot_norm(long p, long q, long r_min, long r_max);
std::string gnuplot_tv(long p, long q, long r_min, long r_max, long color);

std::string sandwich_json(long p, long q, long r_min, long r_max,
                          unsigned long long seed, long n_random);

// survey of every odd r in [3, q+6]
std::string explore_small_r_json(long p, long q);

} // namespace cableops::reports
