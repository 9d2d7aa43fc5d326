#include "params.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cableops::cabling {

CableParams CableParams::make(long p, long q, long r) {
    if (q < 1) {
        throw std::invalid_argument("cable winding q must be >= 1, got " + std::to_string(q));
    }
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("cable windings must be coprime: gcd(" + std::to_string(p) +
                                    ", " + std::to_string(q) + ") != 1");
    }
    CableParams params;
    params.p = p;
    params.q = q;
    params.sys = cyc::RootSystem::make(r);
    return params;
}

long CableParams::gcd_rq() const {
    return std::gcd(sys.r, q);
}

} // namespace cableops::cabling
