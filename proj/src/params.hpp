#pragma once

#include "cyclotomic.hpp"

namespace cableops::cabling {

// Cable parameters: longitude winding q >= 1, meridian winding p with
// gcd(p, q) = 1, over a fixed root system.
struct CableParams {
    long p = 0;
    long q = 0;
    cyc::RootSystem sys;

    static CableParams make(long p, long q, long r);

    long gcd_rq() const;
    bool coprime_r() const { return gcd_rq() == 1; }
    // the regime where the full structure theory applies
    bool large_r() const { return sys.r > q + 6; }
};

} // namespace cableops::cabling
