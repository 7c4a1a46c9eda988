#ifndef ALGX_ROOTS_HPP
#define ALGX_ROOTS_HPP

#include <utility>
#include <vector>

#include "algx/ball.hpp"
#include "algx/intpoly.hpp"

namespace algx {

// Certified enclosure of one complex root.
struct RootDisk {
  CBall disk;        // contains exactly one distinct root of p
  int multiplicity;  // multiplicity of that root in p
  bool is_real;      // certified via Sturm counts
};

// All distinct roots of p with certified pairwise disjoint disks.  The
// returned multiplicities sum to deg p.  Precision escalates internally
// (doubling from `prec`) until certification succeeds; throws
// precision_cap_reached beyond `prec_cap` bits.
std::vector<RootDisk> certified_roots(const IntPoly& p, prec_t prec = 256,
                                      prec_t prec_cap = 1 << 14);

// Shrink the enclosure of the simple root of p inside `disk` down to
// roughly `prec` bits.  The result is contained in a small neighborhood of
// the input disk and still certified.
CBall refine_root(const IntPoly& p, const CBall& disk, prec_t prec);

// Pair off the roots of a polynomial with no real roots into conjugate
// pairs, ordered by descending |center|; within a pair the root with
// positive imaginary part comes first.
std::vector<std::pair<RootDisk, RootDisk>> conjugate_pairing(
    const std::vector<RootDisk>& roots);

}  // namespace algx

#endif
