#ifndef MFC_STURM_HPP
#define MFC_STURM_HPP

#include <vector>

#include "mfc/unipoly.hpp"

namespace mfc {

// Open interval with rational endpoints, lo < hi.
struct RatInterval {
    Rat lo, hi;
    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
};

// Sturm chain of the squarefree part of p.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Number of distinct real roots of p in the open interval (a, b).
// Throws "shrink interval" if either endpoint is a root.
long sturm_count(const UniPoly& p, const Rat& a, const Rat& b);

// Number of distinct real roots of p on all of R.
long real_root_count(const UniPoly& p);

// Disjoint isolating intervals for all distinct real roots of p, sorted
// ascending.  Each open interval contains exactly one root and has
// endpoints that are not roots.
std::vector<RatInterval> isolate_real_roots(const UniPoly& p);

// Halves the width of an isolating interval for the unique root of p
// inside it until width <= target.  p need not be squarefree.
RatInterval refine_root(const UniPoly& p, RatInterval iv, const Rat& target);

}  // namespace mfc

#endif
