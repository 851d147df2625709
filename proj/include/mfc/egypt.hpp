#ifndef MFC_EGYPT_HPP
#define MFC_EGYPT_HPP

#include <string>
#include <vector>

#include "mfc/rational.hpp"

namespace mfc::egypt {

// Candidate dimension profile of an integral modular category: weakly
// increasing x_1 <= ... <= x_n with sum 1/x_i = 1, every ratio x_n/x_i a
// perfect square, and i <= x_i <= (n-i+1)u_i for the Sylvester bounds u_i.
// dims[i] = sqrt(x_n / x_i) is the corresponding simple-object dimension,
// listed weakly decreasing.
struct DimensionProfile {
    std::vector<Int> xs;
    std::vector<Int> dims;

    bool operator==(const DimensionProfile& o) const { return xs == o.xs; }
    std::string to_string() const;
};

// u_k with u_1 = 1 and u_{k+1} = u_k(u_k + 1); u_k + 1 is Sylvester's
// sequence 2, 3, 7, 43, 1807, ...
Int sylvester_bound(unsigned k);

// All profiles of the given rank, in lexicographic order.  Depth-first
// search over weakly increasing x_i with an exact rational remainder; the
// square-ratio filter runs at the leaves where x_n is known.
std::vector<DimensionProfile> enumerate_profiles(unsigned rank);

struct ProfileCheck {
    bool pass = true;
    std::vector<std::string> violations;
};

// Reports every violated profile condition: monotonicity, unit-fraction
// sum, square ratios and the Sylvester bounds.
ProfileCheck check_profile(const std::vector<Int>& xs);

}  // namespace mfc::egypt

#endif
