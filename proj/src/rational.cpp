#include "mfc/rational.hpp"

#include <algorithm>

namespace mfc {

std::vector<Int> divisors(const Int& n) {
    if (sgn(n) == 0) throw Error("divisors of zero");
    Int m = abs(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            Int q = m / d;
            if (q != d) large.push_back(q);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den()))
        return std::nullopt;
    Rat r(int_sqrt(q.get_num()), int_sqrt(q.get_den()));
    r.canonicalize();
    return r;
}

}  // namespace mfc
