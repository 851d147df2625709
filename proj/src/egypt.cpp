#include "mfc/egypt.hpp"

#include <algorithm>

namespace mfc::egypt {

std::string DimensionProfile::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i].get_str();
    }
    return out + ")";
}

Int sylvester_bound(unsigned k) {
    if (k < 1) throw Error("sylvester_bound needs k >= 1");
    Int u = 1;
    for (unsigned i = 1; i < k; ++i) u = u * (u + 1);
    return u;
}

namespace {

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void search(unsigned rank, unsigned i, const Int& lower, const Rat& remainder,
            std::vector<Int>& xs, std::vector<DimensionProfile>& out) {
    unsigned left = rank - i + 1;  // entries still to choose, including x_i
    if (left == 0) return;
    if (left == 1) {
        // last entry must consume the remainder exactly
        if (sgn(remainder) <= 0) return;
        if (remainder.get_num() != 1) return;
        Int xn(remainder.get_den());
        if (xn < lower) return;
        if (xn > Int(left) * sylvester_bound(i)) return;
        xs.push_back(xn);
        bool squares = true;
        std::vector<Int> dims;
        for (const Int& x : xs) {
            if (xn % x != 0 || !is_perfect_square(xn / x)) {
                squares = false;
                break;
            }
            dims.push_back(int_sqrt(xn / x));
        }
        if (squares) out.push_back({xs, dims});
        xs.pop_back();
        return;
    }
    if (sgn(remainder) <= 0) return;
    // 1/x_i <= remainder  and  left/x_i >= remainder  bound the branch,
    // together with the Lemma bounds i <= x_i <= (n-i+1) u_i.
    Int lo = ceil_div(remainder.get_den(), remainder.get_num());
    if (lo < lower) lo = lower;
    if (lo < Int(i)) lo = Int(i);
    Int hi = floor_div(Int(left) * remainder.get_den(), remainder.get_num());
    Int lemma_hi = Int(left) * sylvester_bound(i);
    if (hi > lemma_hi) hi = lemma_hi;
    for (Int x = lo; x <= hi; ++x) {
        Rat r = remainder - Rat(1, x);
        xs.push_back(x);
        search(rank, i + 1, x, r, xs, out);
        xs.pop_back();
    }
}

}  // namespace

std::vector<DimensionProfile> enumerate_profiles(unsigned rank) {
    if (rank < 1 || rank > 6)
        throw Error("bound overflow risk: rank outside supported range 1..6");
    std::vector<DimensionProfile> out;
    std::vector<Int> xs;
    search(rank, 1, Int(1), Rat(1), xs, out);
    std::sort(out.begin(), out.end(), [](const DimensionProfile& a, const DimensionProfile& b) {
        return a.xs < b.xs;
    });
    return out;
}

ProfileCheck check_profile(const std::vector<Int>& xs) {
    if (xs.empty()) throw Error("empty profile");
    for (const Int& x : xs)
        if (sgn(x) <= 0) throw Error("profile entries must be positive");
    ProfileCheck result;
    auto violate = [&](const std::string& msg) {
        result.pass = false;
        result.violations.push_back(msg);
    };
    unsigned n = static_cast<unsigned>(xs.size());
    for (unsigned i = 0; i + 1 < n; ++i)
        if (xs[i] > xs[i + 1]) violate("not weakly increasing at position " + std::to_string(i));
    Rat sum(0);
    for (const Int& x : xs) sum += Rat(1, x);
    if (sum != Rat(1)) violate("unit fractions sum to " + rat_to_string(sum) + ", not 1");
    const Int& xn = xs.back();
    for (unsigned i = 0; i < n; ++i) {
        if (xn % xs[i] != 0 || !is_perfect_square(xn / xs[i]))
            violate("ratio " + xn.get_str() + "/" + xs[i].get_str() + " is not a perfect square");
    }
    for (unsigned i = 0; i < n; ++i) {
        if (xs[i] < Int(i + 1))
            violate("x_" + std::to_string(i + 1) + " below lower bound " + std::to_string(i + 1));
        Int ub = Int(n - i) * sylvester_bound(i + 1);
        if (xs[i] > ub)
            violate("x_" + std::to_string(i + 1) + " above bound " + ub.get_str());
    }
    return result;
}

}  // namespace mfc::egypt
