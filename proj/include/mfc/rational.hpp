#ifndef MFC_RATIONAL_HPP
#define MFC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfc {

// Exact arithmetic base types.  All decision-relevant computation in this
// library is done with these; doubles appear only in heuristics.
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num", "num/den" or "-num/den" into a canonical rational.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rat q;
    if (slash == std::string::npos) {
        q = Rat(Int(s));
    } else {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error("rational with zero denominator: " + s);
        q = Rat(num, den);
    }
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int int_sqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool fits_long(const Int& z) { return z.fits_slong_p(); }

// All positive divisors of |n|, ascending.  n must be nonzero.
std::vector<Int> divisors(const Int& n);

// Exact square root of a rational if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& q);

}  // namespace mfc

#endif
