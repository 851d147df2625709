#ifndef MFC_CYCLOTOMIC_HPP
#define MFC_CYCLOTOMIC_HPP

#include <map>
#include <string>
#include <vector>

#include "mfc/unipoly.hpp"

namespace mfc {

// s-th cyclotomic polynomial, monic with integer coefficients.
UniPoly cyclotomic_poly(unsigned s);

unsigned long euler_phi(unsigned long n);

// Element of Q(zeta_s) in the canonical residue basis modulo Phi_s:
// coefficient vector of length deg Phi_s = phi(s).
class CycloNumber {
  public:
    CycloNumber() : conductor_(1), c_(1, Rat(0)) {}  // zero in Q
    CycloNumber(unsigned conductor, std::vector<Rat> coeffs);

    static CycloNumber zero(unsigned conductor);
    static CycloNumber from_rat(unsigned conductor, const Rat& a);
    static CycloNumber zeta(unsigned conductor);            // the generator
    static CycloNumber zeta_power(unsigned conductor, long k);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws unless rational

    bool operator==(const CycloNumber& o) const;
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    CycloNumber operator-() const;
    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator*(const Rat& a) const;
    CycloNumber inverse() const;  // throws on zero
    CycloNumber operator/(const CycloNumber& o) const { return *this * o.inverse(); }
    CycloNumber pow(long e) const;

    // Image under zeta -> zeta^k with gcd(k, s) = 1; k = s-1 is complex
    // conjugation.  Involutive for k^2 = 1 mod s.
    CycloNumber galois(long k) const;
    CycloNumber conj() const { return galois(static_cast<long>(conductor_) - 1); }

    std::string to_string() const;

  private:
    unsigned conductor_;
    std::vector<Rat> c_;
};

// Evaluates a multivariate polynomial with every variable bound to a
// cyclotomic number of the same conductor.
CycloNumber eval_cyclo(const class MultiPoly& p,
                       const std::map<std::string, CycloNumber>& point);

}  // namespace mfc

#endif
