#ifndef MFC_UNIPOLY_HPP
#define MFC_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "mfc/rational.hpp"

namespace mfc {

// Dense univariate polynomial over Q, constant term first.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& a) { return UniPoly({a}); }
    static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }
    static UniPoly monomial(int deg, const Rat& a);
    // Convenience: integer coefficients, constant first.
    static UniPoly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& lead() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& a) const;

    // Field division; throws on division by the zero polynomial.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly operator/(const UniPoly& d) const;  // requires exact division
    UniPoly operator%(const UniPoly& d) const;

    Rat eval(const Rat& x) const;
    UniPoly compose(const UniPoly& inner) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    // Largest d with x^d | p, and p/x^d.
    std::pair<int, UniPoly> strip_zero_roots() const;

    // Scale making the coefficients integral and primitive, positive lead.
    UniPoly primitive_integer() const;
    bool has_integer_coeffs() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);     // monic gcd
UniPoly squarefree_part(const UniPoly& p);           // monic radical
// Cauchy bound: all real roots of p lie in (-B, B).
Rat root_bound(const UniPoly& p);

}  // namespace mfc

#endif
