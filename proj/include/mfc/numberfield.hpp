#ifndef MFC_NUMBERFIELD_HPP
#define MFC_NUMBERFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfc/sturm.hpp"
#include "mfc/unipoly.hpp"

namespace mfc {

// Real algebraic number field Q(alpha): a monic irreducible minimal
// polynomial together with a certified isolating interval selecting one real
// root (sign change at the endpoints and Sturm count exactly 1).
class NumberField {
  public:
    // Verifies irreducibility (degree <= 8) and the isolation certificate.
    static std::shared_ptr<const NumberField> make(const UniPoly& minpoly, const Rat& lo,
                                                   const Rat& hi);
    // Trusted constructor for callers that certify irreducibility themselves.
    static std::shared_ptr<const NumberField> make_unchecked(const UniPoly& minpoly,
                                                             const Rat& lo, const Rat& hi);

    const UniPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    RatInterval root_interval() const { return {lo_, hi_}; }
    // Shrinks the stored generator enclosure to width <= target and returns it.
    RatInterval refine(const Rat& target) const;

  private:
    UniPoly minpoly_;
    mutable Rat lo_, hi_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field: polynomial of degree < deg(minpoly) in the
// generator.
class NFElem {
  public:
    NFElem() = default;
    NFElem(NumberFieldPtr field, UniPoly rep);

    static NFElem from_rat(NumberFieldPtr field, const Rat& a);
    static NFElem generator(NumberFieldPtr field);

    const NumberFieldPtr& field() const { return field_; }
    const UniPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat rational_value() const;

    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator*(const Rat& a) const;
    NFElem inverse() const;
    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
    NFElem pow(unsigned e) const;

    // Sign under the field's chosen real embedding, decided exactly by
    // interval refinement (zero is detected algebraically first).
    int sign() const;
    bool operator<(const NFElem& o) const { return (*this - o).sign() < 0; }

    std::string to_string(const std::string& gen = "a") const;

  private:
    NumberFieldPtr field_;
    UniPoly rep_;
};

// All roots of p lying in the field Q[y]/(m), each returned as a polynomial
// expression in the generator.  Found by modular splitting and Hensel
// lifting; every returned root is verified exactly over Q, and the heuristic
// part can only affect completeness, never soundness.  Throws if the field's
// "minimal polynomial" is reducible.
std::vector<NFElem> roots_in_field(const UniPoly& p, const NumberFieldPtr& field);

// Same computation inside Q(zeta_s); returns coefficient vectors in the
// power basis of zeta_s.
std::vector<class CycloNumber> roots_in_cyclotomic(const UniPoly& p, unsigned conductor);

// Core routine shared by the two wrappers: roots of p modulo the monic
// irreducible m, as representative polynomials of degree < deg m.
std::vector<UniPoly> roots_mod_minpoly(const UniPoly& p, const UniPoly& m);

}  // namespace mfc

#endif
