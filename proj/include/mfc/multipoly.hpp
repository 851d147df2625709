#ifndef MFC_MULTIPOLY_HPP
#define MFC_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mfc/rational.hpp"
#include "mfc/unipoly.hpp"

namespace mfc {

using Exps = std::vector<unsigned>;

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: the variable list is sorted and duplicate-free, no zero
// coefficients are stored, and exponent tuples match the variable arity.
// Equality first aligns the two variable lists, so x+0*y equals x.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(std::vector<std::string> vars, std::map<Exps, Rat> terms);

    static MultiPoly constant(const Rat& a);
    static MultiPoly constant(long a) { return constant(Rat(a)); }
    static MultiPoly var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // throws unless constant

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, Rat>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    // Arbitrary total order usable as a container key.
    static int cmp(const MultiPoly& a, const MultiPoly& b);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& a) const;
    MultiPoly pow(unsigned e) const;

    int degree(const std::string& var) const;       // -1 for the zero polynomial
    int total_degree() const;                        // -1 for the zero polynomial
    std::set<std::string> support() const;           // variables that occur
    MultiPoly drop_unused_vars() const;
    MultiPoly with_vars(const std::vector<std::string>& vars) const;  // superset re-embed

    // Coefficient of var^k as a polynomial in the remaining variables.
    MultiPoly coeff_of(const std::string& var, unsigned k) const;
    MultiPoly subst(const std::string& var, const MultiPoly& value) const;
    Rat eval(const std::map<std::string, Rat>& point) const;

    // Gcd of all coefficients (positive), 0 for the zero polynomial.
    Rat content() const;
    // Divide by content: integer coefficients with gcd 1; the sign is fixed
    // by making the leading coefficient under plain lex on sorted vars positive.
    MultiPoly primitive_integer() const;

    // Exact division; returns false if q does not divide *this.
    bool divide_exact(const MultiPoly& q, MultiPoly& quotient) const;

    // Views *this as a univariate polynomial in `var`; throws if any other
    // variable occurs.
    UniPoly to_unipoly(const std::string& var) const;
    static MultiPoly from_unipoly(const UniPoly& p, const std::string& var);

    std::string to_string() const;
    // Parses +,-,*,^ expressions over integer/rational literals and named
    // variables, e.g. "8*t^3+4*t^2-4*t-1" or "(v+u)*((2*t-1)*u-(2*t+3)*v)".
    static MultiPoly parse(const std::string& text);

  private:
    void normalize();
    std::vector<std::string> vars_;  // sorted, unique
    std::map<Exps, Rat> terms_;
};

// Aligns two polynomials over the union of their variables.
std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);

// Exact square root of a polynomial, if it is a perfect square.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

struct MonomialOrder {
    enum Kind { Lex, GrevLex };
    Kind kind = GrevLex;
    // Highest variable first; for Lex this is the elimination order (the
    // leading listed variables are eliminated first).
    std::vector<std::string> priority;

    static MonomialOrder lex(std::vector<std::string> priority);
    static MonomialOrder grevlex(std::vector<std::string> priority);
    // Completes the priority list to cover `vars` (missing ones appended in
    // sorted order, below all listed ones).
    MonomialOrder completed_for(const std::vector<std::string>& vars) const;

    // Compares exponent tuples over the sorted variable list `vars`, which
    // the priority list must cover exactly.
    bool less(const Exps& a, const Exps& b, const std::vector<std::string>& vars) const;

    std::string to_string() const;
    static MonomialOrder parse(const std::string& text);  // "lex:a,b,c" | "grevlex:a,b,c"
};

}  // namespace mfc

#endif
