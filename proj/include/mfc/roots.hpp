#ifndef MFC_ROOTS_HPP
#define MFC_ROOTS_HPP

#include <set>
#include <string>
#include <vector>

#include "mfc/unipoly.hpp"

namespace mfc {

// All rational roots of a nonzero polynomial, by divisor enumeration of the
// leading/constant coefficients of the primitive integer form.
std::set<Rat> rational_roots(const UniPoly& p);

// Certificate that an integer-coefficient polynomial takes odd values on all
// integers: both p(0) and p(1) are odd.  Rational input is replaced by its
// primitive integer form first (same integer roots).
struct ParityCertificate {
    bool ok = false;
    Int value_at_0, value_at_1;
    std::string detail;
};
ParityCertificate parity_no_integer_roots(const UniPoly& p);

// Degree-bounded factorization over Q: squarefree split, rational-root
// stripping and Kronecker trial division for factors of degree <= 4.
// Complete for inputs of degree <= 8; higher degrees may leave a factor
// marked unresolved.
struct QFactor {
    UniPoly poly;        // primitive integer, positive lead
    int multiplicity;
    bool irreducible;    // false only when the degree budget was exceeded
};
struct QFactorization {
    Rat unit;            // p = unit * prod(poly^multiplicity)
    std::vector<QFactor> factors;
};
QFactorization factor_bounded(const UniPoly& p);

// Irreducibility over Q for degree <= 8; throws on larger inputs.
bool is_irreducible(const UniPoly& p);

}  // namespace mfc

#endif
