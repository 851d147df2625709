#ifndef MFC_GB_HPP
#define MFC_GB_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mfc/multipoly.hpp"

namespace mfc::gb {

struct PolyIdeal {
    std::vector<std::string> vars;  // ambient variables, sorted unique
    std::vector<MultiPoly> gens;

    static PolyIdeal over(std::vector<MultiPoly> gens);  // vars = union of supports
};

struct RunLimits {
    size_t max_pairs = 200000;  // S-pairs processed before giving up
    size_t max_terms = 500000;  // term-count cap on any intermediate polynomial
    double seconds = 600.0;     // wall clock per Buchberger run

    // Parses "pairs=N,seconds=S,terms=T" (any subset).
    static RunLimits parse(const std::string& text, RunLimits base);
    static RunLimits parse(const std::string& text);
    // Applies the MTC_LIMITS environment variable on top of `base`.
    static RunLimits from_env(RunLimits base);
    std::string to_string() const;
};

struct GroebnerBasis {
    std::vector<std::string> vars;
    MonomialOrder order;  // completed over vars
    std::vector<MultiPoly> polys;
};

enum class GbStatus { Done, Timeout };

// A timeout is a verdict, not an error: the engine never returns a wrong
// basis, it returns this with a resource trace instead.
struct GbResult {
    GbStatus status = GbStatus::Done;
    GroebnerBasis basis;
    size_t pairs_processed = 0;
    std::string trace;

    bool ok() const { return status == GbStatus::Done; }
};

// Reduced Groebner basis via Buchberger with normal (smallest-lcm) pair
// selection and Gebauer-Moeller pair elimination; deterministic for a fixed
// order.  Basis elements are primitive with integer coefficients and
// positive leading coefficient.
GbResult buchberger(const PolyIdeal& ideal, const MonomialOrder& order,
                    const RunLimits& limits = {});

// Full normal form: no term of the result is divisible by any leading term
// of the basis.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis);

bool in_ideal(const MultiPoly& p, const GroebnerBasis& basis);

// Elimination ideal: basis elements supported on the kept variables only
// (computed with lex, eliminated variables highest).  Propagates timeouts.
GbResult eliminate(const PolyIdeal& ideal, const std::vector<std::string>& keep,
                   const RunLimits& limits = {});

// Determinant of the Sylvester matrix in `var` (fraction-free expansion).
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// All nonnegative integer solutions (u, v) of
//   (v+u)((2t-1)u-(2t+3)v) + 4t^2 + 2t + 1 = 0
// for fixed t >= 0, by factoring the square-discriminant quadratic form into
// rational linear forms and enumerating divisor pairs of the constant.
std::set<std::pair<Int, Int>> solve_dio(const Int& t);

}  // namespace mfc::gb

#endif
