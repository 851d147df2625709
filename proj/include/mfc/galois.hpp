#ifndef MFC_GALOIS_HPP
#define MFC_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mfc/multipoly.hpp"

namespace mfc::galois {

using Permutation = std::vector<unsigned>;

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
std::string cycle_string(const Permutation& p);

// Complex template entry re + i*im over real symbols.
struct CEntry {
    MultiPoly re, im;
    bool operator==(const CEntry& o) const { return re == o.re && im == o.im; }
};

// Symbolic S-matrix of a pseudo-unitary category with the dual structure
// baked in: row 0 carries the dimension symbols, the matrix is symmetric,
// dual-pair blocks use h1 +- i*h2.  Carries the accumulated polynomial
// constraints and the sign knowledge used by the certificate checker.
struct SMatrixTemplate {
    unsigned rank = 0;
    std::vector<unsigned> dual;
    std::vector<std::vector<CEntry>> entries;
    std::vector<MultiPoly> constraints;  // polynomials that must vanish
    std::vector<std::string> positive;     // symbols known > 0
    std::vector<std::string> at_least_one;  // symbols known >= 1
    std::vector<std::string> nonzero;       // symbols known != 0
    std::vector<std::string> solvable;      // symbols elimination may solve for
    std::vector<std::pair<std::string, MultiPoly>> substitutions;  // applied, in order
    std::vector<std::string> side_conditions;  // factors stripped as nonvanishing
    std::vector<std::string> notes;

    // dimension symbol of a label ("1" for the unit)
    std::string dim_symbol(unsigned label) const;
    MultiPoly dim_poly(unsigned label) const;

    void substitute(const std::string& symbol, const MultiPoly& value);
    std::optional<MultiPoly> substitution_for(const std::string& symbol) const;

    // Template for the given rank and dual involution (at most one dual
    // pair; the unit and duals follow the paper's rank-4/5 conventions).
    static SMatrixTemplate build(unsigned rank, const std::vector<unsigned>& dual);
};

struct GaloisCase {
    unsigned rank = 0;
    std::vector<unsigned> dual;
    std::vector<Permutation> generators;  // canonical generating set
    std::vector<Permutation> elements;    // sorted
    std::string group_name;               // "Z6", "Z2xZ2", ...
};

// All abelian subgroups of S_rank containing the conjugation permutation
// (product of the dual 2-cycles) that do not fix label 0, deduplicated up
// to relabeling of the self-dual non-unit labels; deterministic order.
std::vector<GaloisCase> enumerate_galois_cases(unsigned rank, const std::vector<unsigned>& dual);

struct Certificate {
    std::string kind;  // "positivity" | "nonzero-monomial" | "constant" | ...
    std::string detail;
};

enum class CaseStatus { Survives, Eliminated };

struct ResolvedCase {
    std::string id;                     // deterministic subcase id
    std::vector<std::vector<int>> eps;  // sign vector per generator, eps[g][0]=+1
    SMatrixTemplate tmpl;
    CaseStatus status = CaseStatus::Survives;
    std::optional<Certificate> certificate;
    std::optional<std::string> related_to;  // relabel-equivalent survivor
};

// Enumerates the Galois sign assignments (normalized by eps_{0,sigma}=+1),
// derives the entry identifications each assignment forces, and splits into
// resolved subcases; impossible sign systems are eliminated with positivity
// or nonzero-monomial certificates.  Deduplicates identical outcomes.
std::vector<ResolvedCase> apply_symmetry(const GaloisCase& gcase, const SMatrixTemplate& tmpl);
// Same, with the opposite global sign normalization (for the invariance
// property test).
std::vector<ResolvedCase> apply_symmetry_flipped(const GaloisCase& gcase,
                                                 const SMatrixTemplate& tmpl);

struct UnitarityResult {
    SMatrixTemplate tmpl;
    CaseStatus status = CaseStatus::Survives;
    std::optional<Certificate> certificate;
};

// Appends every polynomial relation from S^2 = D^2 C (complex entries
// expanded through h1, h2), then eliminates linearly solvable symbols and
// positive square roots, recording each elimination.
UnitarityResult apply_unitarity(const SMatrixTemplate& tmpl);

// Sound contradiction checker for "positive combination = 0" including the
// ">= 1" shift argument; used by the engine and exposed for the twist module
// and tests.  Returns a certificate if p = 0 is impossible given the sign
// knowledge carried by the template symbol lists.
std::optional<Certificate> contradiction_certificate(
    const MultiPoly& p, const std::vector<std::string>& positive,
    const std::vector<std::string>& at_least_one, const std::vector<std::string>& nonzero);

// True when p > 0 is certified for every admissible symbol assignment
// (symbols in `positive` strictly positive, those in `at_least_one` >= 1).
bool certified_positive(const MultiPoly& p, const std::vector<std::string>& positive,
                        const std::vector<std::string>& at_least_one);

// Galois-orbit size of a dimension symbol under the case's character
// permutation action on the resolved template; equals the field degree
// [Q(sym):Q] once the orbit values are certified distinct.  Returns 0 if
// distinctness cannot be certified.
unsigned orbit_degree(const ResolvedCase& rc, const GaloisCase& gcase, unsigned label);

}  // namespace mfc::galois

#endif
