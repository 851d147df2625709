#ifndef MFC_FUSION_HPP
#define MFC_FUSION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mfc/numberfield.hpp"
#include "mfc/unipoly.hpp"

namespace mfc::fusion {

// Fusion ring data: rank, dual involution with dual(0) = 0, and the
// nonnegative integer structure-constant tensor N[i][j][k] = N_{i,j}^k.
// The fusion matrix of X_i has (k,j)-entry N_{i,j}^k (row k, column j);
// note the transposition relative to the tensor index order.
class FusionRing {
  public:
    FusionRing(unsigned rank, std::vector<unsigned> dual, std::vector<Int> tensor);

    unsigned rank() const { return rank_; }
    unsigned dual(unsigned i) const { return dual_[i]; }
    const std::vector<unsigned>& dual_map() const { return dual_; }
    const Int& N(unsigned i, unsigned j, unsigned k) const;
    Int& N(unsigned i, unsigned j, unsigned k);

    // (k,j)-entry N_{i,j}^k, rows indexed by k.
    std::vector<std::vector<Int>> fusion_matrix(unsigned i) const;

    bool operator==(const FusionRing& o) const;

  private:
    unsigned rank_;
    std::vector<unsigned> dual_;
    std::vector<Int> tensor_;  // i-major, then j, then k
};

struct RingCheck {
    bool pass = true;
    std::vector<std::string> violations;
};

// Checks unit constraints, duality row, the four index symmetries, pairwise
// commutativity of the fusion matrices and associativity; throws if the
// dual map is not an involution fixing 0.
RingCheck validate_ring(const FusionRing& ring);

// Exact characteristic polynomial of the i-th fusion matrix, monic in z,
// via fraction-free (Bareiss) elimination.
UniPoly char_poly(const FusionRing& ring, unsigned i);

struct FPDims {
    NumberFieldPtr field;       // Q(alpha) containing every dimension
    std::vector<NFElem> dims;   // dims[i] = largest real eigenvalue of N_i
};

// Frobenius-Perron dimensions as exact algebraic numbers: for each i the
// largest real eigenvalue of N_i, isolated by Sturm sequences, expressed in
// a common field and certified by the common-eigenvector identity
// sum_j N_{i,j}^k dim_j = dim_i dim_k.  Throws "not a fusion ring" when no
// consistent positive assignment exists.
FPDims frobenius_perron_dims(const FusionRing& ring);

// Parameters (u, v, t) = (n14, n12, n10) of the rank-5 one-dual-pair
// candidate family.
struct CandidateParams {
    Int u, v, t;
};

struct CandidateRejection {
    std::string kind;  // "integrality" | "negativity"
    std::string detail;
};

// Evaluates the fourteen closed-form fusion coefficients and assembles the
// rank-5 tensor (dual pair {3,4}); rejects on a half-integer or negative
// entry.
std::variant<FusionRing, CandidateRejection> build_candidate(const CandidateParams& p);

// The fourteen coefficients n_1..n_14 as exact rationals (before the
// integrality check); mainly for tests and reports.
std::vector<Rat> candidate_coefficients(const CandidateParams& p);

struct TwistData {
    unsigned conductor;                 // twists are powers of zeta_conductor
    std::vector<long> zeta_exponents;   // exponent of theta_i for i = 1..rank-1
};

struct DimensionData {
    UniPoly minimal_polynomial;  // of the largest dimension generator
    Rat iso_lo, iso_hi;          // isolating interval for the chosen root
};

struct CatalogEntry {
    std::string name;
    FusionRing ring;
    std::optional<DimensionData> dims;    // for the non-pointed entry
    std::optional<TwistData> twists;      // absent when the paper states none
};

// The two known rank-5 non-self-dual fixtures.  Throws on unknown names,
// listing the catalog.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace mfc::fusion

#endif
