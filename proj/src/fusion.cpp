#include "mfc/fusion.hpp"

#include <algorithm>

#include "mfc/roots.hpp"

namespace mfc::fusion {

FusionRing::FusionRing(unsigned rank, std::vector<unsigned> dual, std::vector<Int> tensor)
    : rank_(rank), dual_(std::move(dual)), tensor_(std::move(tensor)) {
    if (rank_ == 0) throw Error("fusion ring of rank 0");
    if (dual_.size() != rank_) throw Error("dual map size mismatch");
    if (tensor_.size() != static_cast<size_t>(rank_) * rank_ * rank_)
        throw Error("tensor shape does not match rank");
    for (unsigned i = 0; i < rank_; ++i) {
        if (dual_[i] >= rank_ || dual_[dual_[i]] != i)
            throw Error("dual map is not an involution");
    }
    if (dual_[0] != 0) throw Error("dual map must fix the unit");
}

const Int& FusionRing::N(unsigned i, unsigned j, unsigned k) const {
    return tensor_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
}

Int& FusionRing::N(unsigned i, unsigned j, unsigned k) {
    return tensor_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
}

std::vector<std::vector<Int>> FusionRing::fusion_matrix(unsigned i) const {
    std::vector<std::vector<Int>> m(rank_, std::vector<Int>(rank_));
    for (unsigned k = 0; k < rank_; ++k)
        for (unsigned j = 0; j < rank_; ++j) m[k][j] = N(i, j, k);
    return m;
}

bool FusionRing::operator==(const FusionRing& o) const {
    return rank_ == o.rank_ && dual_ == o.dual_ && tensor_ == o.tensor_;
}

namespace {

std::string idx(unsigned i, unsigned j, unsigned k) {
    return "N[" + std::to_string(i) + "," + std::to_string(j) + "]^" + std::to_string(k);
}

std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                      const std::vector<std::vector<Int>>& b) {
    size_t n = a.size();
    std::vector<std::vector<Int>> c(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace

RingCheck validate_ring(const FusionRing& ring) {
    RingCheck out;
    auto violate = [&](const std::string& msg) {
        out.pass = false;
        out.violations.push_back(msg);
    };
    unsigned n = ring.rank();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                if (sgn(ring.N(i, j, k)) < 0) violate("negative entry " + idx(i, j, k));
    for (unsigned j = 0; j < n; ++j)
        for (unsigned k = 0; k < n; ++k) {
            Int expect = (j == k) ? 1 : 0;
            if (ring.N(0, j, k) != expect) violate("unit row: " + idx(0, j, k));
        }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Int expect = (j == ring.dual(i)) ? 1 : 0;
            if (ring.N(i, j, 0) != expect) violate("duality: " + idx(i, j, 0));
        }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                const Int& base = ring.N(i, j, k);
                if (ring.N(j, i, k) != base)
                    violate("commutation symmetry: " + idx(i, j, k) + " vs " + idx(j, i, k));
                if (ring.N(i, ring.dual(k), ring.dual(j)) != base)
                    violate("duality symmetry: " + idx(i, j, k) + " vs " +
                            idx(i, ring.dual(k), ring.dual(j)));
                if (ring.N(ring.dual(i), ring.dual(j), ring.dual(k)) != base)
                    violate("conjugation symmetry: " + idx(i, j, k));
            }
    std::vector<std::vector<std::vector<Int>>> mats;
    for (unsigned i = 0; i < n; ++i) mats.push_back(ring.fusion_matrix(i));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if (mat_mul(mats[i], mats[j]) != mat_mul(mats[j], mats[i]))
                violate("fusion matrices " + std::to_string(i) + " and " + std::to_string(j) +
                        " do not commute");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            auto prod = mat_mul(mats[i], mats[j]);
            std::vector<std::vector<Int>> sum(n, std::vector<Int>(n, Int(0)));
            for (unsigned k = 0; k < n; ++k)
                for (unsigned a = 0; a < n; ++a)
                    for (unsigned b = 0; b < n; ++b) sum[a][b] += ring.N(i, j, k) * mats[k][a][b];
            if (prod != sum)
                violate("associativity fails for N_" + std::to_string(i) + " N_" +
                        std::to_string(j));
        }
    return out;
}

UniPoly char_poly(const FusionRing& ring, unsigned i) {
    if (i >= ring.rank()) throw Error("label out of range");
    unsigned n = ring.rank();
    auto m = ring.fusion_matrix(i);
    // zI - N_i over Q[z], fraction-free Bareiss elimination
    std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) {
            UniPoly e = UniPoly::constant(-Rat(m[r][c]));
            if (r == c) e = e + UniPoly::x();
            a[r][c] = e;
        }
    UniPoly prev = UniPoly::constant(Rat(1));
    int sign = 1;
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            unsigned swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return UniPoly::zero();
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (unsigned r = k + 1; r < n; ++r) {
            for (unsigned c = k + 1; c < n; ++c) {
                UniPoly num = a[r][c] * a[k][k] - a[r][k] * a[k][c];
                a[r][c] = num / prev;
            }
            a[r][k] = UniPoly::zero();
        }
        prev = a[k][k];
    }
    UniPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

// Largest real root of p: the irreducible factor that owns it plus an
// isolating interval.
struct MaxRoot {
    UniPoly factor;      // monic irreducible
    RatInterval iv;
    bool found = false;
};

MaxRoot largest_real_root(const UniPoly& p) {
    MaxRoot best;
    for (const auto& f : factor_bounded(p).factors) {
        if (!f.irreducible)
            throw Error("char poly factor beyond factoring budget");
        auto ivs = isolate_real_roots(f.poly);
        if (ivs.empty()) continue;
        RatInterval iv = ivs.back();
        if (!best.found || iv.lo >= best.iv.hi || iv.hi > best.iv.hi) {
            // compare exactly when intervals overlap
            if (best.found && iv.lo < best.iv.hi && iv.hi > best.iv.lo) {
                // distinct irreducibles cannot share a root; refine until split
                UniPoly a = best.factor, b = f.poly;
                RatInterval ia = best.iv, ib = iv;
                while (ia.hi > ib.lo && ib.hi > ia.lo) {
                    ia = refine_root(a, ia, ia.width() / 4);
                    ib = refine_root(b, ib, ib.width() / 4);
                }
                if (ib.lo >= ia.hi) {
                    best.factor = b.monic();
                    best.iv = ib;
                }
                continue;
            }
            best.factor = f.poly.monic();
            best.iv = iv;
            best.found = true;
        }
    }
    return best;
}

}  // namespace

FPDims frobenius_perron_dims(const FusionRing& ring) {
    unsigned n = ring.rank();
    std::vector<MaxRoot> roots;
    for (unsigned i = 0; i < n; ++i) {
        MaxRoot r = largest_real_root(char_poly(ring, i));
        if (!r.found) throw Error("not a fusion ring: N_" + std::to_string(i) +
                                  " has no real eigenvalue");
        roots.push_back(std::move(r));
    }
    // primary generator: the dimension with the largest-degree minimal polynomial
    size_t primary = 0;
    for (size_t i = 1; i < n; ++i)
        if (roots[i].factor.degree() > roots[primary].factor.degree()) primary = i;
    NumberFieldPtr F;
    if (roots[primary].factor.degree() == 1) {
        F = NumberField::make_unchecked(UniPoly::x() - UniPoly::constant(Rat(1)), rat(0), rat(2));
    } else {
        F = NumberField::make(roots[primary].factor, roots[primary].iv.lo,
                              roots[primary].iv.hi);
    }
    std::vector<NFElem> dims(n);
    for (unsigned i = 0; i < n; ++i) {
        if (roots[i].factor.degree() == 1) {
            dims[i] = NFElem::from_rat(F, -roots[i].factor.coeff(0));
            continue;
        }
        bool assigned = false;
        for (const NFElem& cand : roots_in_field(roots[i].factor, F)) {
            // the Frobenius-Perron root is the one inside the isolated interval
            NFElem lo = cand - NFElem::from_rat(F, roots[i].iv.lo);
            NFElem hi = NFElem::from_rat(F, roots[i].iv.hi) - cand;
            if (lo.sign() > 0 && hi.sign() > 0) {
                dims[i] = cand;
                assigned = true;
                break;
            }
        }
        if (!assigned)
            throw Error("not a fusion ring: dimension of X_" + std::to_string(i) +
                        " does not lie in the common field");
    }
    // positivity and the common-eigenvector identity, exactly in the field
    for (unsigned i = 0; i < n; ++i)
        if (dims[i].sign() <= 0) throw Error("not a fusion ring: nonpositive dimension");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            NFElem lhs = NFElem::from_rat(F, rat(0));
            for (unsigned j = 0; j < n; ++j) lhs = lhs + dims[j] * Rat(ring.N(i, j, k));
            if (!(lhs == dims[i] * dims[k]))
                throw Error("not a fusion ring: eigenvector identity fails at (" +
                            std::to_string(i) + "," + std::to_string(k) + ")");
        }
    return {F, std::move(dims)};
}

std::vector<Rat> candidate_coefficients(const CandidateParams& p) {
    Rat u(p.u), v(p.v), t(p.t);
    Rat umv = u - v;
    std::vector<Rat> n(15);
    n[1] = (t * 2 * (Rat(2) + umv * umv) +
            umv * (u * u * u - u * u * v + u * 3 - v * v * u + v * 5 + v * v * v)) /
           2;
    n[2] = u * u - v * v + t * 2;
    n[3] = ((u + v) * umv * umv + v * 3 + u + t * 2 * umv) / 2;
    n[4] = t * 2 + 1;
    n[5] = u + v;
    n[6] = (u * u - v * v + t * 2 + 1) / 2;
    n[7] = (u * u - v * v + t * 2 - 1) / 2;
    n[8] = t * (Rat(2) + umv * umv) + v * v * 2 - u * v * 2 + 1;
    n[9] = t * umv + v * 2;
    n[10] = t;
    n[11] = t + 1;
    n[12] = v;
    n[13] = v;
    n[14] = u;
    return n;
}

std::variant<FusionRing, CandidateRejection> build_candidate(const CandidateParams& p) {
    if (sgn(p.u) < 0 || sgn(p.v) < 0 || sgn(p.t) < 0)
        throw Error("candidate parameters must be nonnegative");
    auto c = candidate_coefficients(p);
    for (size_t i = 1; i <= 14; ++i)
        if (c[i].get_den() != 1)
            return CandidateRejection{"integrality",
                                      "n" + std::to_string(i) + " = " + rat_to_string(c[i])};
    for (size_t i = 1; i <= 14; ++i)
        if (sgn(c[i]) < 0)
            return CandidateRejection{"negativity",
                                      "n" + std::to_string(i) + " = " + rat_to_string(c[i])};
    std::vector<Int> n(15);
    for (size_t i = 1; i <= 14; ++i) n[i] = c[i].get_num();

    // matrices per the one-dual-pair template, rows k and columns j
    auto mk = [&](std::initializer_list<std::initializer_list<int>> rows) {
        std::vector<std::vector<Int>> m;
        for (auto& row : rows) {
            std::vector<Int> r;
            for (int e : row) r.push_back(e >= 0 ? n[static_cast<size_t>(e)] : Int(1));
            m.push_back(std::move(r));
        }
        return m;
    };
    // -1 stands for a literal 1, 0 for a literal 0 (n[0] = 0)
    n[0] = 0;
    auto N1 = mk({{0, -1, 0, 0, 0},
                  {-1, 1, 2, 3, 3},
                  {0, 2, 4, 5, 5},
                  {0, 3, 5, 6, 7},
                  {0, 3, 5, 7, 6}});
    auto N2 = mk({{0, 0, -1, 0, 0},
                  {0, 2, 4, 5, 5},
                  {-1, 4, 8, 9, 9},
                  {0, 5, 9, 10, 11},
                  {0, 5, 9, 11, 10}});
    auto N3 = mk({{0, 0, 0, 0, -1},
                  {0, 3, 5, 7, 6},
                  {0, 5, 9, 11, 10},
                  {-1, 6, 10, 12, 13},
                  {0, 7, 11, 14, 12}});
    unsigned rank = 5;
    std::vector<unsigned> dual{0, 1, 2, 4, 3};
    std::vector<Int> tensor(rank * rank * rank, Int(0));
    auto set_from = [&](unsigned i, const std::vector<std::vector<Int>>& m) {
        for (unsigned k = 0; k < rank; ++k)
            for (unsigned j = 0; j < rank; ++j)
                tensor[(static_cast<size_t>(i) * rank + j) * rank + k] = m[k][j];
    };
    // unit
    for (unsigned j = 0; j < rank; ++j) tensor[(0 * rank + j) * rank + j] = 1;
    set_from(1, N1);
    set_from(2, N2);
    set_from(3, N3);
    // N_4 = transpose of N_3
    std::vector<std::vector<Int>> N4(rank, std::vector<Int>(rank));
    for (unsigned k = 0; k < rank; ++k)
        for (unsigned j = 0; j < rank; ++j) N4[k][j] = N3[j][k];
    set_from(4, N4);
    return FusionRing(rank, std::move(dual), std::move(tensor));
}

CatalogEntry catalog(const std::string& name) {
    if (name == "SU5_1") {
        unsigned n = 5;
        std::vector<unsigned> dual{0, 4, 3, 2, 1};
        std::vector<Int> tensor(n * n * n, Int(0));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                tensor[(static_cast<size_t>(i) * n + j) * n + ((i + j) % n)] = 1;
        // The paper states no twist values for this entry; none are stored.
        return {name, FusionRing(n, std::move(dual), std::move(tensor)), std::nullopt,
                std::nullopt};
    }
    if (name == "SU3_4_mod_Z3") {
        auto built = build_candidate({Int(1), Int(0), Int(0)});
        if (!std::holds_alternative<FusionRing>(built))
            throw Error("internal: catalog candidate rejected");
        DimensionData dims{UniPoly::from_ints({-1, -4, -3, 1}), rat(4), rat(5)};
        TwistData twists{7, {3, 1, 6, 6}};  // theta1 = z^3, theta2 = z, theta3 = theta4 = conj(z)
        return {name, std::get<FusionRing>(built), dims, twists};
    }
    std::string msg = "unknown catalog name '" + name + "'; catalog:";
    for (const auto& k : catalog_names()) msg += " " + k;
    throw Error(msg);
}

std::vector<std::string> catalog_names() { return {"SU3_4_mod_Z3", "SU5_1"}; }

}  // namespace mfc::fusion
