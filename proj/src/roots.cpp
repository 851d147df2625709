#include "mfc/roots.hpp"

#include <algorithm>
#include <map>

namespace mfc {

std::set<Rat> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("indeterminate: zero polynomial has every root");
    std::set<Rat> roots;
    auto [zeros, q0] = p.strip_zero_roots();
    if (zeros > 0) roots.insert(Rat(0));
    UniPoly q = q0.primitive_integer();
    if (q.degree() == 0) return roots;
    Int a0 = q.coeff(0).get_num();
    Int an = q.lead().get_num();
    for (const Int& num : divisors(a0)) {
        for (const Int& den : divisors(an)) {
            Rat cand(num, den);
            cand.canonicalize();
            if (sgn(q.eval(cand)) == 0) roots.insert(cand);
            if (sgn(q.eval(-cand)) == 0) roots.insert(-cand);
        }
    }
    return roots;
}

ParityCertificate parity_no_integer_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("parity certificate of zero polynomial");
    UniPoly q = p.primitive_integer();
    if (!q.has_integer_coeffs())
        throw Error("parity certificate: non-integer coefficients after clearing");
    ParityCertificate cert;
    cert.value_at_0 = q.eval(Rat(0)).get_num();
    cert.value_at_1 = q.eval(Rat(1)).get_num();
    bool odd0 = mpz_odd_p(cert.value_at_0.get_mpz_t()) != 0;
    bool odd1 = mpz_odd_p(cert.value_at_1.get_mpz_t()) != 0;
    cert.ok = odd0 && odd1;
    cert.detail = "p(0)=" + cert.value_at_0.get_str() + " p(1)=" + cert.value_at_1.get_str() +
                  (cert.ok ? " both odd" : " not both odd");
    return cert;
}

namespace {

// Kronecker trial division: search for a factor of degree exactly k of the
// primitive integer polynomial q by interpolating through divisor tuples of
// the values q(x_i) at k+1 small integer points.
bool kronecker_find_factor(const UniPoly& q, int k, UniPoly& factor) {
    std::vector<Rat> pts;
    for (long v = 0; static_cast<int>(pts.size()) < k + 1; v = (v > 0 ? -v : -v + 1)) {
        if (sgn(q.eval(Rat(v))) != 0) pts.emplace_back(v);
        if (v > 1000) throw Error("kronecker: no usable sample points");
    }
    std::vector<std::vector<Int>> divs;
    size_t tuples = 1;
    for (const auto& x : pts) {
        Int val = q.eval(x).get_num();
        auto d = divisors(val);
        size_t options = 2 * d.size();
        if (tuples > 2'000'000 / options) throw Error("kronecker: factoring budget exceeded");
        tuples *= options;
        divs.push_back(std::move(d));
    }
    // Lagrange basis polynomials for the chosen points.
    std::vector<UniPoly> lagr;
    for (size_t i = 0; i < pts.size(); ++i) {
        UniPoly li = UniPoly::constant(Rat(1));
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            li = li * (UniPoly::x() - UniPoly::constant(pts[j])) *
                 (Rat(1) / (pts[i] - pts[j]));
        }
        lagr.push_back(li);
    }
    std::vector<size_t> idx(pts.size(), 0);
    std::vector<int> sign(pts.size(), 1);
    while (true) {
        UniPoly cand;
        for (size_t i = 0; i < pts.size(); ++i)
            cand = cand + lagr[i] * Rat(sign[i] > 0 ? divs[i][idx[i]] : -divs[i][idx[i]]);
        if (cand.degree() == k && cand.has_integer_coeffs()) {
            auto [quot, rem] = q.divmod(cand);
            if (rem.is_zero()) {
                factor = cand.primitive_integer();
                return true;
            }
        }
        // Advance the (divisor, sign) odometer.
        size_t i = 0;
        for (; i < pts.size(); ++i) {
            if (sign[i] > 0) {
                sign[i] = -1;
                break;
            }
            sign[i] = 1;
            if (++idx[i] < divs[i].size()) break;
            idx[i] = 0;
        }
        if (i == pts.size()) return false;
    }
}

// Factors a squarefree primitive integer polynomial with no rational roots.
void factor_squarefree_core(UniPoly q, std::vector<QFactor>& out, int multiplicity) {
    while (q.degree() > 0) {
        bool found = false;
        int half = q.degree() / 2;
        if (half > 4) {
            // Beyond the trial-division budget; record what remains.
            out.push_back({q, multiplicity, false});
            return;
        }
        for (int k = 2; k <= half && !found; ++k) {
            UniPoly f;
            if (kronecker_find_factor(q, k, f)) {
                out.push_back({f, multiplicity, true});
                q = (q / f).primitive_integer();
                found = true;
            }
        }
        if (!found) {
            out.push_back({q, multiplicity, true});
            return;
        }
    }
}

}  // namespace

QFactorization factor_bounded(const UniPoly& p) {
    if (p.is_zero()) throw Error("factorization of zero polynomial");
    QFactorization result;
    UniPoly prim = p.primitive_integer();
    result.unit = p.lead() / prim.lead();

    // Squarefree decomposition by repeated gcd with the derivative.
    std::map<int, UniPoly> squarefree;  // multiplicity -> product of factors
    UniPoly rest = prim;
    int mult = 1;
    while (rest.degree() > 0) {
        UniPoly g = gcd(rest, rest.derivative());
        UniPoly part = (rest / g).monic();  // squarefree part of rest
        rest = g;
        // part contains every factor of multiplicity >= mult exactly once;
        // peel off those also present in rest to isolate multiplicity mult.
        UniPoly exact = part;
        if (rest.degree() > 0) {
            UniPoly shared = gcd(part, rest);
            exact = (part / shared).monic();
        }
        if (exact.degree() > 0) squarefree[mult] = exact;
        ++mult;
        if (mult > p.degree() + 1) break;
    }

    for (auto& [m, sq] : squarefree) {
        UniPoly q = sq.primitive_integer();
        // Strip rational roots first.
        for (const Rat& r : rational_roots(q)) {
            UniPoly lin = (UniPoly::x() - UniPoly::constant(r)).primitive_integer();
            auto [quot, rem] = q.divmod(lin);
            if (!rem.is_zero()) throw Error("internal: root does not divide");
            result.factors.push_back({lin, m, true});
            q = quot.primitive_integer();
        }
        if (q.degree() > 0) factor_squarefree_core(q, result.factors, m);
    }

    // Fold the unit so that unit * prod(factors) == p exactly.
    UniPoly check = UniPoly::constant(Rat(1));
    for (const auto& f : result.factors)
        for (int i = 0; i < f.multiplicity; ++i) check = check * f.poly;
    if (check.degree() != p.degree()) throw Error("internal: factorization degree mismatch");
    result.unit = p.lead() / check.lead();
    std::sort(result.factors.begin(), result.factors.end(),
              [](const QFactor& a, const QFactor& b) {
                  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
                  return a.poly.coeffs() < b.poly.coeffs();
              });
    return result;
}

bool is_irreducible(const UniPoly& p) {
    UniPoly q = p.primitive_integer();
    if (q.degree() <= 0) return false;
    if (q.degree() == 1) return true;
    if (q.degree() > 8) throw Error("irreducibility test beyond degree budget");
    if (!rational_roots(q).empty()) return false;
    if (gcd(q, q.derivative()).degree() > 0) return false;
    for (int k = 2; k <= q.degree() / 2; ++k) {
        UniPoly f;
        if (kronecker_find_factor(q, k, f)) return false;
    }
    return true;
}

}  // namespace mfc
