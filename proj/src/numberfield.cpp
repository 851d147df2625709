#include "mfc/numberfield.hpp"

#include <algorithm>

#include "mfc/cyclotomic.hpp"
#include "mfc/roots.hpp"

namespace mfc {

namespace {

void check_isolation(const UniPoly& m, const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw Error("number field: empty isolating interval");
    if (sgn(m.eval(lo)) == 0 || sgn(m.eval(hi)) == 0)
        throw Error("number field: interval endpoint is a root");
    if (sgn(m.eval(lo)) * sgn(m.eval(hi)) >= 0)
        throw Error("number field: no sign change on the isolating interval");
    if (sturm_count(m, lo, hi) != 1)
        throw Error("number field: interval does not isolate a single root");
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::make(const UniPoly& minpoly, const Rat& lo,
                                                     const Rat& hi) {
    if (minpoly.degree() < 1) throw Error("number field: constant minimal polynomial");
    if (!is_irreducible(minpoly)) throw Error("number field: reducible minimal polynomial");
    return make_unchecked(minpoly, lo, hi);
}

std::shared_ptr<const NumberField> NumberField::make_unchecked(const UniPoly& minpoly,
                                                               const Rat& lo, const Rat& hi) {
    auto f = std::make_shared<NumberField>(NumberField{});
    f->minpoly_ = minpoly.monic();
    f->lo_ = lo;
    f->hi_ = hi;
    if (f->minpoly_.degree() > 1) check_isolation(f->minpoly_, lo, hi);
    return f;
}

RatInterval NumberField::refine(const Rat& target) const {
    if (minpoly_.degree() == 1) {
        Rat root = -minpoly_.coeff(0);
        return {root - target / 2, root + target / 2};
    }
    RatInterval iv = refine_root(minpoly_, {lo_, hi_}, target);
    lo_ = iv.lo;
    hi_ = iv.hi;
    return iv;
}

NFElem::NFElem(NumberFieldPtr field, UniPoly rep) : field_(std::move(field)) {
    rep_ = rep % field_->minpoly();
}

NFElem NFElem::from_rat(NumberFieldPtr field, const Rat& a) {
    return NFElem(std::move(field), UniPoly::constant(a));
}

NFElem NFElem::generator(NumberFieldPtr field) { return NFElem(std::move(field), UniPoly::x()); }

Rat NFElem::rational_value() const {
    if (!is_rational()) throw Error("number field element is not rational");
    return rep_.coeff(0);
}

namespace {

const NumberFieldPtr& common_field(const NFElem& a, const NFElem& b) {
    if (a.field() && b.field() && a.field() != b.field() &&
        !(a.field()->minpoly() == b.field()->minpoly()))
        throw Error("number field mismatch");
    return a.field() ? a.field() : b.field();
}

}  // namespace

bool NFElem::operator==(const NFElem& o) const { return rep_ == o.rep_; }

NFElem NFElem::operator-() const { return NFElem(field_, -rep_); }

NFElem NFElem::operator+(const NFElem& o) const {
    return NFElem(common_field(*this, o), rep_ + o.rep_);
}

NFElem NFElem::operator-(const NFElem& o) const {
    return NFElem(common_field(*this, o), rep_ - o.rep_);
}

NFElem NFElem::operator*(const NFElem& o) const {
    return NFElem(common_field(*this, o), rep_ * o.rep_);
}

NFElem NFElem::operator*(const Rat& a) const { return NFElem(field_, rep_ * a); }

NFElem NFElem::inverse() const {
    if (is_zero()) throw Error("inverse of zero field element");
    const UniPoly& m = field_->minpoly();
    UniPoly r0 = m, r1 = rep_;
    UniPoly s0 = UniPoly::zero(), s1 = UniPoly::constant(Rat(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r] = r0.divmod(r1);
        UniPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r1.is_zero()) throw Error("not a unit (reducible modulus?)");
    return NFElem(field_, s1 * (Rat(1) / r1.coeff(0)));
}

NFElem NFElem::pow(unsigned e) const {
    NFElem acc = from_rat(field_, Rat(1));
    NFElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

struct Interval {
    Rat lo, hi;
};

Interval iv_add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval iv_mul(const Interval& a, const Interval& b) {
    Rat v1 = a.lo * b.lo, v2 = a.lo * b.hi, v3 = a.hi * b.lo, v4 = a.hi * b.hi;
    Rat lo = v1, hi = v1;
    for (const Rat& v : {v2, v3, v4}) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    return {lo, hi};
}

Interval iv_eval(const UniPoly& p, const Interval& x) {
    Interval acc{Rat(0), Rat(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = iv_mul(acc, x);
        acc = iv_add(acc, {p.coeff(i), p.coeff(i)});
    }
    return acc;
}

}  // namespace

int NFElem::sign() const {
    if (rep_.is_zero()) return 0;
    if (rep_.degree() == 0) return sgn(rep_.coeff(0));
    RatInterval iv = field_->root_interval();
    Rat width = iv.width();
    for (int rounds = 0; rounds < 4096; ++rounds) {
        Interval box = iv_eval(rep_, {iv.lo, iv.hi});
        if (sgn(box.lo) > 0) return 1;
        if (sgn(box.hi) < 0) return -1;
        width /= 2;
        iv = field_->refine(width);
    }
    throw Error("sign refinement did not converge");
}

std::string NFElem::to_string(const std::string& gen) const { return rep_.to_string(gen); }

// ---------------------------------------------------------------------------
// Roots of a rational polynomial inside Q[y]/(m) by modular splitting.
//
// Pick a prime l where m splits into distinct linear factors and p stays
// squarefree.  A root r(y) of p in the field reduces mod l to a choice of a
// root of p mod l at every root of m mod l; each such tuple is interpolated,
// lifted Newton-style in (Z/l^e)[y]/(m), rationally reconstructed and
// verified exactly over Q.  The modular phase only proposes candidates, so
// the exact verification makes every returned root sound; two independent
// primes are used so that a prime dividing a root's denominators cannot
// cost completeness.
// ---------------------------------------------------------------------------

namespace {

using ModPoly = std::vector<Int>;  // dense, constant first, coefficients in [0, mod)

ModPoly mp_trim(ModPoly a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    return a;
}

ModPoly mp_from(const UniPoly& p, const Int& mod) {
    ModPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        Int c = p.coeff(i).get_num() % mod;
        if (sgn(c) < 0) c += mod;
        out.push_back(c);
    }
    return mp_trim(std::move(out));
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const Int& mod) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % mod;
    return mp_trim(std::move(c));
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b, const Int& mod) {
    ModPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % mod;
    return mp_trim(std::move(c));
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, const Int& mod) {
    ModPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % mod + mod) % mod;
    return mp_trim(std::move(c));
}

Int mod_inverse(const Int& a, const Int& mod) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw Error("modular inverse does not exist");
    return inv;
}

ModPoly mp_rem(ModPoly a, const ModPoly& m, const Int& mod) {
    Int lead_inv = mod_inverse(m.back(), mod);
    while (a.size() >= m.size()) {
        Int f = a.back() * lead_inv % mod;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = ((a[shift + i] - f * m[i]) % mod + mod) % mod;
        a = mp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// Extended Euclid over F_l: returns gcd(a, b) and u with u*a = gcd (mod b).
ModPoly mp_gcd_ext(ModPoly a, ModPoly b, const Int& l, ModPoly& u_out) {
    ModPoly r0 = std::move(a), r1 = std::move(b);
    ModPoly s0 = {Int(1)}, s1 = {};
    while (!r1.empty()) {
        Int lead_inv = mod_inverse(r1.back(), l);
        ModPoly q;
        ModPoly rem = r0;
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Int(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Int f = rem.back() * lead_inv % l;
            size_t shift = rem.size() - r1.size();
            q[shift] = f;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = ((rem[shift + i] - f * r1[i]) % l + l) % l;
            rem = mp_trim(std::move(rem));
        }
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, l), l);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    u_out = s0;
    return r0;
}

// q(r) in (Z/mod)[y]/(m) for integer-coefficient q.
ModPoly mp_eval_at(const UniPoly& q, const ModPoly& r, const ModPoly& m, const Int& mod) {
    ModPoly acc;
    ModPoly qm = mp_from(q, mod);
    for (size_t i = qm.size(); i-- > 0;) {
        acc = mp_rem(mp_mul(acc, r, mod), m, mod);
        acc = mp_add(acc, ModPoly{qm[i]}, mod);
    }
    return acc;
}

std::vector<Int> mp_roots_bruteforce(const ModPoly& p, long l) {
    std::vector<Int> roots;
    for (long t = 0; t < l; ++t) {
        Int acc(0);
        for (size_t i = p.size(); i-- > 0;) acc = (acc * t + p[i]) % l;
        if (sgn(acc) == 0) roots.emplace_back(t);
    }
    return roots;
}

std::optional<Rat> rational_reconstruct(const Int& x, const Int& m) {
    Int bound = int_sqrt(m / 2);
    Int r0 = m, r1 = ((x % m) + m) % m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
    if (int_gcd(abs(r1), abs(t1)) != 1) return std::nullopt;
    Rat q(r1, t1);
    q.canonicalize();
    return q;
}

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Exact check over Q that p(r) = 0 mod m, with m monic.
bool verify_root(const UniPoly& p, const UniPoly& m, const UniPoly& r) {
    UniPoly acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = (acc * r) % m;
        acc = acc + UniPoly::constant(p.coeff(i));
    }
    return acc.is_zero();
}

}  // namespace

std::vector<UniPoly> roots_mod_minpoly(const UniPoly& p, const UniPoly& m) {
    if (p.is_zero()) throw Error("roots of zero polynomial");
    if (m.degree() < 1) throw Error("constant modulus");
    std::vector<UniPoly> found;
    auto add_root = [&](const UniPoly& r) {
        if (std::find(found.begin(), found.end(), r) == found.end()) found.push_back(r);
    };
    auto sorted = [&]() {
        std::sort(found.begin(), found.end(),
                  [](const UniPoly& a, const UniPoly& b) { return a.coeffs() < b.coeffs(); });
        return found;
    };

    if (m.degree() == 1) {
        for (const Rat& r : rational_roots(p)) add_root(UniPoly::constant(r));
        return sorted();
    }
    for (const Rat& r : rational_roots(p)) add_root(UniPoly::constant(r));

    UniPoly psf = squarefree_part(p);  // roots only; multiplicities irrelevant
    if (psf.degree() < 2) return sorted();
    UniPoly pz = psf.primitive_integer();
    UniPoly mz = m.primitive_integer();
    UniPoly mmonic = m.monic();
    UniPoly pder = pz.derivative();
    int n = mz.degree();
    size_t max_roots = static_cast<size_t>(pz.degree());

    int primes_used = 0;
    for (long l = 101; l < 100000 && primes_used < 2 && found.size() < max_roots; l += 2) {
        if (!is_prime_small(l)) continue;
        Int L(l);
        if (pz.lead().get_num() % L == 0 || mz.lead().get_num() % L == 0) continue;
        ModPoly pl = mp_from(pz, L), ml = mp_from(mz, L);
        ModPoly scratch;
        ModPoly dp = mp_from(pder, L);
        if (mp_gcd_ext(pl, dp, L, scratch).size() > 1) continue;  // p not squarefree mod l
        ModPoly dm = mp_from(mz.derivative(), L);
        if (mp_gcd_ext(ml, dm, L, scratch).size() > 1) continue;
        auto m_roots = mp_roots_bruteforce(ml, l);
        if (static_cast<int>(m_roots.size()) != n) continue;  // want complete splitting
        auto p_roots = mp_roots_bruteforce(pl, l);
        ++primes_used;
        if (p_roots.empty()) continue;

        // Lagrange basis at the roots of m mod l.
        std::vector<ModPoly> lagr;
        for (size_t i = 0; i < m_roots.size(); ++i) {
            ModPoly li = {Int(1)};
            Int denom(1);
            for (size_t j = 0; j < m_roots.size(); ++j) {
                if (i == j) continue;
                li = mp_mul(li, ModPoly{(L - m_roots[j]) % L, Int(1)}, L);
                denom = denom * (((m_roots[i] - m_roots[j]) % L + L) % L) % L;
            }
            Int dinv = mod_inverse(denom, L);
            for (auto& c : li) c = c * dinv % L;
            lagr.push_back(std::move(li));
        }

        size_t tuple_count = 1;
        bool overflow = false;
        for (int i = 0; i < n; ++i) {
            if (tuple_count > 200000 / p_roots.size()) {
                overflow = true;
                break;
            }
            tuple_count *= p_roots.size();
        }
        if (overflow) continue;

        std::vector<size_t> choice(static_cast<size_t>(n), 0);
        while (true) {
            ModPoly r;
            for (size_t i = 0; i < choice.size(); ++i) {
                ModPoly term = lagr[i];
                for (auto& c : term) c = c * p_roots[choice[i]] % L;
                r = mp_add(r, term, L);
            }
            ModPoly pr = mp_eval_at(pder, r, ml, L);
            ModPoly u;
            ModPoly g = mp_gcd_ext(pr, ml, L, u);  // u * p'(r) = g (mod ml)
            if (g.size() == 1) {                   // p'(r) invertible: Newton-liftable
                Int ginv = mod_inverse(g[0], L);
                ModPoly w = u;
                for (auto& c : w) c = c * ginv % L;
                w = mp_rem(std::move(w), ml, L);

                Int mod = L;
                ModPoly rcur = std::move(r), wcur = std::move(w);
                for (int stage = 0; stage < 7; ++stage) {
                    mod = mod * mod;
                    ModPoly mlift = mp_from(mz, mod);
                    ModPoly pval = mp_eval_at(pz, rcur, mlift, mod);
                    rcur = mp_sub(rcur, mp_rem(mp_mul(pval, wcur, mod), mlift, mod), mod);
                    ModPoly dval = mp_eval_at(pder, rcur, mlift, mod);
                    ModPoly two = {Int(2)};
                    wcur = mp_rem(mp_mul(wcur,
                                         mp_sub(two, mp_rem(mp_mul(dval, wcur, mod), mlift, mod),
                                                mod),
                                         mod),
                                  mlift, mod);
                    std::vector<Rat> coeffs(rcur.size(), Rat(0));
                    bool ok = true;
                    for (size_t i = 0; i < rcur.size() && ok; ++i) {
                        auto q = rational_reconstruct(rcur[i], mod);
                        if (!q)
                            ok = false;
                        else
                            coeffs[i] = *q;
                    }
                    if (ok) {
                        UniPoly cand{std::vector<Rat>(coeffs.begin(), coeffs.end())};
                        if (verify_root(pz, mmonic, cand)) {
                            add_root(cand);
                            break;
                        }
                        // A stable but wrong reconstruction will repeat; give
                        // it one more doubling to rule out coincidence.
                        if (stage >= 4) break;
                    }
                }
            }
            size_t i = 0;
            for (; i < choice.size(); ++i) {
                if (++choice[i] < p_roots.size()) break;
                choice[i] = 0;
            }
            if (i == choice.size()) break;
        }
    }
    return sorted();
}

std::vector<NFElem> roots_in_field(const UniPoly& p, const NumberFieldPtr& field) {
    if (!is_irreducible(field->minpoly()))
        throw Error("roots_in_field: reducible minimal polynomial");
    std::vector<NFElem> out;
    for (const UniPoly& r : roots_mod_minpoly(p, field->minpoly())) out.emplace_back(field, r);
    return out;
}

std::vector<CycloNumber> roots_in_cyclotomic(const UniPoly& p, unsigned conductor) {
    UniPoly m = cyclotomic_poly(conductor);
    std::vector<CycloNumber> out;
    for (const UniPoly& r : roots_mod_minpoly(p, m)) {
        std::vector<Rat> c(r.coeffs());
        out.emplace_back(conductor, std::move(c));
    }
    return out;
}

}  // namespace mfc
