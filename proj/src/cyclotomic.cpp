#include "mfc/cyclotomic.hpp"

#include <mutex>
#include <numeric>

#include "mfc/multipoly.hpp"

namespace mfc {

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw Error("euler phi of zero");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::map<unsigned, UniPoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;

UniPoly x_pow_minus_1(unsigned n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[0] = Rat(-1);
    c[n] = Rat(1);
    return UniPoly(std::move(c));
}

}  // namespace

UniPoly cyclotomic_poly(unsigned s) {
    if (s < 1) throw Error("cyclotomic polynomial needs s >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(s);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    // Phi_s = (x^s - 1) / prod_{d | s, d < s} Phi_d
    UniPoly num = x_pow_minus_1(s);
    for (unsigned d = 1; d < s; ++d) {
        if (s % d == 0) num = num / cyclotomic_poly(d);
    }
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        g_cyclo_cache.emplace(s, num);
    }
    return num;
}

CycloNumber::CycloNumber(unsigned conductor, std::vector<Rat> coeffs)
    : conductor_(conductor), c_(std::move(coeffs)) {
    unsigned long dim = euler_phi(conductor_);
    if (c_.size() > dim) {
        // reduce modulo Phi_s
        UniPoly p{std::vector<Rat>(c_.begin(), c_.end())};
        UniPoly r = p % cyclotomic_poly(conductor_);
        c_.assign(dim, Rat(0));
        for (int i = 0; i <= r.degree(); ++i) c_[static_cast<size_t>(i)] = r.coeff(i);
    } else {
        c_.resize(dim, Rat(0));
    }
}

CycloNumber CycloNumber::zero(unsigned conductor) { return CycloNumber(conductor, {}); }

CycloNumber CycloNumber::from_rat(unsigned conductor, const Rat& a) {
    return CycloNumber(conductor, {a});
}

CycloNumber CycloNumber::zeta(unsigned conductor) { return zeta_power(conductor, 1); }

CycloNumber CycloNumber::zeta_power(unsigned conductor, long k) {
    long s = static_cast<long>(conductor);
    long r = ((k % s) + s) % s;
    std::vector<Rat> c(static_cast<size_t>(r) + 1, Rat(0));
    c[static_cast<size_t>(r)] = Rat(1);
    return CycloNumber(conductor, std::move(c));
}

bool CycloNumber::is_zero() const {
    for (const auto& a : c_)
        if (sgn(a) != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rat CycloNumber::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic number is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

bool CycloNumber::operator==(const CycloNumber& o) const {
    if (conductor_ != o.conductor_) {
        if (is_rational() && o.is_rational()) return rational_value() == o.rational_value();
        throw Error("cyclotomic conductor mismatch");
    }
    return c_ == o.c_;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

namespace {

unsigned common_conductor(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor() == b.conductor()) return a.conductor();
    if (a.is_rational()) return b.conductor();
    if (b.is_rational()) return a.conductor();
    throw Error("cyclotomic conductor mismatch");
}

CycloNumber promote(const CycloNumber& x, unsigned conductor) {
    if (x.conductor() == conductor) return x;
    return CycloNumber::from_rat(conductor, x.rational_value());
}

}  // namespace

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    unsigned s = common_conductor(*this, o);
    CycloNumber a = promote(*this, s), b = promote(o, s);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    unsigned s = common_conductor(*this, o);
    CycloNumber a = promote(*this, s), b = promote(o, s);
    std::vector<Rat> prod(2 * a.c_.size(), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CycloNumber(s, std::move(prod));
}

CycloNumber CycloNumber::operator*(const Rat& a) const {
    CycloNumber r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw Error("inverse of zero cyclotomic number");
    // extended Euclid: u * this + v * Phi_s = 1
    UniPoly a{std::vector<Rat>(c_.begin(), c_.end())};
    UniPoly b = cyclotomic_poly(conductor_);
    UniPoly r0 = b, r1 = a;
    UniPoly s0 = UniPoly::zero(), s1 = UniPoly::constant(Rat(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r] = r0.divmod(r1);
        UniPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r1.is_zero()) throw Error("cyclotomic inverse: not a unit");
    UniPoly inv = s1 * (Rat(1) / r1.coeff(0));
    return CycloNumber(conductor_, inv.coeffs());
}

CycloNumber CycloNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber acc = from_rat(conductor_, Rat(1));
    CycloNumber base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

CycloNumber CycloNumber::galois(long k) const {
    long s = static_cast<long>(conductor_);
    long r = ((k % s) + s) % s;
    if (std::gcd(r, s) != 1) throw Error("galois exponent not coprime to conductor");
    std::vector<Rat> out(static_cast<size_t>(s), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        size_t e = static_cast<size_t>((static_cast<long>(i) * r) % s);
        out[e] += c_[i];
    }
    return CycloNumber(conductor_, std::move(out));
}

std::string CycloNumber::to_string() const {
    UniPoly p{std::vector<Rat>(c_.begin(), c_.end())};
    return p.to_string("z" + std::to_string(conductor_));
}

CycloNumber eval_cyclo(const MultiPoly& p, const std::map<std::string, CycloNumber>& point) {
    unsigned s = 1;
    for (const auto& [k, v] : point) s = std::max(s, v.conductor());
    CycloNumber acc = CycloNumber::zero(s);
    for (const auto& [e, c] : p.terms()) {
        CycloNumber t = CycloNumber::from_rat(s, c);
        for (size_t i = 0; i < p.vars().size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(p.vars()[i]);
            if (it == point.end()) throw Error("eval_cyclo: missing value for " + p.vars()[i]);
            t = t * promote(it->second, s).pow(e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

}  // namespace mfc
