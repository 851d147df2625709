#include "mfc/unipoly.hpp"

#include <algorithm>

namespace mfc {

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(int deg, const Rat& a) {
    if (deg < 0) throw Error("negative degree monomial");
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = a;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

const Rat& UniPoly::lead() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& a : c) a = -a;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& a) const {
    if (sgn(a) == 0) return UniPoly();
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= a;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    UniPoly r = *this;
    std::vector<Rat> q(std::max(0, degree() - d.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat f = r.lead() / d.lead();
        int k = r.degree() - d.degree();
        q[k] = f;
        r = r - UniPoly::monomial(k, f) * d;
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::operator/(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

UniPoly UniPoly::operator%(const UniPoly& d) const { return divmod(d).second; }

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + UniPoly::constant(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (degree() <= 0) return UniPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lead());
}

std::pair<int, UniPoly> UniPoly::strip_zero_roots() const {
    if (is_zero()) throw Error("strip_zero_roots of zero polynomial");
    size_t k = 0;
    while (k < c_.size() && sgn(c_[k]) == 0) ++k;
    return {static_cast<int>(k), UniPoly(std::vector<Rat>(c_.begin() + k, c_.end()))};
}

UniPoly UniPoly::primitive_integer() const {
    if (is_zero()) return *this;
    Int den(1), num(0);
    for (const auto& a : c_) den = int_lcm(den, a.get_den());
    std::vector<Rat> c(c_);
    for (auto& a : c) {
        a *= Rat(den);
        a.canonicalize();
        num = int_gcd(num, a.get_num());
    }
    if (sgn(c.back()) < 0) num = -num;
    for (auto& a : c) {
        a /= Rat(num);
        a.canonicalize();
    }
    return UniPoly(std::move(c));
}

bool UniPoly::has_integer_coeffs() const {
    for (const auto& a : c_)
        if (a.get_den() != 1) return false;
    return true;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat a = c_[i];
        if (sgn(a) == 0) continue;
        if (!out.empty()) {
            out += sgn(a) > 0 ? " + " : " - ";
            if (sgn(a) < 0) a = -a;
        }
        bool unit = (a == Rat(1)) && i > 0;
        if (!unit) out += rat_to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f % g;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw Error("squarefree part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rat(1));
    UniPoly g = gcd(p, p.derivative());
    return (p / g).monic();
}

Rat root_bound(const UniPoly& p) {
    if (p.is_zero()) throw Error("root bound of zero polynomial");
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat a = abs(p.coeff(i) / p.lead());
        if (a > m) m = a;
    }
    return m + 1;
}

}  // namespace mfc
