#include "mfc/multipoly.hpp"

#include <algorithm>
#include <cctype>

namespace mfc {

MultiPoly::MultiPoly(std::vector<std::string> vars, std::map<Exps, Rat> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    normalize();
}

void MultiPoly::normalize() {
    for (const auto& [e, c] : terms_)
        if (e.size() != vars_.size()) throw Error("exponent arity mismatch");
    // Sort variables (with exponent columns) and drop zero coefficients.
    std::vector<size_t> idx(vars_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return vars_[a] < vars_[b]; });
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (vars_[idx[i]] == vars_[idx[i + 1]]) throw Error("duplicate variable");
    bool sorted = true;
    for (size_t i = 0; i < idx.size(); ++i)
        if (idx[i] != i) sorted = false;
    std::map<Exps, Rat> out;
    for (const auto& [e, c] : terms_) {
        if (sgn(c) == 0) continue;
        if (sorted) {
            out.emplace(e, c);
        } else {
            Exps p(e.size());
            for (size_t i = 0; i < e.size(); ++i) p[i] = e[idx[i]];
            out.emplace(std::move(p), c);
        }
    }
    if (!sorted) {
        std::vector<std::string> v(vars_.size());
        for (size_t i = 0; i < idx.size(); ++i) v[i] = vars_[idx[i]];
        vars_ = std::move(v);
    }
    terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(const Rat& a) {
    MultiPoly p;
    if (sgn(a) != 0) p.terms_.emplace(Exps{}, a);
    return p;
}

MultiPoly MultiPoly::var(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exps{1}, Rat(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw Error("not a constant polynomial");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    std::vector<std::string> v(vars);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(v.begin(), v.end(), vars_[i]);
        if (it == v.end() || *it != vars_[i])
            throw Error("with_vars: missing variable " + vars_[i]);
        pos[i] = static_cast<size_t>(it - v.begin());
    }
    std::map<Exps, Rat> out;
    for (const auto& [e, c] : terms_) {
        Exps p(v.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) p[pos[i]] = e[i];
        out.emplace(std::move(p), c);
    }
    return MultiPoly(std::move(v), std::move(out));
}

std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() == b.vars()) return {a, b};
    std::vector<std::string> u;
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                   std::back_inserter(u));
    return {a.with_vars(u), b.with_vars(u)};
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ == o.vars_) return terms_ == o.terms_;
    auto [x, y] = align(*this, o);
    return x.terms_ == y.terms_;
}

int MultiPoly::cmp(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = align(a, b);
    if (x.terms_ == y.terms_) return 0;
    if (x.terms_.size() != y.terms_.size())
        return x.terms_.size() < y.terms_.size() ? -1 : 1;
    auto it = x.terms_.begin();
    auto jt = y.terms_.begin();
    for (; it != x.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
        if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
    }
    return 0;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    auto [x, y] = align(*this, o);
    for (const auto& [e, c] : y.terms_) {
        auto it = x.terms_.find(e);
        if (it == x.terms_.end()) {
            x.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) x.terms_.erase(it);
        }
    }
    return x;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    auto [x, y] = align(*this, o);
    MultiPoly out;
    out.vars_ = x.vars_;
    for (const auto& [e1, c1] : x.terms_) {
        for (const auto& [e2, c2] : y.terms_) {
            Exps e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            Rat c = c1 * c2;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(e), c);
            } else {
                it->second += c;
                if (sgn(it->second) == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& a) const {
    if (sgn(a) == 0) return MultiPoly();
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c *= a;
    return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = MultiPoly::constant(Rat(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int MultiPoly::degree(const std::string& var) const {
    if (is_zero()) return -1;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    size_t i = static_cast<size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
    if (is_zero()) return -1;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return static_cast<int>(d);
}

std::set<std::string> MultiPoly::support() const {
    std::set<std::string> s;
    for (size_t i = 0; i < vars_.size(); ++i)
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                s.insert(vars_[i]);
                break;
            }
    return s;
}

MultiPoly MultiPoly::drop_unused_vars() const {
    auto used = support();
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used.count(vars_[i])) keep.push_back(i);
    if (keep.size() == vars_.size()) return *this;
    MultiPoly out;
    for (size_t i : keep) out.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exps p(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) p[i] = e[keep[i]];
        out.terms_.emplace(std::move(p), c);
    }
    return out;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, unsigned k) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        if (k == 0) return *this;
        return MultiPoly();
    }
    size_t i = static_cast<size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    out.vars_.erase(out.vars_.begin() + i);
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exps p(e);
        p.erase(p.begin() + i);
        out.terms_.emplace(std::move(p), c);
    }
    return out;
}

MultiPoly MultiPoly::subst(const std::string& var, const MultiPoly& value) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    MultiPoly out;
    // Horner in the substituted variable.
    for (int k = degree(var); k >= 0; --k)
        out = out * value + coeff_of(var, static_cast<unsigned>(k));
    return out;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw Error("eval: missing value for " + vars_[i]);
            Rat p(1);
            for (unsigned k = 0; k < e[i]; ++k) p *= it->second;
            t *= p;
        }
        acc += t;
    }
    return acc;
}

Rat MultiPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num(0), den(1);
    for (const auto& [e, c] : terms_) {
        num = int_gcd(num, c.get_num());
        den = int_lcm(den, c.get_den());
    }
    Rat r(num, den);
    r.canonicalize();
    return abs(r);
}

MultiPoly MultiPoly::primitive_integer() const {
    if (is_zero()) return *this;
    Rat c = content();
    MultiPoly p = *this * (Rat(1) / c);
    if (sgn(p.terms_.rbegin()->second) < 0) p = -p;
    return p;
}

bool MultiPoly::divide_exact(const MultiPoly& q, MultiPoly& quotient) const {
    if (q.is_zero()) throw Error("division by zero polynomial");
    auto [r0, d] = align(*this, q);
    MultiPoly r = r0;
    MultiPoly quot;
    quot.vars_ = r.vars_;
    // Leading term of d under plain lex on the aligned (sorted) variables.
    const Exps& dl = d.terms_.rbegin()->first;
    const Rat& dc = d.terms_.rbegin()->second;
    while (!r.is_zero()) {
        const Exps& rl = r.terms_.rbegin()->first;
        Exps m(rl.size());
        for (size_t i = 0; i < rl.size(); ++i) {
            if (rl[i] < dl[i]) return false;
            m[i] = rl[i] - dl[i];
        }
        MultiPoly mono;
        mono.vars_ = r.vars_;
        mono.terms_.emplace(std::move(m), r.terms_.rbegin()->second / dc);
        quot = quot + mono;
        r = r - mono * d;
    }
    quotient = quot.drop_unused_vars();
    return true;
}

UniPoly MultiPoly::to_unipoly(const std::string& var) const {
    for (const auto& v : support())
        if (v != var) throw Error("to_unipoly: extra variable " + v);
    int d = degree(var);
    std::vector<Rat> c(static_cast<size_t>(std::max(0, d) + 1), Rat(0));
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    bool have = it != vars_.end() && *it == var;
    size_t idx = have ? static_cast<size_t>(it - vars_.begin()) : 0;
    for (const auto& [e, coef] : terms_) c[have ? e[idx] : 0] = coef;
    return UniPoly(std::move(c));
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, const std::string& var) {
    MultiPoly out;
    out.vars_ = {var};
    for (int i = 0; i <= p.degree(); ++i)
        if (sgn(p.coeff(i)) != 0) out.terms_.emplace(Exps{static_cast<unsigned>(i)}, p.coeff(i));
    return out;
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    // Highest monomial first under plain lex on the sorted variables.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        if (!out.empty()) {
            out += sgn(c) > 0 ? " + " : " - ";
            if (sgn(c) < 0) c = -c;
        } else if (sgn(c) < 0) {
            out += "-";
            c = -c;
        }
        std::string mono;
        for (size_t i = 0; i < vars_.size(); ++i) {
            unsigned e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += rat_to_string(c);
        } else {
            if (c != Rat(1)) out += rat_to_string(c) + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    MultiPoly expr() {
        MultiPoly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (eat('^')) {
            std::string digits = number_token();
            if (digits.empty()) throw Error("parse: exponent expected");
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string number_token() {
        skip();
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            d += s[pos++];
        return d;
    }

    MultiPoly atom() {
        skip();
        if (eat('(')) {
            MultiPoly inner = expr();
            if (!eat(')')) throw Error("parse: expected ')'");
            return inner;
        }
        if (eat('-')) return -atom();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = number_token();
            if (eat('/')) {
                std::string den = number_token();
                if (den.empty()) throw Error("parse: denominator expected");
                return MultiPoly::constant(rat_from_string(num + "/" + den));
            }
            return MultiPoly::constant(rat_from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name += s[pos++];
            return MultiPoly::var(name);
        }
        throw Error("parse: unexpected character at position " + std::to_string(pos));
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Parser p(text);
    MultiPoly out = p.expr();
    p.skip();
    if (p.pos != text.size()) throw Error("parse: trailing input in '" + text + "'");
    return out;
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return MultiPoly();
    if (p.is_constant()) {
        auto r = rat_sqrt(p.constant_value());
        if (!r) return std::nullopt;
        return MultiPoly::constant(*r);
    }
    // long-division square root against the plain-lex leading term
    const auto& [le, lc] = *p.terms().rbegin();
    auto rc = rat_sqrt(lc);
    if (!rc) return std::nullopt;
    Exps he(le);
    for (auto& e : he) {
        if (e % 2 != 0) return std::nullopt;
        e /= 2;
    }
    MultiPoly root(p.vars(), {{he, *rc}});
    MultiPoly lead2 = root * Rat(2);
    MultiPoly residual = p - root * root;
    int guard = static_cast<int>(p.term_count()) * 4 + 8;
    while (!residual.is_zero() && guard-- > 0) {
        // divide the residual's leading term by 2 * leading term of root
        auto [ra, da] = align(residual, lead2);
        const auto& [re2, rc2] = *ra.terms().rbegin();
        const auto& [de2, dc2] = *da.terms().rbegin();
        Exps qe(re2.size());
        for (size_t i = 0; i < re2.size(); ++i) {
            if (re2[i] < de2[i]) return std::nullopt;
            qe[i] = re2[i] - de2[i];
        }
        MultiPoly term(ra.vars(), {{qe, rc2 / dc2}});
        root = root + term;
        lead2 = root * Rat(2);
        residual = p - root * root;
    }
    if (!residual.is_zero()) return std::nullopt;
    return root;
}

MonomialOrder MonomialOrder::lex(std::vector<std::string> priority) {
    MonomialOrder o;
    o.kind = Lex;
    o.priority = std::move(priority);
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::string> priority) {
    MonomialOrder o;
    o.kind = GrevLex;
    o.priority = std::move(priority);
    return o;
}

MonomialOrder MonomialOrder::completed_for(const std::vector<std::string>& vars) const {
    MonomialOrder o = *this;
    std::set<std::string> seen(o.priority.begin(), o.priority.end());
    for (const auto& v : vars)
        if (!seen.count(v)) o.priority.push_back(v);
    return o;
}

bool MonomialOrder::less(const Exps& a, const Exps& b,
                         const std::vector<std::string>& vars) const {
    // position of each priority entry in the sorted vars; entries outside
    // the variable set are ignored (callers on hot paths should cache)
    std::vector<size_t> perm;
    for (const auto& name : completed_for(vars).priority) {
        auto it = std::lower_bound(vars.begin(), vars.end(), name);
        if (it != vars.end() && *it == name)
            perm.push_back(static_cast<size_t>(it - vars.begin()));
    }
    if (perm.size() != vars.size())
        throw Error("monomial order does not cover the variable set");
    if (kind == Lex) {
        for (size_t i = 0; i < perm.size(); ++i) {
            if (a[perm[i]] != b[perm[i]]) return a[perm[i]] < b[perm[i]];
        }
        return false;
    }
    long da = 0, db = 0;
    for (unsigned x : a) da += x;
    for (unsigned x : b) db += x;
    if (da != db) return da < db;
    for (size_t i = perm.size(); i-- > 0;) {
        if (a[perm[i]] != b[perm[i]]) return a[perm[i]] > b[perm[i]];
    }
    return false;
}

std::string MonomialOrder::to_string() const {
    std::string out = kind == Lex ? "lex:" : "grevlex:";
    for (size_t i = 0; i < priority.size(); ++i) {
        if (i) out += ",";
        out += priority[i];
    }
    return out;
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
    MonomialOrder o;
    if (kind == "lex")
        o.kind = Lex;
    else if (kind == "grevlex")
        o.kind = GrevLex;
    else
        throw Error("unknown monomial order: " + kind);
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::string cur;
        for (char c : rest) {
            if (c == ',') {
                if (!cur.empty()) o.priority.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (!cur.empty()) o.priority.push_back(cur);
    }
    return o;
}

}  // namespace mfc
