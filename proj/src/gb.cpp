#include "mfc/gb.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>

namespace mfc::gb {

PolyIdeal PolyIdeal::over(std::vector<MultiPoly> gens) {
    std::set<std::string> vars;
    for (const auto& g : gens)
        for (const auto& v : g.support()) vars.insert(v);
    PolyIdeal ideal;
    ideal.vars.assign(vars.begin(), vars.end());
    for (auto& g : gens) ideal.gens.push_back(g.drop_unused_vars().with_vars(ideal.vars));
    return ideal;
}

RunLimits RunLimits::parse(const std::string& text, RunLimits base) {
    RunLimits out = base;
    std::string key, val;
    bool in_val = false;
    auto commit = [&]() {
        if (key.empty()) return;
        if (key == "pairs")
            out.max_pairs = std::stoul(val);
        else if (key == "terms")
            out.max_terms = std::stoul(val);
        else if (key == "seconds")
            out.seconds = std::stod(val);
        else
            throw Error("unknown limit key: " + key);
        key.clear();
        val.clear();
        in_val = false;
    };
    for (char c : text) {
        if (c == ',') {
            commit();
        } else if (c == '=') {
            in_val = true;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            (in_val ? val : key) += c;
        }
    }
    commit();
    return out;
}

RunLimits RunLimits::parse(const std::string& text) { return parse(text, RunLimits{}); }

RunLimits RunLimits::from_env(RunLimits base) {
    const char* env = std::getenv("MTC_LIMITS");
    if (!env) return base;
    return parse(env, base);
}

std::string RunLimits::to_string() const {
    return "pairs=" + std::to_string(max_pairs) + ",terms=" + std::to_string(max_terms) +
           ",seconds=" + std::to_string(seconds);
}

namespace {

// Monomial order with the variable permutation resolved against a fixed
// sorted variable list.
struct OrderView {
    MonomialOrder::Kind kind;
    std::vector<size_t> perm;  // highest variable first

    static OrderView make(const MonomialOrder& ord, const std::vector<std::string>& vars) {
        MonomialOrder full = ord.completed_for(vars);
        OrderView v;
        v.kind = full.kind;
        // priority entries outside the variable set are ignored
        for (const auto& name : full.priority) {
            auto it = std::lower_bound(vars.begin(), vars.end(), name);
            if (it != vars.end() && *it == name)
                v.perm.push_back(static_cast<size_t>(it - vars.begin()));
        }
        if (v.perm.size() != vars.size()) throw Error("order does not cover the variable set");
        return v;
    }

    bool less(const Exps& a, const Exps& b) const {
        if (kind == MonomialOrder::Lex) {
            for (size_t i : perm)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        }
        unsigned long da = 0, db = 0;
        for (unsigned x : a) da += x;
        for (unsigned x : b) db += x;
        if (da != db) return da < db;
        for (size_t i = perm.size(); i-- > 0;) {
            size_t k = perm[i];
            if (a[k] != b[k]) return a[k] > b[k];
        }
        return false;
    }
};

struct DescCmp {
    const OrderView* view;
    bool operator()(const Exps& a, const Exps& b) const { return view->less(b, a); }
};

using TermMap = std::map<Exps, Rat, DescCmp>;  // leading term first

struct GBPoly {
    std::vector<std::pair<Exps, Rat>> t;  // descending
    const Exps& lm() const { return t.front().first; }
    const Rat& lc() const { return t.front().second; }
};

bool divides(const Exps& a, const Exps& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exp_lcm(const Exps& a, const Exps& b) {
    Exps c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

Exps exp_sub(const Exps& a, const Exps& b) {
    Exps c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

bool coprime(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

unsigned long tdeg(const Exps& e) {
    unsigned long d = 0;
    for (unsigned x : e) d += x;
    return d;
}

GBPoly to_gbpoly(const MultiPoly& p, const OrderView& view) {
    GBPoly g;
    g.t.assign(p.terms().begin(), p.terms().end());
    std::sort(g.t.begin(), g.t.end(),
              [&](const auto& a, const auto& b) { return view.less(b.first, a.first); });
    return g;
}

MultiPoly from_gbpoly(const GBPoly& g, const std::vector<std::string>& vars) {
    std::map<Exps, Rat> terms(g.t.begin(), g.t.end());
    return MultiPoly(vars, std::move(terms));
}

GBPoly normalize_primitive(GBPoly g) {
    if (g.t.empty()) return g;
    Int num(0), den(1);
    for (const auto& [e, c] : g.t) {
        num = int_gcd(num, c.get_num());
        den = int_lcm(den, c.get_den());
    }
    Rat scale(den, num);
    scale.canonicalize();
    scale = abs(scale);
    if (sgn(g.t.front().second) < 0) scale = -scale;
    for (auto& [e, c] : g.t) {
        c *= scale;
        c.canonicalize();
    }
    return g;
}

struct Engine {
    const std::vector<std::string>& vars;
    OrderView view;
    RunLimits limits;
    std::chrono::steady_clock::time_point start;
    size_t pairs_processed = 0;
    bool timed_out = false;
    std::string trace;

    bool out_of_budget() {
        if (pairs_processed > limits.max_pairs) {
            trace = "pair budget exceeded (" + std::to_string(pairs_processed) + ")";
            return true;
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > limits.seconds) {
            trace = "wall clock exceeded (" + std::to_string(elapsed) + "s)";
            return true;
        }
        return false;
    }

    // Full normal form of f against basis; deterministic (first reducer by
    // basis index).
    GBPoly reduce_full(const GBPoly& f, const std::vector<GBPoly>& basis) {
        DescCmp cmp{&view};
        std::map<Exps, Rat, DescCmp> work(cmp), out(cmp);
        for (const auto& [e, c] : f.t) work.emplace(e, c);
        while (!work.empty()) {
            if (work.size() + out.size() > limits.max_terms) {
                timed_out = true;
                trace = "term budget exceeded";
                break;
            }
            auto lead = *work.begin();
            const GBPoly* red = nullptr;
            for (const auto& g : basis) {
                if (!g.t.empty() && divides(g.lm(), lead.first)) {
                    red = &g;
                    break;
                }
            }
            if (!red) {
                out.emplace(lead.first, lead.second);
                work.erase(work.begin());
                continue;
            }
            Rat factor = lead.second / red->lc();
            Exps shift = exp_sub(lead.first, red->lm());
            for (const auto& [e, c] : red->t) {
                Exps key(e.size());
                for (size_t i = 0; i < e.size(); ++i) key[i] = e[i] + shift[i];
                auto it = work.find(key);
                if (it == work.end()) {
                    work.emplace(std::move(key), -factor * c);
                } else {
                    it->second -= factor * c;
                    if (sgn(it->second) == 0) work.erase(it);
                }
            }
        }
        GBPoly r;
        r.t.assign(out.begin(), out.end());
        return r;
    }

    GBPoly spoly(const GBPoly& f, const GBPoly& g) {
        Exps L = exp_lcm(f.lm(), g.lm());
        DescCmp cmp{&view};
        std::map<Exps, Rat, DescCmp> acc(cmp);
        Exps sf = exp_sub(L, f.lm());
        Exps sg = exp_sub(L, g.lm());
        for (const auto& [e, c] : f.t) {
            Exps key(e.size());
            for (size_t i = 0; i < e.size(); ++i) key[i] = e[i] + sf[i];
            acc[key] += c / f.lc();
        }
        for (const auto& [e, c] : g.t) {
            Exps key(e.size());
            for (size_t i = 0; i < e.size(); ++i) key[i] = e[i] + sg[i];
            acc[key] -= c / g.lc();
        }
        GBPoly s;
        for (auto& [e, c] : acc)
            if (sgn(c) != 0) s.t.emplace_back(e, c);
        return s;
    }
};

struct Pair {
    size_t i, j;
    Exps lcm;
    unsigned long deg;
};

}  // namespace

GbResult buchberger(const PolyIdeal& ideal, const MonomialOrder& order, const RunLimits& limits) {
    for (const auto& g : ideal.gens)
        if (g.is_zero()) throw Error("buchberger: zero generator");
    GbResult result;
    result.basis.vars = ideal.vars;
    result.basis.order = order.completed_for(ideal.vars);

    Engine eng{ideal.vars, OrderView::make(order, ideal.vars), RunLimits::from_env(limits),
               std::chrono::steady_clock::now()};

    std::vector<GBPoly> G;
    std::vector<Pair> P;

    auto push_pairs = [&](size_t t) {
        // Gebauer-Moeller update for the new element G[t].
        std::vector<Pair> fresh;
        for (size_t i = 0; i < t; ++i) {
            if (G[i].t.empty()) continue;
            Exps L = exp_lcm(G[i].lm(), G[t].lm());
            fresh.push_back({i, t, L, tdeg(L)});
        }
        // criterion M/F: drop (i,t) if some (j,t) has lcm properly dividing,
        // keep only the first among equal lcms.
        std::vector<char> drop(fresh.size(), 0);
        for (size_t a = 0; a < fresh.size(); ++a) {
            for (size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm != fresh[a].lcm && divides(fresh[b].lcm, fresh[a].lcm))
                    drop[a] = 1;
                else if (fresh[b].lcm == fresh[a].lcm && b < a)
                    drop[a] = 1;
            }
        }
        // criterion B (coprime leading monomials reduce to zero)
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a] && coprime(G[fresh[a].i].lm(), G[t].lm())) drop[a] = 1;
        // prune old pairs made redundant by G[t]
        std::vector<Pair> kept;
        for (const auto& pr : P) {
            Exps lcm_it = exp_lcm(G[pr.i].lm(), G[t].lm());
            Exps lcm_jt = exp_lcm(G[pr.j].lm(), G[t].lm());
            bool redundant = divides(G[t].lm(), pr.lcm) && lcm_it != pr.lcm && lcm_jt != pr.lcm;
            if (!redundant) kept.push_back(pr);
        }
        P = std::move(kept);
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) P.push_back(fresh[a]);
    };

    for (const auto& g : ideal.gens) {
        MultiPoly aligned = g.drop_unused_vars().with_vars(ideal.vars);
        GBPoly p = eng.reduce_full(to_gbpoly(aligned, eng.view), G);
        if (eng.timed_out) break;
        if (p.t.empty()) continue;
        G.push_back(normalize_primitive(std::move(p)));
        push_pairs(G.size() - 1);
    }

    while (!P.empty() && !eng.timed_out) {
        if (eng.out_of_budget()) {
            eng.timed_out = true;
            break;
        }
        // normal selection: smallest lcm degree, ties by order then indices
        size_t best = 0;
        for (size_t k = 1; k < P.size(); ++k) {
            const Pair &a = P[k], &b = P[best];
            bool better = false;
            if (a.deg != b.deg) {
                better = a.deg < b.deg;
            } else if (a.lcm != b.lcm) {
                better = eng.view.less(a.lcm, b.lcm);
            } else {
                better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
            }
            if (better) best = k;
        }
        Pair pr = P[best];
        P.erase(P.begin() + static_cast<long>(best));
        ++eng.pairs_processed;
        GBPoly s = eng.spoly(G[pr.i], G[pr.j]);
        GBPoly r = eng.reduce_full(s, G);
        if (eng.timed_out) break;
        if (r.t.empty()) continue;
        G.push_back(normalize_primitive(std::move(r)));
        push_pairs(G.size() - 1);
    }

    result.pairs_processed = eng.pairs_processed;
    if (eng.timed_out) {
        result.status = GbStatus::Timeout;
        result.trace = eng.trace + "; pairs=" + std::to_string(eng.pairs_processed) +
                       ", basis_size=" + std::to_string(G.size());
        return result;
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<char> keep(G.size(), 1);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(G[j].lm(), G[i].lm()) &&
                !(G[j].lm() == G[i].lm() && j > i))
                keep[i] = 0;
        }
    }
    std::vector<GBPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(G[i]);
    // tail-reduce each against the others
    std::vector<GBPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GBPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        GBPoly r = eng.reduce_full(minimal[i], others);
        if (eng.timed_out) {
            result.status = GbStatus::Timeout;
            result.trace = eng.trace + " (during autoreduction)";
            return result;
        }
        if (!r.t.empty()) reduced.push_back(normalize_primitive(std::move(r)));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const GBPoly& a, const GBPoly& b) { return eng.view.less(a.lm(), b.lm()); });
    for (const auto& g : reduced) result.basis.polys.push_back(from_gbpoly(g, ideal.vars));
    return result;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis) {
    // Variables of p outside the basis ring ride along untouched.
    std::vector<std::string> vars = basis.vars;
    for (const auto& v : p.support())
        if (!std::binary_search(basis.vars.begin(), basis.vars.end(), v)) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    OrderView view = OrderView::make(basis.order, vars);
    Engine eng{vars, view, RunLimits{}, std::chrono::steady_clock::now()};
    std::vector<GBPoly> G;
    for (const auto& g : basis.polys) G.push_back(to_gbpoly(g.with_vars(vars), view));
    MultiPoly aligned = p.drop_unused_vars().with_vars(vars);
    GBPoly r = eng.reduce_full(to_gbpoly(aligned, view), G);
    if (eng.timed_out) throw Error("normal form exceeded term budget");
    return from_gbpoly(r, vars).drop_unused_vars();
}

bool in_ideal(const MultiPoly& p, const GroebnerBasis& basis) {
    return normal_form(p, basis).is_zero();
}

GbResult eliminate(const PolyIdeal& ideal, const std::vector<std::string>& keep,
                   const RunLimits& limits) {
    std::set<std::string> keepset(keep.begin(), keep.end());
    for (const auto& v : keepset)
        if (!std::binary_search(ideal.vars.begin(), ideal.vars.end(), v))
            throw Error("eliminate: variable not in ideal: " + v);
    std::vector<std::string> eliminated, kept;
    for (const auto& v : ideal.vars)
        (keepset.count(v) ? kept : eliminated).push_back(v);
    std::vector<std::string> priority = eliminated;
    priority.insert(priority.end(), kept.begin(), kept.end());
    GbResult gb = buchberger(ideal, MonomialOrder::lex(priority), limits);
    if (!gb.ok()) return gb;
    GbResult out;
    out.pairs_processed = gb.pairs_processed;
    out.basis.vars = kept;
    out.basis.order = MonomialOrder::lex(kept);
    for (const auto& g : gb.basis.polys) {
        auto sup = g.support();
        bool pure = std::all_of(sup.begin(), sup.end(),
                                [&](const std::string& v) { return keepset.count(v) > 0; });
        if (pure) out.basis.polys.push_back(g.drop_unused_vars().with_vars(kept));
    }
    return out;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    int dp = p.degree(var), dq = q.degree(var);
    if (p.is_zero() || q.is_zero()) throw Error("resultant of zero polynomial");
    if (dp <= 0 && dq <= 0) throw Error("resultant: both polynomials constant in " + var);
    if (dp <= 0) return p.pow(static_cast<unsigned>(dq));
    if (dq <= 0) return q.pow(static_cast<unsigned>(dp));

    size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<MultiPoly>> M(n, std::vector<MultiPoly>(n));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k)
            M[static_cast<size_t>(row)][static_cast<size_t>(row + k)] =
                p.coeff_of(var, static_cast<unsigned>(dp - k));
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k)
            M[static_cast<size_t>(dq + row)][static_cast<size_t>(row + k)] =
                q.coeff_of(var, static_cast<unsigned>(dq - k));

    // fraction-free Bareiss elimination over the polynomial ring
    MultiPoly prev = MultiPoly::constant(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly();  // singular: resultant 0
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                MultiPoly quot;
                if (!num.divide_exact(prev, quot))
                    throw Error("bareiss: inexact division");
                M[i][j] = quot;
            }
            M[i][k] = MultiPoly();
        }
        prev = M[k][k];
    }
    MultiPoly det = M[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::set<std::pair<Int, Int>> solve_dio(const Int& t) {
    if (sgn(t) < 0) throw Error("solve_dio: t must be nonnegative");
    std::set<std::pair<Int, Int>> out;
    Int c = 4 * t * t + 2 * t + 1;  // the equation reads (u+v)((2t-1)u-(2t+3)v) = -c
    Int step = 4 * t + 2;
    for (const Int& a : divisors(c)) {
        Int b = -(c / a);
        Int num_u = (2 * t + 3) * a + b;
        if (num_u % step != 0) continue;
        Int u = num_u / step;
        Int v = a - u;
        if (sgn(u) < 0 || sgn(v) < 0) continue;
        out.emplace(u, v);
    }
    return out;
}

}  // namespace mfc::gb
