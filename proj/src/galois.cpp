#include "mfc/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mfc/gb.hpp"

namespace mfc::galois {

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Permutation inverse(const Permutation& p) {
    Permutation q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<unsigned>(i);
    return q;
}

std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (unsigned i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        unsigned j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += " ";
            out += std::to_string(j);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

// ---------------------------------------------------------------------------
// template construction
// ---------------------------------------------------------------------------

std::string SMatrixTemplate::dim_symbol(unsigned label) const {
    if (label == 0) return "1";
    // names follow the rank-4/5 conventions: self-dual labels d, f, ...;
    // the dual pair shares g
    static const char* selfdual_names[] = {"d", "f", "d3", "d4", "d5"};
    static const char* pair_names[] = {"g", "g2"};
    unsigned sd = 0, pr = 0;
    for (unsigned i = 1; i < rank; ++i) {
        if (dual[i] == i) {
            if (i == label) return selfdual_names[sd];
            ++sd;
        } else if (dual[i] > i) {
            if (i == label || dual[i] == label) return pair_names[pr];
            ++pr;
        }
    }
    throw Error("dim_symbol: bad label");
}

MultiPoly SMatrixTemplate::dim_poly(unsigned label) const {
    if (label == 0) return MultiPoly::constant(1);
    return MultiPoly::var(dim_symbol(label));
}

void SMatrixTemplate::substitute(const std::string& symbol, const MultiPoly& value) {
    for (auto& row : entries)
        for (auto& e : row) {
            e.re = e.re.subst(symbol, value);
            e.im = e.im.subst(symbol, value);
        }
    for (auto& c : constraints) c = c.subst(symbol, value);
    for (auto& [s, v] : substitutions) v = v.subst(symbol, value);
    substitutions.emplace_back(symbol, value);
}

std::optional<MultiPoly> SMatrixTemplate::substitution_for(const std::string& symbol) const {
    for (const auto& [s, v] : substitutions)
        if (s == symbol) return v;
    return std::nullopt;
}

SMatrixTemplate SMatrixTemplate::build(unsigned rank, const std::vector<unsigned>& dual) {
    if (dual.size() != rank) throw Error("dual size mismatch");
    for (unsigned i = 0; i < rank; ++i)
        if (dual[i] >= rank || dual[dual[i]] != i) throw Error("dual not an involution");
    if (dual[0] != 0) throw Error("dual must fix the unit");
    unsigned pairs = 0;
    for (unsigned i = 1; i < rank; ++i)
        if (dual[i] > i) ++pairs;
    if (pairs == 0) throw Error("template needs a non-self-dual label");
    if (pairs > 1) throw Error("templates with more than one dual pair are not supported");

    SMatrixTemplate T;
    T.rank = rank;
    T.dual = dual;
    T.entries.assign(rank, std::vector<CEntry>(rank));

    // symbol pools, following the paper's layout
    static const char* selfpair_syms[] = {"x", "y", "z", "w1", "w2", "w3"};
    static const char* mixed_syms[] = {"a", "b", "c1", "c2"};
    unsigned sp = 0, mx = 0;
    std::map<std::pair<unsigned, unsigned>, CEntry> assigned;

    auto zero = MultiPoly();
    auto real_entry = [&](const MultiPoly& p) { return CEntry{p, zero}; };

    unsigned p_lo = 0, p_hi = 0;
    for (unsigned i = 1; i < rank; ++i)
        if (dual[i] > i) {
            p_lo = i;
            p_hi = dual[i];
        }

    for (unsigned j = 0; j < rank; ++j) {
        for (unsigned k = j; k < rank; ++k) {
            CEntry e;
            bool j_pair = (j == p_lo || j == p_hi);
            bool k_pair = (k == p_lo || k == p_hi);
            if (j == 0) {
                e = real_entry(T.dim_poly(k));
            } else if (!j_pair && !k_pair) {
                auto key = std::make_pair(j, k);
                if (!assigned.count(key)) {
                    assigned[key] = real_entry(MultiPoly::var(selfpair_syms[sp++]));
                }
                e = assigned[key];
            } else if (!j_pair && k_pair) {
                // shared symbol for (j, p_lo) and (j, p_hi)
                auto key = std::make_pair(j, p_lo);
                if (!assigned.count(key)) {
                    assigned[key] = real_entry(MultiPoly::var(mixed_syms[mx++]));
                }
                e = assigned[key];
            } else {
                // both inside the dual pair: h1 +- i h2
                MultiPoly h1 = MultiPoly::var("h1"), h2 = MultiPoly::var("h2");
                if (j == k) {
                    e = CEntry{h1, h2};  // diagonal h
                } else {
                    e = CEntry{h1, -h2};  // off-diagonal conjugate
                }
            }
            T.entries[j][k] = e;
            T.entries[k][j] = e;
        }
    }

    for (unsigned i = 1; i < rank; ++i) {
        std::string s = T.dim_symbol(i);
        if (std::find(T.positive.begin(), T.positive.end(), s) == T.positive.end()) {
            T.positive.push_back(s);
            T.at_least_one.push_back(s);
        }
    }
    T.positive.push_back("D");
    // h2 > 0 is the global-conjugation convention; it is at least nonzero
    // because h is not real.
    T.positive.push_back("h2");
    T.nonzero.push_back("h2");
    for (unsigned i = 0; sp > i; ++i) T.solvable.push_back(selfpair_syms[i]);
    for (unsigned i = 0; mx > i; ++i) T.solvable.push_back(mixed_syms[i]);
    T.solvable.push_back("h1");
    T.solvable.push_back("h2");
    T.solvable.push_back("D");
    return T;
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

bool certified_positive(const MultiPoly& p, const std::vector<std::string>& positive,
                        const std::vector<std::string>& at_least_one) {
    if (p.is_zero()) return false;
    std::set<std::string> pos(positive.begin(), positive.end());
    std::set<std::string> one(at_least_one.begin(), at_least_one.end());
    for (const auto& s : p.support())
        if (!pos.count(s) && !one.count(s)) return false;
    MultiPoly shifted = p;
    for (const auto& s : one)
        if (shifted.support().count(s))
            shifted = shifted.subst(s, MultiPoly::var(s) + MultiPoly::constant(1));
    bool strictly_positive_term = false;
    for (const auto& [e, c] : shifted.terms()) {
        if (sgn(c) < 0) return false;
        bool pure_positive = true;
        for (size_t i = 0; i < shifted.vars().size(); ++i)
            if (e[i] > 0 && !pos.count(shifted.vars()[i])) pure_positive = false;
        if (pure_positive) strictly_positive_term = true;  // includes constants
    }
    return strictly_positive_term;
}

std::optional<Certificate> contradiction_certificate(
    const MultiPoly& p, const std::vector<std::string>& positive,
    const std::vector<std::string>& at_least_one, const std::vector<std::string>& nonzero) {
    if (p.is_zero()) return std::nullopt;
    if (p.is_constant())
        return Certificate{"constant", "constraint is the nonzero constant " +
                                           rat_to_string(p.constant_value())};
    std::set<std::string> nz(nonzero.begin(), nonzero.end());
    for (const auto& s : positive) nz.insert(s);
    for (const auto& s : at_least_one) nz.insert(s);

    // single monomial with every symbol known nonzero
    if (p.term_count() == 1) {
        auto support = p.support();
        bool all_nz = std::all_of(support.begin(), support.end(),
                                  [&](const std::string& s) { return nz.count(s) > 0; });
        if (all_nz)
            return Certificate{"nonzero-monomial",
                               p.to_string() + " = 0 with every symbol nonzero"};
    }

    if (certified_positive(p, positive, at_least_one))
        return Certificate{"positivity", p.to_string() + " is strictly positive"};
    if (certified_positive(-p, positive, at_least_one))
        return Certificate{"positivity", p.to_string() + " is strictly negative"};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// constraint engine
// ---------------------------------------------------------------------------

namespace {

struct EngineOutcome {
    CaseStatus status = CaseStatus::Survives;
    std::optional<Certificate> cert;
};

struct ConstraintEngine {
    SMatrixTemplate T;
    EngineOutcome outcome;

    explicit ConstraintEngine(SMatrixTemplate tmpl) : T(std::move(tmpl)) {}

    bool eliminated() const { return outcome.status == CaseStatus::Eliminated; }

    void fail(Certificate c) {
        if (!eliminated()) {
            outcome.status = CaseStatus::Eliminated;
            outcome.cert = std::move(c);
        }
    }

    void add(const MultiPoly& p) {
        if (p.is_zero()) return;
        T.constraints.push_back(p.drop_unused_vars());
    }

    // divide out a monomial factor consisting of known-nonzero symbols
    MultiPoly strip_nonzero_content(MultiPoly p) {
        if (p.is_zero()) return p;
        std::set<std::string> nz(T.nonzero.begin(), T.nonzero.end());
        for (const auto& s : T.positive) nz.insert(s);
        for (const auto& s : T.at_least_one) nz.insert(s);
        const auto& vars = p.vars();
        Exps common;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            if (first) {
                common = e;
                first = false;
            } else {
                for (size_t i = 0; i < e.size(); ++i) common[i] = std::min(common[i], e[i]);
            }
        }
        bool any = false;
        for (size_t i = 0; i < common.size(); ++i) {
            if (common[i] > 0 && nz.count(vars[i]))
                any = true;
            else
                common[i] = 0;
        }
        if (!any) return p;
        std::map<Exps, Rat> terms;
        for (const auto& [e, c] : p.terms()) {
            Exps ne(e);
            for (size_t i = 0; i < ne.size(); ++i) ne[i] -= common[i];
            terms.emplace(std::move(ne), c);
        }
        return MultiPoly(vars, std::move(terms)).drop_unused_vars();
    }

    bool is_solvable(const std::string& s) const {
        return std::find(T.solvable.begin(), T.solvable.end(), s) != T.solvable.end();
    }

    // try to solve p = 0 linearly for a solvable symbol with constant
    // rational coefficient
    bool try_linear(const MultiPoly& p) {
        for (const auto& v : T.solvable) {
            if (p.degree(v) != 1) continue;
            MultiPoly a = p.coeff_of(v, 1);
            if (!a.is_constant()) continue;
            MultiPoly b = p.coeff_of(v, 0);
            MultiPoly value = b * (Rat(-1) / a.constant_value());
            bool v_nonzero = std::find(T.nonzero.begin(), T.nonzero.end(), v) != T.nonzero.end();
            bool v_positive =
                std::find(T.positive.begin(), T.positive.end(), v) != T.positive.end();
            if ((v_nonzero || v_positive) && value.is_zero()) {
                fail({"nonzero-forced-zero", v + " = 0 but " + v + " is known nonzero"});
                return true;
            }
            if (v_positive) {
                auto neg = contradiction_certificate(-value, T.positive, T.at_least_one,
                                                     T.nonzero);
                if (neg && neg->kind == "positivity" &&
                    neg->detail.find("strictly positive") != std::string::npos) {
                    fail({"positivity", v + " = " + value.to_string() +
                                            " is negative but " + v + " is known positive"});
                    return true;
                }
            }
            T.substitute(v, value);
            T.notes.push_back("solved " + v + " = " + value.to_string());
            return true;
        }
        return false;
    }

    // A v^2 - B = 0 with v positive and B a positive-witness square
    bool try_square(const MultiPoly& p) {
        for (const auto& v : T.positive) {
            if (!is_solvable(v)) continue;
            if (p.degree(v) != 2) continue;
            if (!p.coeff_of(v, 1).is_zero()) continue;
            MultiPoly a = p.coeff_of(v, 2);
            if (!a.is_constant()) continue;
            MultiPoly q = p.coeff_of(v, 0) * (Rat(-1) / a.constant_value());
            auto root = poly_sqrt(q);
            if (!root) continue;
            // the root must be certifiably positive to match v > 0
            MultiPoly r = *root;
            auto pos_cert = contradiction_certificate(r, T.positive, T.at_least_one, T.nonzero);
            if (!pos_cert || pos_cert->kind != "positivity" ||
                pos_cert->detail.find("strictly positive") == std::string::npos) {
                // try the negated root
                r = -r;
                pos_cert = contradiction_certificate(r, T.positive, T.at_least_one, T.nonzero);
                if (!pos_cert || pos_cert->kind != "positivity" ||
                    pos_cert->detail.find("strictly positive") == std::string::npos)
                    continue;
            }
            T.substitute(v, r);
            T.notes.push_back("solved " + v + " = " + r.to_string() + " (positive square root)");
            return true;
        }
        return false;
    }

    void normalize_constraints() {
        std::vector<MultiPoly> out;
        for (auto& c : T.constraints) {
            MultiPoly p = strip_nonzero_content(c.drop_unused_vars()).primitive_integer();
            if (p.is_zero()) continue;
            out.push_back(std::move(p));
        }
        std::sort(out.begin(), out.end(),
                  [](const MultiPoly& a, const MultiPoly& b) { return MultiPoly::cmp(a, b) < 0; });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        T.constraints = std::move(out);
    }

    void interreduce() {
        if (T.constraints.size() < 2) return;
        gb::RunLimits lim;
        lim.max_pairs = 3000;
        lim.seconds = 30;
        auto result = gb::buchberger(gb::PolyIdeal::over(T.constraints),
                                     MonomialOrder::grevlex({}), lim);
        if (result.ok() && !result.basis.polys.empty()) T.constraints = result.basis.polys;
    }

    void run() {
        bool dirty = true;  // new constraints have not been interreduced yet
        for (int round = 0; round < 400; ++round) {
            normalize_constraints();
            for (const auto& c : T.constraints) {
                auto cert =
                    contradiction_certificate(c, T.positive, T.at_least_one, T.nonzero);
                if (cert) {
                    fail(*cert);
                    return;
                }
            }
            bool fired = false;
            for (const auto& c : T.constraints) {
                if (try_linear(c)) {
                    fired = true;
                    break;
                }
            }
            if (!fired) {
                for (const auto& c : T.constraints) {
                    if (try_square(c)) {
                        fired = true;
                        break;
                    }
                }
            }
            if (fired) {
                dirty = true;
                continue;
            }
            if (!dirty) return;
            auto snapshot = T.constraints;
            interreduce();
            normalize_constraints();
            dirty = false;
            if (T.constraints == snapshot) return;
        }
        throw Error("constraint engine did not stabilize");
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// group enumeration
// ---------------------------------------------------------------------------

namespace {

std::vector<Permutation> all_permutations(unsigned n) {
    Permutation p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

using ElementSet = std::set<Permutation>;

ElementSet closure(ElementSet gens, unsigned n) {
    Permutation id(n);
    for (unsigned i = 0; i < n; ++i) id[i] = i;
    gens.insert(id);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> items(gens.begin(), gens.end());
        for (const auto& a : items)
            for (const auto& b : items) {
                Permutation c = compose(a, b);
                if (gens.insert(c).second) grew = true;
            }
    }
    return gens;
}

bool is_abelian(const ElementSet& g) {
    for (const auto& a : g)
        for (const auto& b : g)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

bool fixes_zero(const ElementSet& g) {
    for (const auto& a : g)
        if (a[0] != 0) return false;
    return true;
}

unsigned element_order(const Permutation& p) {
    Permutation id(p.size());
    for (unsigned i = 0; i < p.size(); ++i) id[i] = i;
    Permutation q = p;
    unsigned k = 1;
    while (q != id) {
        q = compose(q, p);
        ++k;
    }
    return k;
}

std::string abelian_name(const ElementSet& g) {
    size_t order = g.size();
    unsigned max_ord = 1;
    for (const auto& e : g) max_ord = std::max(max_ord, element_order(e));
    if (max_ord == order) return "Z" + std::to_string(order);
    std::string name = "Z" + std::to_string(max_ord);
    size_t rest = order / max_ord;
    // abelian groups of order <= 8: the cofactor splits into Z2 factors here
    while (rest > 1) {
        name += "xZ2";
        rest /= 2;
    }
    return name;
}

// minimal generating set, lexicographically smallest
std::vector<Permutation> minimal_generators(const ElementSet& g, unsigned n) {
    std::vector<Permutation> elems(g.begin(), g.end());
    for (const auto& e : elems)
        if (closure({e}, n) == g) return {e};
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (closure({elems[i], elems[j]}, n) == g) return {elems[i], elems[j]};
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            for (size_t k = j + 1; k < elems.size(); ++k)
                if (closure({elems[i], elems[j], elems[k]}, n) == g)
                    return {elems[i], elems[j], elems[k]};
    throw Error("group needs more than three generators");
}

}  // namespace

std::vector<GaloisCase> enumerate_galois_cases(unsigned rank,
                                               const std::vector<unsigned>& dual) {
    if (dual.size() != rank) throw Error("dual size mismatch");
    for (unsigned i = 0; i < rank; ++i)
        if (dual[i] >= rank || dual[dual[i]] != i) throw Error("dual not an involution");
    if (dual[0] != 0) throw Error("dual must fix the unit");
    Permutation conj(dual.begin(), dual.end());

    auto perms = all_permutations(rank);
    std::set<ElementSet> found;
    std::vector<ElementSet> queue{closure({conj}, rank)};
    found.insert(queue[0]);
    while (!queue.empty()) {
        ElementSet h = queue.back();
        queue.pop_back();
        for (const auto& g : perms) {
            if (h.count(g)) continue;
            bool commutes = true;
            for (const auto& e : h)
                if (compose(e, g) != compose(g, e)) {
                    commutes = false;
                    break;
                }
            if (!commutes) continue;
            ElementSet ext = h;
            ext.insert(g);
            ext = closure(ext, rank);
            if (!is_abelian(ext)) continue;
            if (found.insert(ext).second) queue.push_back(ext);
        }
    }

    // keep groups not fixing 0
    std::vector<ElementSet> admissible;
    for (const auto& g : found)
        if (!fixes_zero(g)) admissible.push_back(g);

    // dedupe up to relabeling of self-dual non-unit labels
    std::vector<unsigned> selfdual;
    for (unsigned i = 1; i < rank; ++i)
        if (dual[i] == i) selfdual.push_back(i);
    std::vector<Permutation> relabelings;
    std::vector<unsigned> arrangement = selfdual;
    std::sort(arrangement.begin(), arrangement.end());
    do {
        Permutation p(rank);
        for (unsigned i = 0; i < rank; ++i) p[i] = i;
        for (size_t i = 0; i < selfdual.size(); ++i) p[selfdual[i]] = arrangement[i];
        relabelings.push_back(p);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    auto canonical = [&](const ElementSet& g) {
        ElementSet best = g;
        for (const auto& pi : relabelings) {
            Permutation pinv = inverse(pi);
            ElementSet mapped;
            for (const auto& e : g) mapped.insert(compose(compose(pi, e), pinv));
            if (mapped < best) best = mapped;
        }
        return best;
    };

    std::set<ElementSet> canon_seen;
    std::vector<GaloisCase> out;
    std::vector<ElementSet> canon_list;
    for (const auto& g : admissible) canon_list.push_back(canonical(g));
    std::sort(canon_list.begin(), canon_list.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto& g : canon_list) {
        if (!canon_seen.insert(g).second) continue;
        GaloisCase c;
        c.rank = rank;
        c.dual = dual;
        c.elements.assign(g.begin(), g.end());
        c.generators = minimal_generators(g, rank);
        c.group_name = abelian_name(g);
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// symmetry and unitarity
// ---------------------------------------------------------------------------

namespace {

std::vector<ResolvedCase> apply_symmetry_impl(const GaloisCase& gcase,
                                              const SMatrixTemplate& tmpl, int norm_sign) {
    unsigned n = tmpl.rank;
    if (gcase.rank != n) throw Error("rank mismatch between case and template");
    size_t gens = gcase.generators.size();
    size_t bits_per_gen = n - 1;
    size_t total_bits = gens * bits_per_gen;
    if (total_bits > 20) throw Error("sign enumeration too large");

    std::vector<ResolvedCase> out;
    for (size_t mask = 0; mask < (size_t{1} << total_bits); ++mask) {
        std::vector<std::vector<int>> eps(gens, std::vector<int>(n, norm_sign));
        for (size_t g = 0; g < gens; ++g)
            for (unsigned i = 1; i < n; ++i) {
                size_t bit = g * bits_per_gen + (i - 1);
                if (mask & (size_t{1} << bit)) eps[g][i] = -norm_sign;
            }
        ConstraintEngine eng(tmpl);
        for (size_t g = 0; g < gens; ++g) {
            const Permutation& sigma = gcase.generators[g];
            Permutation sigma_inv = inverse(sigma);
            for (unsigned j = 0; j < n && !eng.eliminated(); ++j)
                for (unsigned k = 0; k < n; ++k) {
                    int s = eps[g][sigma[j]] * eps[g][k];
                    const CEntry& lhs = tmpl.entries[j][k];
                    const CEntry& rhs = tmpl.entries[sigma[j]][sigma_inv[k]];
                    eng.add(lhs.re - rhs.re * Rat(s));
                    eng.add(lhs.im - rhs.im * Rat(s));
                }
        }
        eng.run();
        ResolvedCase rc;
        rc.eps = eps;
        rc.tmpl = std::move(eng.T);
        rc.status = eng.outcome.status;
        rc.certificate = eng.outcome.cert;
        out.push_back(std::move(rc));
    }

    // dedupe identical outcomes
    auto signature = [](const ResolvedCase& rc) {
        std::string sig = rc.status == CaseStatus::Eliminated ? "X" : "S";
        std::vector<std::string> subs;
        for (const auto& [s, v] : rc.tmpl.substitutions) subs.push_back(s + "=" + v.to_string());
        std::sort(subs.begin(), subs.end());
        for (const auto& s : subs) sig += ";" + s;
        sig += "|";
        for (const auto& c : rc.tmpl.constraints) sig += c.to_string() + ";";
        if (rc.status == CaseStatus::Eliminated && rc.certificate)
            sig += "|" + rc.certificate->kind + ":" + rc.certificate->detail;
        return sig;
    };
    std::map<std::string, ResolvedCase> unique;
    std::vector<std::string> order;
    for (auto& rc : out) {
        std::string sig = signature(rc);
        if (!unique.count(sig)) {
            unique.emplace(sig, std::move(rc));
            order.push_back(sig);
        }
    }
    std::vector<ResolvedCase> result;
    unsigned survivors = 0, eliminated = 0;
    for (const auto& sig : order) {
        ResolvedCase rc = std::move(unique.at(sig));
        if (rc.status == CaseStatus::Survives)
            rc.id = "case" + std::to_string(++survivors);
        else
            rc.id = "eliminated" + std::to_string(++eliminated);
        result.push_back(std::move(rc));
    }

    // tag survivors equal up to relabeling of self-dual non-unit labels
    std::vector<unsigned> selfdual;
    for (unsigned i = 1; i < n; ++i)
        if (tmpl.dual[i] == i) selfdual.push_back(i);
    auto relabel_equal = [&](const ResolvedCase& A, const ResolvedCase& B,
                             const Permutation& pi) {
        // renamed dimension symbols: dim(l) -> dim(pi(l))
        std::vector<std::pair<std::string, std::string>> renames;
        for (unsigned l : selfdual)
            if (pi[l] != l) renames.emplace_back(tmpl.dim_symbol(l), tmpl.dim_symbol(pi[l]));
        auto rename = [&](MultiPoly p) {
            for (size_t i = 0; i < renames.size(); ++i)
                p = p.subst(renames[i].first, MultiPoly::var("tmp_" + std::to_string(i)));
            for (size_t i = 0; i < renames.size(); ++i)
                p = p.subst("tmp_" + std::to_string(i), MultiPoly::var(renames[i].second));
            return p.drop_unused_vars();
        };
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                const CEntry& mapped = A.tmpl.entries[pi[j]][pi[k]];
                if (!(rename(mapped.re) == B.tmpl.entries[j][k].re.drop_unused_vars()))
                    return false;
                if (!(rename(mapped.im) == B.tmpl.entries[j][k].im.drop_unused_vars()))
                    return false;
            }
        return true;
    };
    std::vector<Permutation> relabelings;
    {
        std::vector<unsigned> arrangement = selfdual;
        do {
            Permutation p(n);
            for (unsigned i = 0; i < n; ++i) p[i] = i;
            bool moved = false;
            for (size_t i = 0; i < selfdual.size(); ++i) {
                p[selfdual[i]] = arrangement[i];
                if (p[selfdual[i]] != selfdual[i]) moved = true;
            }
            if (moved) relabelings.push_back(p);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    for (size_t i = 0; i < result.size(); ++i) {
        if (result[i].status != CaseStatus::Survives || result[i].related_to) continue;
        for (size_t j = i + 1; j < result.size(); ++j) {
            if (result[j].status != CaseStatus::Survives) continue;
            for (const auto& pi : relabelings) {
                if (relabel_equal(result[i], result[j], pi)) {
                    result[j].related_to = result[i].id;
                    break;
                }
            }
        }
    }
    return result;
}

}  // namespace

std::vector<ResolvedCase> apply_symmetry(const GaloisCase& gcase, const SMatrixTemplate& tmpl) {
    return apply_symmetry_impl(gcase, tmpl, +1);
}

std::vector<ResolvedCase> apply_symmetry_flipped(const GaloisCase& gcase,
                                                 const SMatrixTemplate& tmpl) {
    return apply_symmetry_impl(gcase, tmpl, -1);
}

UnitarityResult apply_unitarity(const SMatrixTemplate& tmpl) {
    unsigned n = tmpl.rank;
    ConstraintEngine eng(tmpl);
    for (unsigned i = 0; i < n && !eng.eliminated(); ++i) {
        for (unsigned j = i; j < n; ++j) {
            MultiPoly re, im;
            for (unsigned k = 0; k < n; ++k) {
                const CEntry& a = tmpl.entries[i][k];
                const CEntry& b = tmpl.entries[k][j];
                re = re + a.re * b.re - a.im * b.im;
                im = im + a.re * b.im + a.im * b.re;
            }
            if (tmpl.dual[i] == j) re = re - MultiPoly::var("D") * MultiPoly::var("D");
            eng.add(re);
            eng.add(im);
        }
    }
    eng.run();
    UnitarityResult out;
    out.tmpl = std::move(eng.T);
    out.status = eng.outcome.status;
    out.certificate = eng.outcome.cert;
    return out;
}

unsigned orbit_degree(const ResolvedCase& rc, const GaloisCase& gcase, unsigned label) {
    const SMatrixTemplate& T = rc.tmpl;
    // v_g = entry[g(0)][label] / dim(g(0)); stabilizer of the value of
    // psi_0(X_label) decides the field degree
    struct Value {
        MultiPoly num, den;
    };
    auto value_of = [&](const Permutation& g) {
        unsigned row = g[0];
        if (!T.entries[row][label].im.is_zero())
            throw Error("orbit_degree: complex orbit entry");
        return Value{T.entries[row][label].re, T.dim_poly(row)};
    };
    Permutation id(gcase.rank);
    for (unsigned i = 0; i < gcase.rank; ++i) id[i] = i;
    Value ve = value_of(id);
    size_t stab = 0;
    for (const auto& g : gcase.elements) {
        Value vg = value_of(g);
        MultiPoly cross = vg.num * ve.den - ve.num * vg.den;
        if (cross.is_zero()) {
            ++stab;
            continue;
        }
        // distinct if cross = 0 is impossible; recorded side conditions may
        // be divided out first
        MultiPoly reduced = cross.primitive_integer();
        for (const auto& sc : T.side_conditions) {
            MultiPoly factor = MultiPoly::parse(sc);
            MultiPoly quot;
            while (reduced.divide_exact(factor, quot)) reduced = quot.primitive_integer();
        }
        if (reduced.is_constant() && !reduced.is_zero()) continue;  // distinct
        auto cert =
            contradiction_certificate(reduced, T.positive, T.at_least_one, T.nonzero);
        if (!cert) return 0;  // distinctness not certified
    }
    if (gcase.elements.size() % stab != 0) throw Error("orbit_degree: stabilizer size");
    return static_cast<unsigned>(gcase.elements.size() / stab);
}

}  // namespace mfc::galois
