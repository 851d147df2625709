#include <doctest.h>

#include <random>

#include "mfc/gb.hpp"

using namespace mfc;
using namespace mfc::gb;

namespace {

MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }

std::mt19937 rng(987654321);

MultiPoly random_poly(const std::vector<std::string>& vars, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(-9, 9), n(1, nterms);
    MultiPoly p;
    int terms = n(rng);
    for (int t = 0; t < terms; ++t) {
        MultiPoly mono = MultiPoly::constant(Rat(c(rng)));
        int budget = maxdeg;
        for (const auto& v : vars) {
            int k = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= k;
            if (k > 0) mono = mono * MultiPoly::var(v).pow(static_cast<unsigned>(k));
        }
        p = p + mono;
    }
    return p;
}

// independent reduction oracle: checks that r has no term divisible by any
// leading term of the basis under the basis order
bool fully_reduced(const MultiPoly& r, const GroebnerBasis& basis) {
    std::set<std::string> vset(basis.vars.begin(), basis.vars.end());
    for (const auto& v : r.support()) vset.insert(v);
    std::vector<std::string> vars(vset.begin(), vset.end());
    auto leading = [&](const MultiPoly& g) {
        MultiPoly aligned = g.with_vars(vars);
        Exps best;
        bool first = true;
        for (const auto& [e, c] : aligned.terms()) {
            if (first || basis.order.less(best, e, vars)) {
                best = e;
                first = false;
            }
        }
        return best;
    };
    std::vector<Exps> lts;
    for (const auto& g : basis.polys) lts.push_back(leading(g));
    MultiPoly ra = r.drop_unused_vars().with_vars(vars);
    for (const auto& [e, c] : ra.terms()) {
        for (const auto& lt : lts) {
            bool div = true;
            for (size_t i = 0; i < e.size(); ++i)
                if (lt[i] > e[i]) div = false;
            if (div) return false;
        }
    }
    return true;
}

// S-polynomial computed from scratch (oracle path, no engine internals)
MultiPoly spoly_oracle(const MultiPoly& f, const MultiPoly& g, const GroebnerBasis& basis) {
    MultiPoly fa = f.with_vars(basis.vars), ga = g.with_vars(basis.vars);
    auto lead = [&](const MultiPoly& p) {
        std::pair<Exps, Rat> best;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            if (first || basis.order.less(best.first, e, basis.vars)) {
                best = {e, c};
                first = false;
            }
        }
        return best;
    };
    auto [ef, cf] = lead(fa);
    auto [eg, cg] = lead(ga);
    Exps lcm(ef.size());
    for (size_t i = 0; i < ef.size(); ++i) lcm[i] = std::max(ef[i], eg[i]);
    auto monom = [&](const Exps& e) {
        std::map<Exps, Rat> t{{e, Rat(1)}};
        return MultiPoly(basis.vars, std::move(t));
    };
    Exps sf(ef.size()), sg(ef.size());
    for (size_t i = 0; i < ef.size(); ++i) {
        sf[i] = lcm[i] - ef[i];
        sg[i] = lcm[i] - eg[i];
    }
    return fa * monom(sf) * (Rat(1) / cf) - ga * monom(sg) * (Rat(1) / cg);
}

}  // namespace

TEST_CASE("parser and multipoly basics") {
    CHECK(P("(v+u)*((2*t-1)*u-(2*t+3)*v)+4*t^2+2*t+1") ==
          P("2*t*u^2-u^2-2*t*v^2-3*v^2-4*u*v+4*t^2+2*t+1"));
    CHECK(P("x+0*y") == P("x"));
    CHECK(P("x*x*x") == P("x^3"));
    CHECK(P("-x+3").eval({{"x", Rat(1)}}) == Rat(2));
    CHECK(P("1/2*x").content() == rat(1, 2));
    CHECK(P("2*x+4*y").primitive_integer() == P("x+2*y"));
    MultiPoly q;
    CHECK(P("x^2-1").divide_exact(P("x-1"), q));
    CHECK(q == P("x+1"));
    CHECK_FALSE(P("x^2+1").divide_exact(P("x-1"), q));
    CHECK(P("x^2*y-3*x").coeff_of("x", 1) == P("-3"));
    CHECK(P("x^2*y-3*x").subst("x", P("t+1")) == P("(t+1)^2*y-3*t-3"));
}

TEST_CASE("monomial orders") {
    auto vars = std::vector<std::string>{"x", "y"};
    auto lex = MonomialOrder::lex({"x", "y"});
    // x > y^5 under lex with x highest
    CHECK(lex.less({0, 5}, {1, 0}, vars));
    auto grev = MonomialOrder::grevlex({"x", "y"});
    CHECK(grev.less({1, 0}, {0, 5}, vars));   // total degree first
    CHECK(grev.less({1, 2}, {2, 1}, vars));   // same degree: x^2y > xy^2
    CHECK(MonomialOrder::parse("lex:d,f,g").priority ==
          std::vector<std::string>({"d", "f", "g"}));
}

TEST_CASE("buchberger on trivial and textbook inputs") {
    auto lim = RunLimits{};
    auto I1 = PolyIdeal::over({P("x-1")});
    auto r1 = buchberger(I1, MonomialOrder::lex({"x"}), lim);
    REQUIRE(r1.ok());
    REQUIRE(r1.basis.polys.size() == 1);
    CHECK(r1.basis.polys[0] == P("x-1"));

    // {x^2 - y, y^2 - x} with lex x > y
    auto I2 = PolyIdeal::over({P("x^2-y"), P("y^2-x")});
    auto r2 = buchberger(I2, MonomialOrder::lex({"x", "y"}), lim);
    REQUIRE(r2.ok());
    for (size_t i = 0; i < r2.basis.polys.size(); ++i)
        for (size_t j = i + 1; j < r2.basis.polys.size(); ++j) {
            MultiPoly s = spoly_oracle(r2.basis.polys[i], r2.basis.polys[j], r2.basis);
            CHECK(normal_form(s, r2.basis).is_zero());
        }
    for (const auto& g : I2.gens) CHECK(normal_form(g, r2.basis).is_zero());
    CHECK(normal_form(P("1"), r2.basis) == P("1"));
    CHECK(normal_form(P("x^2-y"), r2.basis).is_zero());
}

TEST_CASE("gb determinism") {
    auto I = PolyIdeal::over({P("x^2+y^2-1"), P("x*y-2"), P("x^3-y")});
    auto a = buchberger(I, MonomialOrder::grevlex({"x", "y"}), RunLimits{});
    auto b = buchberger(I, MonomialOrder::grevlex({"x", "y"}), RunLimits{});
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    REQUIRE(a.basis.polys.size() == b.basis.polys.size());
    for (size_t i = 0; i < a.basis.polys.size(); ++i)
        CHECK(a.basis.polys[i] == b.basis.polys[i]);
}

TEST_CASE("gb timeout verdict") {
    RunLimits tiny;
    tiny.max_pairs = 1;
    auto I = PolyIdeal::over({P("x^2+y^2+z^2-1"), P("x*y*z-1"), P("x^3-y^2+z")});
    auto r = buchberger(I, MonomialOrder::lex({"x", "y", "z"}), tiny);
    CHECK(!r.ok());
    CHECK(r.status == GbStatus::Timeout);
    CHECK(!r.trace.empty());
}

TEST_CASE("gb random property suite") {
    std::vector<std::string> vars{"x", "y", "z"};
    int done = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<MultiPoly> gens;
        std::uniform_int_distribution<int> ng(1, 3);
        int k = ng(rng);
        for (int i = 0; i < k; ++i) {
            MultiPoly g = random_poly(vars, 3, 4);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto ord = (trial % 2) ? MonomialOrder::grevlex({"x", "y", "z"})
                               : MonomialOrder::lex({"x", "y", "z"});
        RunLimits lim;
        lim.max_pairs = 20000;
        lim.seconds = 20;
        auto r = buchberger(PolyIdeal::over(gens), ord, lim);
        if (!r.ok()) continue;  // timeout is an allowed verdict, never wrong
        ++done;
        for (size_t i = 0; i < r.basis.polys.size(); ++i)
            for (size_t j = i + 1; j < r.basis.polys.size(); ++j) {
                MultiPoly s = spoly_oracle(r.basis.polys[i], r.basis.polys[j], r.basis);
                CHECK(normal_form(s, r.basis).is_zero());
            }
        for (const auto& g : gens) CHECK(normal_form(g, r.basis).is_zero());
        // random ideal combination reduces to zero
        MultiPoly comb;
        for (const auto& g : gens) comb = comb + g * random_poly(vars, 2, 3);
        CHECK(normal_form(comb, r.basis).is_zero());
        // reduce is idempotent
        MultiPoly p = random_poly(vars, 3, 5);
        MultiPoly nf = normal_form(p, r.basis);
        CHECK(normal_form(nf, r.basis) == nf);
        CHECK(fully_reduced(nf, r.basis));
    }
    CHECK(done >= 60);  // the vast majority of tiny ideals must finish
}

TEST_CASE("eliminate") {
    auto r1 = eliminate(PolyIdeal::over({P("x-y^2")}), {"x"});
    REQUIRE(r1.ok());
    CHECK(r1.basis.polys.empty());

    auto r2 = eliminate(PolyIdeal::over({P("x-y"), P("x+y")}), {"x"});
    REQUIRE(r2.ok());
    REQUIRE(r2.basis.polys.size() == 1);
    CHECK(r2.basis.polys[0] == P("x"));

    auto r3 = eliminate(PolyIdeal::over({P("x^2-2"), P("y-x")}), {"y"});
    REQUIRE(r3.ok());
    REQUIRE(r3.basis.polys.size() == 1);
    CHECK(r3.basis.polys[0] == P("y^2-2"));
    // resultant cross-check
    CHECK(resultant(P("x^2-2"), P("y-x"), "x") == P("y^2-2"));
}

TEST_CASE("resultant") {
    CHECK(resultant(P("x^2-2"), P("x-y"), "x") == P("y^2-2"));
    MultiPoly r = resultant(P("x-a"), P("x-b"), "x");
    CHECK((r == P("a-b") || r == P("b-a")));
    CHECK_THROWS_AS(resultant(P("a"), P("b"), "x"), Error);

    // eliminate and resultant agree on random bivariate pairs: each
    // generator of one vanishes on the variety of the other (radical
    // membership up to power 3 at this scale)
    std::vector<std::string> xy{"x", "y"};
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 5; ++trial) {
        MultiPoly p = random_poly(xy, 3, 3), q = random_poly(xy, 3, 3);
        if (p.degree("x") < 1 || q.degree("x") < 1) continue;
        if (!p.support().count("y") && !q.support().count("y")) continue;
        MultiPoly res = resultant(p, q, "x");
        auto elim = eliminate(PolyIdeal::over({p, q}), {"y"},
                              RunLimits::parse("pairs=20000,seconds=20"));
        if (!elim.ok()) continue;
        ++checked;
        // res lies in the elimination ideal (it always does, no radical needed)
        if (!elim.basis.polys.empty()) {
            CHECK(normal_form(res.drop_unused_vars(), elim.basis).is_zero());
        } else {
            CHECK(res.is_zero());
        }
        // each elimination generator vanishes on V(res): g^k in (res)
        for (const auto& g : elim.basis.polys) {
            if (res.is_zero()) break;
            bool member = false;
            MultiPoly acc = MultiPoly::constant(1);
            for (int k = 1; k <= 3 && !member; ++k) {
                acc = acc * g;
                MultiPoly quot;
                member = acc.divide_exact(res.primitive_integer(), quot) ||
                         acc.divide_exact(res, quot);
            }
            CHECK(member);
        }
    }
    CHECK(checked == 5);
}

TEST_CASE("solve_dio") {
    auto s0 = solve_dio(Int(0));
    REQUIRE(s0.size() == 1);
    CHECK(s0.count({Int(1), Int(0)}) == 1);

    // t=1: (u+v)(u-5v) = -7; oracle by divisor enumeration
    CHECK(solve_dio(Int(1)).empty());

    // brute-force oracle for t <= 10 over u,v <= 200
    for (long t = 0; t <= 10; ++t) {
        std::set<std::pair<Int, Int>> brute;
        for (long u = 0; u <= 200; ++u)
            for (long v = 0; v <= 200; ++v) {
                Int lhs = (Int(v) + u) * ((2 * t - 1) * u - (2 * t + 3) * v) + 4 * t * t +
                          2 * t + 1;
                if (lhs == 0) brute.emplace(u, v);
            }
        CHECK(solve_dio(Int(t)) == brute);
    }
}
