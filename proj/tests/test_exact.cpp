#include <doctest.h>

#include <random>

#include "mfc/cyclotomic.hpp"
#include "mfc/multipoly.hpp"
#include "mfc/numberfield.hpp"
#include "mfc/roots.hpp"
#include "mfc/sturm.hpp"
#include "mfc/unipoly.hpp"

using namespace mfc;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
    return UniPoly::from_ints(std::vector<long>(coeffs));
}

// independent evaluation oracle: Horner with fresh rational arithmetic
Rat eval_oracle(const UniPoly& p, const Rat& x) {
    Rat acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    return rat(num(rng), den(rng));
}

UniPoly random_unipoly(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(rng);
    std::vector<Rat> c(static_cast<size_t>(deg) + 1);
    for (auto& a : c) a = random_rat();
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat_from_string("-6/4") == rat(-3, 2));
    CHECK(rat_to_string(rat(-3, 2)) == "-3/2");
    CHECK(rat_to_string(rat(5)) == "5");
    CHECK(divisors(Int(12)) == std::vector<Int>({1, 2, 3, 4, 6, 12}));
    CHECK(rat_sqrt(rat(9, 4)) == rat(3, 2));
    CHECK(!rat_sqrt(rat(2)).has_value());
    CHECK(!rat_sqrt(rat(-4)).has_value());
}

TEST_CASE("unipoly arithmetic and division") {
    UniPoly p = upoly({-1, 0, 1});  // x^2 - 1
    UniPoly q = upoly({1, 1});      // x + 1
    CHECK(p / q == upoly({-1, 1}));
    CHECK((p * q).degree() == 3);
    auto [quot, rem] = upoly({1, 2, 3}).divmod(upoly({1, 1}));
    CHECK(quot * upoly({1, 1}) + rem == upoly({1, 2, 3}));
    CHECK(p.compose(upoly({1, 1})) == upoly({0, 2, 1}));
    CHECK(upoly({0, 0, 0, 2}).strip_zero_roots().first == 3);
    CHECK(upoly({2, 4}).primitive_integer() == upoly({1, 2}));
    CHECK(UniPoly({rat(1, 2), rat(1, 3)}).primitive_integer() == upoly({3, 2}));
}

TEST_CASE("ring axioms hold exactly on random samples") {
    for (int trial = 0; trial < 60; ++trial) {
        UniPoly a = random_unipoly(4), b = random_unipoly(4), c = random_unipoly(4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (-a) == UniPoly::zero());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == upoly({-1, 1}));
    CHECK(cyclotomic_poly(2) == upoly({1, 1}));
    // paper's conductor-7 relation for the twists
    CHECK(cyclotomic_poly(7) == upoly({1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(12) == upoly({1, 0, -1, 0, 1}));
    for (unsigned s = 1; s <= 30; ++s) {
        UniPoly prod = UniPoly::constant(Rat(1));
        for (unsigned d = 1; d <= s; ++d)
            if (s % d == 0) prod = prod * cyclotomic_poly(d);
        std::vector<Rat> xs(s + 1, Rat(0));
        xs[0] = Rat(-1);
        xs[s] = Rat(1);
        UniPoly xsm1(std::move(xs));
        CHECK(prod == xsm1);                       // prod of Phi_d over d|s
        CHECK((xsm1 % cyclotomic_poly(s)).is_zero());  // Phi_s | x^s - 1
        CHECK(cyclotomic_poly(s).degree() == static_cast<int>(euler_phi(s)));
    }
}

TEST_CASE("cyclotomic conjugation") {
    // conjugate(zeta_7) = zeta_7^6 reduced mod Phi_7 = -1 - z - ... - z^5
    CycloNumber z7 = CycloNumber::zeta(7);
    CycloNumber conj = z7.conj();
    CycloNumber expect = CycloNumber(7, {rat(-1), rat(-1), rat(-1), rat(-1), rat(-1), rat(-1)});
    CHECK(conj == expect);
    CHECK(CycloNumber::from_rat(12, rat(5, 3)).conj() ==
          CycloNumber::from_rat(12, rat(5, 3)));

    // involutive ring automorphism, conductors 4, 7, 12
    for (unsigned s : {4u, 7u, 12u}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rat> ca, cb;
            for (unsigned long i = 0; i < euler_phi(s); ++i) {
                ca.push_back(random_rat());
                cb.push_back(random_rat());
            }
            CycloNumber a(s, ca), b(s, cb);
            CHECK(a.conj().conj() == a);
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("cyclotomic field inverse") {
    CycloNumber z = CycloNumber::zeta(7);
    CycloNumber a = z * rat(3) + CycloNumber::from_rat(7, rat(2));
    CHECK(a * a.inverse() == CycloNumber::from_rat(7, rat(1)));
    CHECK(z.pow(7) == CycloNumber::from_rat(7, rat(1)));
    CHECK(z.pow(-1) == z.conj());
}

TEST_CASE("rational roots") {
    // paper case s=7 cubic factor: no rational root among the candidates
    UniPoly cubic = upoly({-1, -4, 4, 8});
    // oracle: direct candidate evaluation
    for (Rat cand : {rat(1), rat(-1), rat(1, 2), rat(-1, 2), rat(1, 4), rat(-1, 4), rat(1, 8),
                     rat(-1, 8)})
        CHECK(eval_oracle(cubic, cand) != Rat(0));
    CHECK(rational_roots(cubic).empty());

    UniPoly tt = upoly({0, 1}) * upoly({1, 1});  // t(1+t)
    CHECK(rational_roots(tt) == std::set<Rat>({rat(0), rat(-1)}));

    CHECK_THROWS_AS(rational_roots(UniPoly::zero()), Error);

    for (int trial = 0; trial < 40; ++trial) {
        UniPoly p = random_unipoly(5);
        if (p.is_zero()) continue;
        for (const Rat& r : rational_roots(p)) CHECK(eval_oracle(p, r) == Rat(0));
    }

    // nonnegative-integer candidates for a degree-24 stub with leading 2^12
    // and trailing 2^3 are exactly the divisors of 8
    std::set<Int> cands;
    for (const Int& d : divisors(Int(8))) cands.insert(d);
    CHECK(cands == std::set<Int>({1, 2, 4, 8}));
}

TEST_CASE("parity certificates") {
    UniPoly a = upoly({1, 2}) * upoly({1, 6});  // (2t+1)(6t+1)
    auto cert = parity_no_integer_roots(a);
    CHECK(cert.ok);
    CHECK(cert.value_at_0 == 1);
    CHECK(cert.value_at_1 == 21);

    UniPoly b = upoly({1, 0, 0, -1, 0, 0, 1}) * upoly({1, 1, 0, 1, 1, 0, 1});
    CHECK(parity_no_integer_roots(b).ok);  // paper case s=9

    CHECK_FALSE(parity_no_integer_roots(upoly({0, 0, 1})).ok);  // t^2: p(0)=0

    // success implies no integer zero on a brute-force scan
    for (const UniPoly& p : {a, b}) {
        for (long t = -1000; t <= 1000; ++t) CHECK(eval_oracle(p, Rat(t)) != Rat(0));
    }
}

TEST_CASE("sturm counting") {
    CHECK(sturm_count(upoly({-2, 0, 1}), rat(1), rat(2)) == 1);  // sqrt(2)
    // d^3 - 3d^2 - 4d - 1 on (4,5); oracle: sign change between endpoints
    UniPoly dpoly = upoly({-1, -4, -3, 1});
    CHECK(sgn(eval_oracle(dpoly, rat(4))) < 0);
    CHECK(sgn(eval_oracle(dpoly, rat(5))) > 0);
    CHECK(sturm_count(dpoly, rat(4), rat(5)) == 1);
    CHECK(sturm_count(upoly({1, 0, 1}), rat(-10), rat(10)) == 0);  // x^2+1
    CHECK_THROWS_WITH_AS(sturm_count(upoly({-4, 0, 1}), rat(2), rat(3)),
                         "shrink interval: endpoint is a root", Error);

    // count over (-B, B) with B beyond the Cauchy bound equals the number of
    // distinct real roots of the squarefree part; construct known inputs
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> nroots(0, 4), mult(1, 2);
        std::set<long> roots;
        int k = nroots(rng);
        std::uniform_int_distribution<long> rv(-8, 8);
        while (static_cast<int>(roots.size()) < k) roots.insert(rv(rng));
        UniPoly p = UniPoly::constant(rat(1));
        for (long r : roots) {
            int m = mult(rng);
            for (int i = 0; i < m; ++i) p = p * upoly({-r, 1});
        }
        p = p * upoly({1, 0, 1});  // irreducible quadratic, no real roots
        Rat b = root_bound(p);
        CHECK(sturm_count(p, -b, b) == static_cast<long>(roots.size()));
        CHECK(real_root_count(p) == static_cast<long>(roots.size()));
    }
}

TEST_CASE("root isolation") {
    UniPoly p = upoly({-2, 0, 1}) * upoly({-3, 1});  // roots -sqrt2, sqrt2, 3
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 3);
    for (const auto& iv : ivs) CHECK(sturm_count(p, iv.lo, iv.hi) == 1);
    CHECK(ivs[0].hi <= ivs[1].lo);
    CHECK(ivs[1].hi <= ivs[2].lo);
    auto r = refine_root(p, ivs[2], rat(1, 1000));
    CHECK(r.width() <= rat(1, 1000));
    CHECK(r.lo < 3);
    CHECK(3 < r.hi);
}

TEST_CASE("bounded factoring") {
    UniPoly p = upoly({-1, -4, -3, 1}) * upoly({-1, 1}) * upoly({-1, 1});
    auto f = factor_bounded(p);
    REQUIRE(f.factors.size() == 2);
    bool saw_linear = false, saw_cubic = false;
    for (const auto& fac : f.factors) {
        if (fac.poly == upoly({-1, 1})) {
            saw_linear = true;
            CHECK(fac.multiplicity == 2);
        }
        if (fac.poly == upoly({-1, -4, -3, 1})) {
            saw_cubic = true;
            CHECK(fac.multiplicity == 1);
            CHECK(fac.irreducible);
        }
    }
    CHECK(saw_linear);
    CHECK(saw_cubic);

    // x^4 + 4 = (x^2-2x+2)(x^2+2x+2), no rational roots
    auto g = factor_bounded(upoly({4, 0, 0, 0, 1}));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].poly * g.factors[1].poly == upoly({4, 0, 0, 0, 1}));

    CHECK(is_irreducible(upoly({-2, 0, 1})));
    CHECK(is_irreducible(upoly({-1, -4, -3, 1})));
    CHECK_FALSE(is_irreducible(upoly({4, 0, 0, 0, 1})));
    CHECK_FALSE(is_irreducible(upoly({-2, 0, 1}) * upoly({-2, 0, 1})));
}

TEST_CASE("number field arithmetic and embedding signs") {
    auto F = NumberField::make(upoly({-2, 0, 1}), rat(1), rat(2));  // Q(sqrt2), positive root
    NFElem s2 = NFElem::generator(F);
    CHECK((s2 * s2).rational_value() == Rat(2));
    CHECK(s2.sign() == 1);
    CHECK((-s2).sign() == -1);
    CHECK((s2 - NFElem::from_rat(F, rat(7, 5))).sign() == 1);    // sqrt2 > 1.4
    CHECK((s2 - NFElem::from_rat(F, rat(3, 2))).sign() == -1);   // sqrt2 < 1.5
    CHECK((s2 * s2 - NFElem::from_rat(F, rat(2))).sign() == 0);
    CHECK(s2.inverse() * s2 == NFElem::from_rat(F, rat(1)));

    CHECK_THROWS_AS(NumberField::make(upoly({4, 0, 0, 0, 1}), rat(0), rat(1)), Error);
}

TEST_CASE("roots in field") {
    // x^2 - 2 over Q(sqrt2): +-generator
    auto F = NumberField::make(upoly({-2, 0, 1}), rat(1), rat(2));
    auto roots = roots_in_field(upoly({-2, 0, 1}), F);
    REQUIRE(roots.size() == 2);
    NFElem g = NFElem::generator(F);
    CHECK((roots[0] == g || roots[1] == g));
    CHECK((roots[0] == -g || roots[1] == -g));

    // x^2 - 3 over Q(sqrt2): empty
    CHECK(roots_in_field(upoly({-3, 0, 1}), F).empty());

    // f^3-4f^2+3f+1 over Q(d), d^3-3d^2-4d-1 = 0: three roots, each of
    // degree <= 2 in d; oracle checks below verify each root and the full
    // split of the polynomial over the field.
    auto Fd = NumberField::make(upoly({-1, -4, -3, 1}), rat(4), rat(5));
    UniPoly fpoly = upoly({1, 3, -4, 1});
    auto froots = roots_in_field(fpoly, Fd);
    REQUIRE(froots.size() == 3);
    for (const auto& r : froots) {
        CHECK(r.rep().degree() <= 2);
        // oracle: evaluate f^3 - 4f^2 + 3f + 1 in the field
        NFElem val = r.pow(3) - r.pow(2) * rat(4) + r * rat(3) + NFElem::from_rat(Fd, rat(1));
        CHECK(val.is_zero());
    }
    // product of the (x - root) factors equals the monic polynomial:
    // expand via field arithmetic on elementary symmetric functions
    NFElem e1 = froots[0] + froots[1] + froots[2];
    NFElem e2 = froots[0] * froots[1] + froots[0] * froots[2] + froots[1] * froots[2];
    NFElem e3 = froots[0] * froots[1] * froots[2];
    CHECK(e1 == NFElem::from_rat(Fd, rat(4)));   // -(-4)
    CHECK(e2 == NFElem::from_rat(Fd, rat(3)));
    CHECK(e3 == NFElem::from_rat(Fd, rat(-1)));

    // reducible "minimal" polynomial must be rejected
    auto bogus = NumberField::make_unchecked(upoly({-2, 0, 1}) * upoly({-3, 0, 1}), rat(13, 10),
                                             rat(3, 2));
    CHECK_THROWS_AS(roots_in_field(upoly({-2, 0, 1}), bogus), Error);
}

TEST_CASE("roots in cyclotomic field") {
    // d - 1 is a root of y^3 - 7y - 7 and lives in Q(zeta_7)
    auto roots = roots_in_cyclotomic(upoly({-7, -7, 0, 1}), 7);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) {
        CycloNumber val = r.pow(3) - r * rat(7) - CycloNumber::from_rat(7, rat(7));
        CHECK(val.is_zero());
    }
}
