#include "mfc/sturm.hpp"

#include <algorithm>

namespace mfc {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    if (p.is_zero()) throw Error("sturm chain of zero polynomial");
    std::vector<UniPoly> chain;
    UniPoly f = squarefree_part(p);
    chain.push_back(f);
    if (f.degree() == 0) return chain;
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

long sign_changes(const std::vector<UniPoly>& chain, const Rat& x) {
    long changes = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = sgn(f.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

long sturm_count(const UniPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw Error("sturm count of zero polynomial");
    if (!(a < b)) throw Error("sturm count needs a < b");
    auto chain = sturm_chain(p);
    if (sgn(chain[0].eval(a)) == 0 || sgn(chain[0].eval(b)) == 0)
        throw Error("shrink interval: endpoint is a root");
    return sign_changes(chain, a) - sign_changes(chain, b);
}

long real_root_count(const UniPoly& p) {
    UniPoly f = squarefree_part(p);
    if (f.degree() <= 0) return 0;
    Rat b = root_bound(f);
    return sturm_count(f, -b, b);
}

std::vector<RatInterval> isolate_real_roots(const UniPoly& p) {
    UniPoly f = squarefree_part(p);
    std::vector<RatInterval> out;
    if (f.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    Rat bound = root_bound(f);
    // q with endpoint counts; endpoints of the initial box are not roots.
    struct Box {
        Rat lo, hi;
        long count;
    };
    auto count_in = [&](const Rat& a, const Rat& b) {
        return sign_changes(chain, a) - sign_changes(chain, b);
    };
    std::vector<Box> work{{-bound, bound, count_in(-bound, bound)}};
    while (!work.empty()) {
        Box box = work.back();
        work.pop_back();
        if (box.count == 0) continue;
        if (box.count == 1 && sgn(f.eval(box.lo)) != 0 && sgn(f.eval(box.hi)) != 0) {
            out.push_back({box.lo, box.hi});
            continue;
        }
        Rat m = (box.lo + box.hi) / 2;
        Rat step = (box.hi - box.lo) / 4;
        while (sgn(f.eval(m)) == 0) {
            // Nudge the split point off the root; roots are finite in number.
            m += step;
            step /= 2;
        }
        work.push_back({box.lo, m, count_in(box.lo, m)});
        work.push_back({m, box.hi, count_in(m, box.hi)});
    }
    std::sort(out.begin(), out.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    return out;
}

RatInterval refine_root(const UniPoly& p, RatInterval iv, const Rat& target) {
    UniPoly f = squarefree_part(p);
    int slo = sgn(f.eval(iv.lo));
    int shi = sgn(f.eval(iv.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw Error("refine_root: not a sign-change isolating interval");
    while (iv.width() > target) {
        Rat m = iv.mid();
        int sm = sgn(f.eval(m));
        if (sm == 0) {
            // Hit a rational root exactly; shrink around it.  The root is
            // simple (f squarefree) so the sign still changes across it.
            Rat a = iv.width() / 16, b = target / 4;
            Rat eps = a < b ? a : b;
            iv = {m - eps, m + eps};
            slo = sgn(f.eval(iv.lo));
            shi = sgn(f.eval(iv.hi));
            continue;
        }
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

}  // namespace mfc
