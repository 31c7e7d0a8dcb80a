#include "valuate/realroots.hpp"

#include <algorithm>

namespace valuate {

namespace {

// Primitive part with positive leading coefficient; zero stays zero.
IntPoly normalize_primitive(const IntPoly& f) {
    if (f.is_zero()) return f;
    return content_primitive(f).primitive;
}

IntPoly primitive_from_rat(const RatPoly& f) {
    if (f.is_zero()) return IntPoly();
    auto split = content_primitive(f);
    return split.primitive;  // positive leading coefficient
}

int sign_at(const IntPoly& f, const Rat& x) { return sgn(eval(f, x)); }

// Remove the x^k factor; positive roots are unchanged.
IntPoly strip_root_at_zero(const IntPoly& f) {
    const auto& c = f.coeffs();
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    if (k == 0) return f;
    std::vector<Int> out(c.begin() + k, c.end());
    return IntPoly(std::move(out));
}

}  // namespace

SturmChain sturm_chain(const IntPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    SturmChain chain;
    chain.polys.push_back(f);
    IntPoly d = derivative(f);
    if (d.is_zero()) return chain;  // constants
    chain.polys.push_back(d);
    while (true) {
        const IntPoly& a = chain.polys[chain.polys.size() - 2];
        const IntPoly& b = chain.polys.back();
        auto [q, r] = divmod(RatPoly(a), RatPoly(b));
        if (r.is_zero()) break;
        // Keep the sign of -r, scale by a positive rational to stay in Z[x].
        IntPoly next = primitive_from_rat(r);
        if (r.lead() > 0) next = -next;
        chain.polys.push_back(std::move(next));
    }
    return chain;
}

int variations_at(const SturmChain& chain, const Rat& x) {
    int count = 0, last = 0;
    for (const auto& p : chain.polys) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at_pos_inf(const SturmChain& chain) {
    int count = 0, last = 0;
    for (const auto& p : chain.polys) {
        int s = sgn(p.lead());
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return normalize_primitive(g);
    if (g.is_zero()) return normalize_primitive(f);
    RatPoly a(f), b(g);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_from_rat(a);
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    if (f.degree() == 0) return IntPoly::constant(1);
    return exact_div(normalize_primitive(f), poly_gcd(f, derivative(f)));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly base = normalize_primitive(f);
    if (base.degree() == 0) return out;
    // Yun-style: peel factors of multiplicity exactly i.
    IntPoly g = poly_gcd(base, derivative(base));
    IntPoly c = exact_div(base, g);
    int i = 1;
    while (c.degree() > 0) {
        IntPoly d = poly_gcd(c, g);
        IntPoly s = exact_div(c, d);
        if (s.degree() > 0) out.emplace_back(std::move(s), i);
        c = std::move(d);
        if (g.degree() > 0 && !c.is_zero()) g = exact_div(g, c);
        ++i;
    }
    return out;
}

Rat cauchy_root_bound(const IntPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    Int lead = abs(f.lead());
    Int max_c(0);
    for (int i = 0; i < f.degree(); ++i) {
        Int a = abs(f[i]);
        if (a > max_c) max_c = a;
    }
    return Rat(1) + make_rat(max_c, lead);
}

// Distinct roots of squarefree g in the open interval (a, b). Rational
// roots sitting exactly on an endpoint are divided out first so the Sturm
// variation counts stay valid.
static int count_distinct_open(IntPoly g, const Rat& a, const Rat& b) {
    if (!(a < b)) return 0;
    // Clear rational roots sitting exactly on an endpoint.
    for (const Rat* e : {&a, &b}) {
        while (!g.is_zero() && g.degree() > 0 && sign_at(g, *e) == 0) {
            RatPoly lin(std::vector<Rat>{-*e, Rat(1)});
            g = primitive_from_rat(exact_div(RatPoly(g), lin));
        }
    }
    if (g.degree() <= 0) return 0;
    SturmChain chain = sturm_chain(g);
    return variations_at(chain, a) - variations_at(chain, b);
}

int count_roots_positive(const IntPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(strip_root_at_zero(f))) {
        Rat bound = cauchy_root_bound(factor);
        total += mult * count_distinct_open(factor, Rat(0), bound);
    }
    return total;
}

int count_roots_in(const IntPoly& f, const Interval& range) {
    if (f.is_zero()) throw zero_poly_error();
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(f))
        total += mult * count_distinct_open(factor, range.lo, range.hi);
    return total;
}

namespace {

struct Isolator {
    const IntPoly& g;  // squarefree, g(0) != 0
    SturmChain chain;
    std::vector<Interval> out;

    explicit Isolator(const IntPoly& g_) : g(g_), chain(sturm_chain(g_)) {}

    // Count of distinct roots in (a, b] equals V(a) - V(b); endpoints kept
    // off the root set, so (a, b] and (a, b) agree.
    void split(const Rat& a, const Rat& b, int count) {
        if (count == 0) return;
        if (count == 1) {
            out.push_back({a, b});
            return;
        }
        Rat mid = (a + b) / 2;
        if (sign_at(g, mid) == 0) {
            // Rational root exactly at the midpoint: carve out a private
            // interval around it, then recurse on both sides.
            Rat delta = (b - a) / 8;
            while (sign_at(g, mid - delta) == 0 || sign_at(g, mid + delta) == 0 ||
                   variations_at(chain, mid - delta) - variations_at(chain, mid + delta) != 1)
                delta /= 2;
            split(a, mid - delta, variations_at(chain, a) - variations_at(chain, mid - delta));
            out.push_back({mid - delta, mid + delta});
            split(mid + delta, b, variations_at(chain, mid + delta) - variations_at(chain, b));
            return;
        }
        int left = variations_at(chain, a) - variations_at(chain, mid);
        split(a, mid, left);
        split(mid, b, count - left);
    }
};

}  // namespace

std::vector<Interval> isolate_positive_roots(const IntPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    IntPoly g = squarefree_part(strip_root_at_zero(f));
    if (g.degree() <= 0) return {};
    Rat bound = cauchy_root_bound(g);
    Isolator iso(g);
    int total = variations_at(iso.chain, Rat(0)) - variations_at(iso.chain, bound);
    iso.split(Rat(0), bound, total);
    std::sort(iso.out.begin(), iso.out.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return iso.out;
}

Interval refine(const IntPoly& f, const Interval& iv, const Rat& width) {
    int slo = sign_at(f, iv.lo);
    int shi = sign_at(f, iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw not_isolating_error("interval endpoints do not bracket a sign change");
    Interval cur = iv;
    while (cur.width() > width) {
        Rat mid = cur.mid();
        int sm = sign_at(f, mid);
        if (sm == 0) {
            // The root is exactly mid; shrink to a sign-changing interval
            // around it. No other root lies in cur, so nearby signs match
            // the endpoints'.
            Rat d1 = mid - cur.lo;
            Rat d2 = cur.hi - mid;
            Rat delta = std::min(std::min(d1, d2), width) / 4;
            return {mid - delta, mid + delta};
        }
        if (sm == slo)
            cur.lo = mid;
        else
            cur.hi = mid;
    }
    return cur;
}

IntPoly curtiss_multiplier(const IntPoly& f, int n_max) {
    if (f.is_zero()) throw zero_poly_error();
    if (f[0] == 0) throw bad_params("curtiss_multiplier requires f(0) != 0");
    int target = count_roots_positive(f);
    IntPoly one_plus_x({1, 1});
    IntPoly phi = IntPoly::constant(1);
    IntPoly product = f;
    for (int n = 0; n <= n_max; ++n) {
        if (sign_variations(product) == target) return phi;
        phi = phi * one_plus_x;
        product = product * one_plus_x;
    }
    throw cap_exhausted(n_max, "no (1+x)^N multiplier tightens the sign variations");
}

}  // namespace valuate
