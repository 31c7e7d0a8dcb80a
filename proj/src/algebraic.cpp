#include "valuate/algebraic.hpp"

#include <algorithm>

namespace valuate {

namespace {

constexpr int kMaxIrreducibilityDegree = 10;

// Positive divisors of |n|, n != 0, by trial division.
std::vector<Int> positive_divisors(const Int& n) {
    Int a = abs(n);
    std::vector<Int> low, high;
    for (Int i(1); i * i <= a; ++i) {
        if (a % i == 0) {
            low.push_back(i);
            Int j = a / i;
            if (j != i) high.push_back(j);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    n = abs(n);
    for (Int p(2); p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool has_rational_root(const IntPoly& f) {
    if (f[0] == 0) return true;  // root at 0
    std::vector<Int> ps = positive_divisors(f[0]);
    std::vector<Int> qs = positive_divisors(f.lead());
    for (const Int& p : ps)
        for (const Int& q : qs) {
            Rat cand = make_rat(p, q);
            if (eval(f, cand) == 0) return true;
            if (eval(f, Rat(-cand)) == 0) return true;
        }
    return false;
}

Int binom(int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// ceil(sqrt(sum of squared coefficients)); dominates the Mahler measure.
Int l2_norm_ceil(const IntPoly& f) {
    Int s(0);
    for (const auto& c : f.coeffs()) s += c * c;
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) ++r;
    return r;
}

bool divides_poly(const IntPoly& h, const IntPoly& f) {
    auto [q, r] = divmod(RatPoly(f), RatPoly(h));
    (void)q;
    return r.is_zero();
}

/* Complete search for a monic integer factor of the monic polynomial F with
 * 2 <= deg factor <= deg F / 2. Candidates are anchored on h(0) | F(0),
 * h(1) | F(1), h(-1) | F(-1); any leftover free coefficients sweep a
 * Mignotte box. Assumes F has no rational roots (so F(0), F(1), F(-1) are
 * all nonzero). */
bool monic_factor_exists(const IntPoly& F) {
    int d = F.degree();
    Int f0 = F[0];
    Int f1 = eval(F, Int(1));
    Int fm1 = eval(F, Int(-1));
    Int norm = l2_norm_ceil(F);

    for (int k = 2; 2 * k <= d; ++k) {
        std::vector<Int> bound(k);
        for (int i = 0; i < k; ++i)
            bound[i] = binom(k - 1, i) * norm + (i >= 1 ? binom(k - 1, i - 1) : Int(0));

        std::vector<Int> div0 = positive_divisors(f0);
        std::vector<Int> div1 = positive_divisors(f1);
        std::vector<Int> divm1 = positive_divisors(fm1);

        // h = y^k + c_{k-1} y^{k-1} + ... + c_0. Anchors give
        //   sum_{1<=i<k} c_i         = s - 1 - c_0          (from h(1) = s)
        //   sum_{1<=i<k} (-1)^i c_i  = t - (-1)^k - c_0     (from h(-1) = t)
        // which pin the sums of the odd- and even-indexed unknowns.
        std::vector<int> odd_idx, even_idx;
        for (int i = 1; i < k; ++i) (i % 2 ? odd_idx : even_idx).push_back(i);

        std::vector<Int> c(k);
        Int sign_k = (k % 2 == 0) ? Int(1) : Int(-1);

        for (const Int& d0 : div0)
            for (int s0 : {1, -1}) {
                c[0] = s0 * d0;
                if (abs(c[0]) > bound[0]) continue;
                for (const Int& d1 : div1)
                    for (int s1 : {1, -1}) {
                        Int S = s1 * d1 - 1 - c[0];
                        for (const Int& dm : divm1)
                            for (int sm : {1, -1}) {
                                Int A = sm * dm - sign_k - c[0];
                                if ((S + A) % 2 != 0) continue;
                                Int even_sum = (S + A) / 2;
                                Int odd_sum = (S - A) / 2;
                                if (even_idx.empty() && even_sum != 0) continue;
                                if (odd_idx.empty() && odd_sum != 0) continue;

                                // Sweep all but the last member of each parity
                                // class; the class sum pins the last.
                                std::vector<int> free_idx;
                                for (std::size_t i = 0; i + 1 < even_idx.size(); ++i)
                                    free_idx.push_back(even_idx[i]);
                                for (std::size_t i = 0; i + 1 < odd_idx.size(); ++i)
                                    free_idx.push_back(odd_idx[i]);

                                std::vector<Int> free_val(free_idx.size());
                                auto try_candidate = [&]() -> bool {
                                    Int esum(0), osum(0);
                                    for (std::size_t i = 0; i < free_idx.size(); ++i) {
                                        c[free_idx[i]] = free_val[i];
                                        (free_idx[i] % 2 ? osum : esum) += free_val[i];
                                    }
                                    if (!even_idx.empty()) {
                                        c[even_idx.back()] = even_sum - esum;
                                        if (abs(c[even_idx.back()]) > bound[even_idx.back()])
                                            return false;
                                    }
                                    if (!odd_idx.empty()) {
                                        c[odd_idx.back()] = odd_sum - osum;
                                        if (abs(c[odd_idx.back()]) > bound[odd_idx.back()])
                                            return false;
                                    }
                                    std::vector<Int> hc(c.begin(), c.end());
                                    hc.push_back(Int(1));
                                    IntPoly h{std::vector<Int>(hc)};
                                    Int h2 = eval(h, Int(2));
                                    Int F2 = eval(F, Int(2));
                                    if (h2 == 0 || F2 % h2 != 0) return false;
                                    return divides_poly(h, F);
                                };

                                // Depth-first sweep of the free boxes.
                                std::vector<Int> lo(free_idx.size()), hi(free_idx.size());
                                for (std::size_t i = 0; i < free_idx.size(); ++i) {
                                    lo[i] = -bound[free_idx[i]];
                                    hi[i] = bound[free_idx[i]];
                                }
                                std::size_t nf = free_idx.size();
                                if (nf == 0) {
                                    if (try_candidate()) return true;
                                } else {
                                    std::vector<Int> cur = lo;
                                    while (true) {
                                        for (std::size_t i = 0; i < nf; ++i) free_val[i] = cur[i];
                                        if (try_candidate()) return true;
                                        std::size_t pos = 0;
                                        while (pos < nf) {
                                            ++cur[pos];
                                            if (cur[pos] <= hi[pos]) break;
                                            cur[pos] = lo[pos];
                                            ++pos;
                                        }
                                        if (pos == nf) break;
                                    }
                                }
                            }
                    }
            }
    }
    return false;
}

}  // namespace

bool eisenstein_applies(const IntPoly& f, Int* witness_prime) {
    if (f.degree() < 1) return false;
    Int g(0);
    for (int i = 0; i < f.degree(); ++i)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].get_mpz_t());
    if (g <= 1) return false;
    for (const Int& p : prime_factors(g)) {
        if (f.lead() % p == 0) continue;
        if (f[0] % (p * p) == 0) continue;
        if (witness_prime) *witness_prime = p;
        return true;
    }
    return false;
}

bool is_irreducible(const IntPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    if (f.degree() > kMaxIrreducibilityDegree)
        throw unsupported_degree(f.degree(), kMaxIrreducibilityDegree);
    IntPoly g = content_primitive(f).primitive;
    int d = g.degree();
    if (d == 0) return false;  // units are not irreducible
    if (d == 1) return true;
    if (has_rational_root(g)) return false;
    if (d <= 3) return true;  // a factor would have to be linear
    if (eisenstein_applies(g)) return true;

    // Monic image: lead^(d-1) * g(y/lead) is monic with the same splitting
    // behavior over Q.
    Int a = g.lead();
    std::vector<Int> F_coeffs(d + 1);
    Int pw(1);
    for (int i = d; i >= 0; --i) {
        F_coeffs[i] = g[i] * pw;
        if (i > 0) pw *= a;
    }
    IntPoly F{std::move(F_coeffs)};
    return !monic_factor_exists(F);
}

// --- algebraic numbers -------------------------------------------------------

AlgebraicPtr make_algebraic(const RatPoly& m, RootChoice which) {
    if (m.is_zero()) throw zero_poly_error();
    IntPoly prim = content_primitive(m).primitive;
    if (!is_irreducible(prim))
        throw not_irreducible("input polynomial is reducible over Q: " + to_string(prim));
    auto roots = isolate_positive_roots(prim);
    if (roots.empty())
        throw no_positive_root("polynomial has no positive real root: " + to_string(prim));

    Interval chosen;
    switch (which.kind) {
        case RootChoice::Kind::Largest:
            chosen = roots.back();
            break;
        case RootChoice::Kind::Smallest:
            chosen = roots.front();
            break;
        case RootChoice::Kind::Index:
            if (which.index < 0 || which.index >= static_cast<int>(roots.size()))
                throw root_index_error("root index " + std::to_string(which.index) +
                                       " out of range; polynomial has " +
                                       std::to_string(roots.size()) + " positive roots");
            chosen = roots[static_cast<std::size_t>(which.index)];
            break;
    }

    auto a = std::shared_ptr<AlgebraicNumber>(new AlgebraicNumber());
    a->min_poly_ = prim;
    a->display_iv_ = refine(prim, chosen, make_rat(1, 16));
    a->work_iv_ = refine(prim, a->display_iv_, make_rat(1, Int(1) << 24));

    if (eval(prim, Rat(1)) == 0) {
        a->cmp_one_ = 0;  // irreducible with root 1 means prim = x - 1
    } else {
        Interval w = a->work_iv_;
        while (w.contains(Rat(1))) w = refine(prim, w, w.width() / 2);
        a->cmp_one_ = (w.lo >= 1) ? 1 : -1;
        a->work_iv_ = w;
    }
    return a;
}

AlgebraicPtr make_algebraic(const IntPoly& m, RootChoice which) {
    return make_algebraic(RatPoly(m), which);
}

Rat AlgebraicNumber::rational_value() const {
    if (degree() != 1) throw not_applicable("rational_value requires degree 1");
    return make_rat(-min_poly_[0], min_poly_[1]);
}

Rat AlgebraicNumber::monic_constant_term() const { return make_rat(min_poly_[0], min_poly_.lead()); }

MinimalPair minimal_pair(const AlgebraicNumber& a) {
    const IntPoly& m = a.min_poly();
    std::vector<Int> pc(m.degree() + 1, Int(0)), qc(m.degree() + 1, Int(0));
    for (int i = 0; i <= m.degree(); ++i) {
        if (m[i] > 0)
            pc[i] = m[i];
        else
            qc[i] = -m[i];
    }
    return {m.lead(), IntPoly(std::move(pc)), IntPoly(std::move(qc))};
}

// --- elements ----------------------------------------------------------------

QAlphaElem::QAlphaElem(AlgebraicPtr owner, std::vector<Rat> coords)
    : owner_(std::move(owner)), coords_(std::move(coords)) {
    coords_.resize(static_cast<std::size_t>(owner_->degree()), Rat(0));
}

bool QAlphaElem::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

void QAlphaElem::check_owner(const QAlphaElem& y) const {
    if (owner_ == y.owner_) return;
    if (owner_->min_poly() == y.owner_->min_poly() &&
        owner_->display_interval().lo == y.owner_->display_interval().lo &&
        owner_->display_interval().hi == y.owner_->display_interval().hi)
        return;
    throw mixed_field_error();
}

QAlphaElem QAlphaElem::operator+(const QAlphaElem& y) const {
    check_owner(y);
    std::vector<Rat> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.coords_[i];
    return QAlphaElem(owner_, std::move(out));
}

QAlphaElem QAlphaElem::operator-(const QAlphaElem& y) const {
    check_owner(y);
    std::vector<Rat> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y.coords_[i];
    return QAlphaElem(owner_, std::move(out));
}

QAlphaElem QAlphaElem::scaled(const Int& k) const { return scaled(Rat(k)); }

QAlphaElem QAlphaElem::scaled(const Rat& k) const {
    std::vector<Rat> out = coords_;
    for (auto& v : out) v *= k;
    return QAlphaElem(owner_, std::move(out));
}

QAlphaElem QAlphaElem::mul_by_power(int k) const {
    const IntPoly& m = owner_->min_poly();
    int d = m.degree();
    std::vector<Rat> cur = coords_;
    for (int step = 0; step < k; ++step) {
        Rat top = cur[d - 1];
        for (int j = d - 1; j >= 1; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0) {
            // alpha^d = -(1/m_d) * sum_{j<d} m_j alpha^j
            for (int j = 0; j < d; ++j) cur[j] -= top * make_rat(m[j], m[d]);
        }
    }
    return QAlphaElem(owner_, std::move(cur));
}

QAlphaElem elem_zero(const AlgebraicPtr& a) {
    return QAlphaElem(a, std::vector<Rat>(static_cast<std::size_t>(a->degree()), Rat(0)));
}

QAlphaElem elem_one(const AlgebraicPtr& a) {
    auto e = elem_zero(a);
    std::vector<Rat> c = e.coords();
    c[0] = 1;
    return QAlphaElem(a, std::move(c));
}

QAlphaElem elem_power(const AlgebraicPtr& a, int k) { return elem_one(a).mul_by_power(k); }

QAlphaElem elem_from_intpoly(const AlgebraicPtr& a, const IntPoly& f) {
    auto acc = elem_zero(a);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc.mul_by_power(1);
        std::vector<Rat> c = acc.coords();
        c[0] += f[i];
        acc = QAlphaElem(a, std::move(c));
    }
    return acc;
}

namespace {

// Range of the coordinate polynomial over [lo, hi], interval Horner.
std::pair<Rat, Rat> interval_eval(const std::vector<Rat>& coords, const Rat& lo, const Rat& hi) {
    Rat A(0), B(0);
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
        Rat c1 = A * lo, c2 = A * hi, c3 = B * lo, c4 = B * hi;
        Rat mn = std::min(std::min(c1, c2), std::min(c3, c4));
        Rat mx = std::max(std::max(c1, c2), std::max(c3, c4));
        A = mn + *it;
        B = mx + *it;
    }
    return {A, B};
}

}  // namespace

int elem_sign(const QAlphaElem& x) {
    if (x.is_zero()) return 0;
    const auto& a = *x.owner();
    Interval iv = a.work_interval();
    while (true) {
        auto [lo, hi] = interval_eval(x.coords(), iv.lo, iv.hi);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        // Nonzero by basis independence; refine until zero is excluded.
        iv = refine(a.min_poly(), iv, iv.width() / 2);
    }
}

std::strong_ordering elem_compare(const QAlphaElem& x, const QAlphaElem& y) {
    int s = elem_sign(x - y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::pair<Rat, Rat> elem_value_bounds(const QAlphaElem& x, const Interval& iv) {
    return interval_eval(x.coords(), iv.lo, iv.hi);
}

std::pair<Rat, Rat> elem_value_bounds(const QAlphaElem& x) {
    return elem_value_bounds(x, x.owner()->work_interval());
}

Int floor_ratio(const QAlphaElem& r, const QAlphaElem& step) {
    if (r.is_zero()) return Int(0);
    const auto& a = *r.owner();
    Interval iv = a.work_interval();
    auto step_bounds = elem_value_bounds(step, iv);
    while (step_bounds.first <= 0) {
        iv = refine(a.min_poly(), iv, iv.width() / 2);
        step_bounds = elem_value_bounds(step, iv);
    }
    auto r_bounds = elem_value_bounds(r, iv);
    if (r_bounds.second <= 0) return Int(0);
    Int t = floor_rat(r_bounds.second / step_bounds.first);
    while (t > 0 && elem_sign(r - step.scaled(t)) < 0) --t;
    return t;
}

}  // namespace valuate
