#include "valuate/poly.hpp"

#include <algorithm>
#include <sstream>

namespace valuate {

Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// --- IntPoly ---------------------------------------------------------------

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(Int coeff, int exp) {
    IntPoly f;
    if (coeff != 0) {
        f.c_.assign(exp + 1, Int(0));
        f.c_[exp] = std::move(coeff);
    }
    return f;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::operator[](int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Int& IntPoly::lead() const {
    if (is_zero()) throw zero_poly_error();
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), Int(0));
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), Int(0));
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    std::vector<Int> out(f.c_.size() + g.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& a, const IntPoly& f) {
    if (a == 0) return IntPoly();
    std::vector<Int> out = f.c_;
    for (auto& v : out) v *= a;
    return IntPoly(std::move(out));
}

// --- RatPoly ---------------------------------------------------------------

RatPoly::RatPoly(const IntPoly& f) {
    c_.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c_.emplace_back(v);
}

RatPoly RatPoly::monomial(Rat coeff, int exp) {
    RatPoly f;
    if (coeff != 0) {
        f.c_.assign(exp + 1, Rat(0));
        f.c_[exp] = std::move(coeff);
    }
    return f;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::operator[](int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rat& RatPoly::lead() const {
    if (is_zero()) throw zero_poly_error();
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), Rat(0));
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), Rat(0));
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return RatPoly();
    std::vector<Rat> out(f.c_.size() + g.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly operator*(const Rat& a, const RatPoly& f) {
    if (a == 0) return RatPoly();
    std::vector<Rat> out = f.c_;
    for (auto& v : out) v *= a;
    return RatPoly(std::move(out));
}

// --- division --------------------------------------------------------------

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw zero_poly_error();
    std::vector<Rat> rem(f.coeffs());
    int dg = g.degree();
    int df = f.degree();
    if (df < dg) return {RatPoly(), f};
    std::vector<Rat> quot(df - dg + 1, Rat(0));
    for (int i = df; i >= dg; --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] / g.lead();
        quot[i - dg] = q;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& f, const RatPoly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw division_error("polynomial division leaves a remainder");
    return q;
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    auto q = exact_div(RatPoly(f), RatPoly(g));
    std::vector<Int> out;
    out.reserve(q.coeffs().size());
    for (const auto& v : q.coeffs()) {
        if (v.get_den() != 1) throw division_error("quotient is not an integer polynomial");
        out.push_back(v.get_num());
    }
    return IntPoly(std::move(out));
}

// --- combinatorial primitives ----------------------------------------------

std::set<int> support(const IntPoly& f) {
    std::set<int> s;
    for (int i = 0; i <= f.degree(); ++i)
        if (f[i] != 0) s.insert(i);
    return s;
}

std::set<int> support(const RatPoly& f) {
    std::set<int> s;
    for (int i = 0; i <= f.degree(); ++i)
        if (f[i] != 0) s.insert(i);
    return s;
}

int sign_variations(const IntPoly& f) {
    int count = 0;
    int last = 0;
    for (const auto& v : f.coeffs()) {
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

Rat eval(const IntPoly& f, const Rat& x) {
    Rat acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

Rat eval(const RatPoly& f, const Rat& x) {
    Rat acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

Int eval(const IntPoly& f, const Int& x) {
    Int acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() <= 0) return IntPoly();
    std::vector<Int> out(f.degree());
    for (int i = 1; i <= f.degree(); ++i) out[i - 1] = Int(i) * f[i];
    return IntPoly(std::move(out));
}

IntPoly shift_up(const IntPoly& f, int k) {
    if (f.is_zero() || k == 0) return k == 0 ? f : IntPoly();
    std::vector<Int> out(f.coeffs().size() + k, Int(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i + k] = f.coeffs()[i];
    return IntPoly(std::move(out));
}

Int content(const IntPoly& f) {
    Int g(0);
    for (const auto& v : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ContentSplit content_primitive(const RatPoly& f) {
    if (f.is_zero()) throw zero_poly_error();
    Int den_lcm(1);
    for (const auto& v : f.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    Int num_gcd(0);
    for (const auto& v : f.coeffs()) {
        Int scaled_num = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rat scale = make_rat(den_lcm, num_gcd);
    if (f.lead() < 0) scale = -scale;
    std::vector<Int> out;
    out.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        Rat s = v * scale;
        out.push_back(s.get_num());
    }
    return {scale, IntPoly(std::move(out))};
}

ContentSplit content_primitive(const IntPoly& f) { return content_primitive(RatPoly(f)); }

// --- printing ----------------------------------------------------------------

std::string to_string(const Rat& q) { return q.get_str(); }

namespace {

template <class Poly>
std::string poly_to_string(const Poly& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const auto& c = f[i];
        if (c == 0) continue;
        bool neg = c < 0;
        auto abs_str = [&] {
            auto a = c;
            if (neg) a = -a;
            return a.get_str();
        }();
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (abs_str == "1");
        if (i == 0) {
            os << abs_str;
        } else {
            if (!unit) os << abs_str << " ";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const IntPoly& f, std::string_view var) { return poly_to_string(f, var); }
std::string to_string(const RatPoly& f, std::string_view var) { return poly_to_string(f, var); }

}  // namespace valuate
