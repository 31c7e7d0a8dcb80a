#include "valuate/parse.hpp"

#include <cctype>

namespace valuate {

namespace {

constexpr int kMaxExponent = 64;

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool is_digit() {
        char c = peek();
        return c >= '0' && c <= '9';
    }

    Int parse_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) throw parse_error("expected a number", start);
        return Int(std::string(s.substr(start, pos - start)), 10);
    }

    Rat parse_coeff() {
        Int num = parse_nat();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            std::size_t slash = pos;
            ++pos;
            Int den = parse_nat();
            if (den == 0) throw parse_error("zero denominator", slash);
            return make_rat(num, den);
        }
        return Rat(num);
    }

    // coeff | coeff? var ("^" nat)?
    RatPoly parse_term() {
        skip_ws();
        std::size_t start = pos;
        Rat coeff(1);
        bool have_coeff = false;
        if (is_digit()) {
            coeff = parse_coeff();
            have_coeff = true;
        }
        char c = peek();
        if (c == 'x' || c == 'X') {
            ++pos;
            int exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                std::size_t caret = pos;
                ++pos;
                Int e = parse_nat();
                if (e > kMaxExponent) throw parse_error("exponent exceeds 64", caret + 1);
                exp = static_cast<int>(e.get_si());
            }
            return RatPoly::monomial(coeff, exp);
        }
        if (!have_coeff) throw parse_error("expected a coefficient or a variable", start);
        return RatPoly::monomial(coeff, 0);
    }

    RatPoly parse() {
        RatPoly acc = parse_term();
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') throw parse_error("expected '+' or '-'", pos);
            ++pos;
            RatPoly t = parse_term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }
};

}  // namespace

RatPoly parse_poly(std::string_view text) {
    Parser p{text};
    if (p.eof()) throw parse_error("empty input", 0);
    return p.parse();
}

RatPoly parse_cli_input(std::string_view text) {
    constexpr std::string_view prefix = "rational:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view rest = text.substr(prefix.size());
        RatPoly q = parse_poly(rest);
        if (q.degree() > 0) throw parse_error("expected a rational after 'rational:'", prefix.size());
        if (q.is_zero() || q[0] <= 0)
            throw invalid_input("rational generator must be positive");
        return RatPoly::monomial(Rat(1), 1) - q;
    }
    return parse_poly(text);
}

IntPoly int_poly_from_rat(const RatPoly& f) {
    std::vector<Int> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        if (c.get_den() != 1) throw invalid_input("expected integer coefficients: " + to_string(f));
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

}  // namespace valuate
