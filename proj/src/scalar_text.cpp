#include "kzrat/scalar_text.hpp"

#include "kzrat/errors.hpp"

#include <cctype>
#include <limits>

namespace kzrat {
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParamScalar parse() {
        ParamScalar value = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamScalar expression() {
        ParamScalar value = term();
        for (;;) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    ParamScalar term() {
        ParamScalar value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                ParamScalar divisor = unary();
                if (divisor.is_zero()) throw ParseError("division by zero", at);
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    ParamScalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    ParamScalar power() {
        ParamScalar base = primary();
        if (accept('^')) {
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("exponent must be a non-negative integer");
            }
            const Integer e = digits();
            if (e > std::numeric_limits<long>::max() / 2) fail("exponent too large");
            return base.pow(e.get_si());
        }
        return base;
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    ParamScalar primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return ParamScalar(Rational(digits()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "z1") return ParamScalar::z1();
            if (name == "z2") return ParamScalar::z2();
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        }
        if (accept('(')) {
            ParamScalar inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, bool latex) {
    std::string out;
    auto factor = [&](unsigned e, const char* plain, const char* tex) {
        if (e == 0) return;
        if (!out.empty()) out += latex ? " \\cdot " : "*";
        out += latex ? tex : plain;
        if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    };
    factor(m.e1, "z1", "z_{1}");
    factor(m.e2, "z2", "z_{2}");
    return out;
}

std::string coefficient_text(const Rational& magnitude, bool latex) {
    if (magnitude.is_integer()) return magnitude.to_string();
    if (latex) {
        return "\\frac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
    }
    return "(" + magnitude.to_string() + ")";
}

std::string poly_text(const ParamPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = c.abs();
        if (m.degree() == 0) {
            out += latex ? coefficient_text(magnitude, true) : magnitude.to_string();
        } else if (magnitude == Rational(1)) {
            out += monomial_text(m, latex);
        } else {
            out += coefficient_text(magnitude, latex) + (latex ? " \\cdot " : "*") + monomial_text(m, latex);
        }
    }
    return out;
}

}  // namespace

ParamScalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

std::string render_poly(const ParamPoly& p) { return poly_text(p, false); }

std::string render_scalar(const ParamScalar& s) {
    if (s.is_polynomial()) return poly_text(s.num(), false);
    return "(" + poly_text(s.num(), false) + ")/(" + poly_text(s.den(), false) + ")";
}

std::string render_scalar_latex(const ParamScalar& s) {
    if (s.is_polynomial()) return poly_text(s.num(), true);
    return "\\frac{" + poly_text(s.num(), true) + "}{" + poly_text(s.den(), true) + "}";
}

}  // namespace kzrat
