#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "kkw/symbols.hpp"

namespace kkw {

// Value of a parsed expression: an element of the pole-rational algebra plus
// a formal power of pi (contour integrals owe exactly one pi each).
struct ExprValue {
    PoleRational val;
    int pi_pow = 0;

    friend bool operator==(const ExprValue& x, const ExprValue& y) {
        return x.pi_pow == y.pi_pow && x.val == y.val;
    }
};

inline std::string render(const ExprValue& v) {
    std::string s = v.val.str();
    for (int k = 0; k < v.pi_pow; ++k) s = "(" + s + ")*pi";
    return s;
}

// Recursive-descent parser for the expression language
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' nat)?
//   base   := atom | '(' expr ')' | fn '(' expr ')'
//   atom   := 'A'|'B'|'P'|'xi'|'kappa'|'u'|'f0'|'f1'|'i'|'pi'|integer
//   fn     := 'tr'|'piplus'|'piminus'|'dxi'|'dxn'|'int'
// Divisors are restricted to nonzero scalar constants times products of
// (xi-i)^a and (xi+i)^b; anything else is rejected with a position.
class Parser {
  public:
    explicit Parser(std::string text, int n = 6) : text_(std::move(text)), n_(n) {}

    ExprValue parse() {
        try {
            ExprValue v = parse_expr();
            skip_ws();
            if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string("semantic error: ") + e.what(), pos_);
        }
    }

  private:
    std::string text_;
    size_t pos_ = 0;
    int n_ = 6;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    ExprValue parse_expr() {
        bool neg = accept('-');
        ExprValue acc = parse_term();
        if (neg) acc.val = -acc.val;
        for (;;) {
            if (accept('+')) {
                add_into(acc, parse_term(), false);
            } else if (accept('-')) {
                add_into(acc, parse_term(), true);
            } else {
                return acc;
            }
        }
    }

    void add_into(ExprValue& acc, const ExprValue& rhs, bool subtract) {
        if (acc.pi_pow != rhs.pi_pow)
            throw ParseError("cannot add values with different powers of pi", pos_);
        acc.val = subtract ? acc.val - rhs.val : acc.val + rhs.val;
    }

    ExprValue parse_term() {
        ExprValue acc = parse_factor();
        for (;;) {
            if (accept('*')) {
                ExprValue rhs = parse_factor();
                acc.val = acc.val * rhs.val;
                acc.pi_pow += rhs.pi_pow;
            } else if (accept('/')) {
                size_t at = pos_;
                divide_into(acc, parse_factor(), at);
            } else {
                return acc;
            }
        }
    }

    // Divisor must be scalar * (xi-i)^a * (xi+i)^b with a nonzero constant.
    void divide_into(ExprValue& acc, const ExprValue& divisor, size_t at) {
        if (divisor.pi_pow != 0) throw ParseError("cannot divide by a power of pi", at);
        const PoleRational& d = divisor.val;
        if (!d.is_polynomial() || !d.is_scalar())
            throw ParseError("divisor must be a product of (xi-i), (xi+i) and a constant", at);
        std::vector<GaussianRational> p;
        for (const auto& c : d.num()) {
            auto k = c.coeff(M_1).as_constant();
            if (!k) throw ParseError("divisor must have constant coefficients", at);
            p.push_back(*k);
        }
        while (!p.empty() && p.back().is_zero()) p.pop_back();
        if (p.empty()) throw ParseError("division by zero", at);
        const GaussianRational I = GaussianRational::i();
        auto eval = [&](const GaussianRational& x) {
            GaussianRational acc2(0);
            for (size_t k = p.size(); k-- > 0;) acc2 = acc2 * x + p[k];
            return acc2;
        };
        auto deflate = [&](const GaussianRational& root) {
            std::vector<GaussianRational> q(p.size() - 1);
            GaussianRational carry(0);
            for (size_t k = p.size(); k-- > 1;) {
                carry = p[k] + carry * root;
                q[k - 1] = carry;
            }
            p = std::move(q);
        };
        int a = 0, b = 0;
        while (p.size() > 1 && eval(I).is_zero()) {
            deflate(I);
            ++a;
        }
        while (p.size() > 1 && eval(-I).is_zero()) {
            deflate(-I);
            ++b;
        }
        if (p.size() != 1)
            throw ParseError("divisor must factor into (xi-i) and (xi+i) terms", at);
        acc.val = (acc.val * PoleRational(NumPoly{CliffordElement::one()}, a, b))
                      .scaled(GaussianRational(1) / p[0]);
    }

    ExprValue parse_factor() {
        ExprValue v = parse_base();
        if (accept('^')) {
            size_t at = pos_;
            long e = parse_nat();
            ExprValue r{PoleRational(1), 0};
            for (long k = 0; k < e; ++k) {
                r.val = r.val * v.val;
                r.pi_pow += v.pi_pow;
            }
            if (e > 64) throw ParseError("exponent too large", at);
            v = std::move(r);
        }
        return v;
    }

    long parse_nat() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a natural number", pos_);
        return std::stol(text_.substr(start, pos_ - start));
    }

    ExprValue parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprValue v = parse_expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return {PoleRational(GaussianRational(parse_nat())), 0};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string id = text_.substr(start, pos_ - start);
            if (peek('(')) return apply_fn(id, start);
            return atom(id, start);
        }
        throw ParseError("unexpected character", pos_);
    }

    ExprValue atom(const std::string& id, size_t at) {
        if (id == "A") return {PoleRational(CliffordElement::A()), 0};
        if (id == "B") return {PoleRational(CliffordElement::B()), 0};
        if (id == "P") return {PoleRational(CliffordElement::P()), 0};
        if (id == "xi") return {PoleRational::xi(), 0};
        if (id == "kappa") return {PoleRational(ScalarPoly::kappa()), 0};
        if (id == "u") return {PoleRational(ScalarPoly::u()), 0};
        if (id == "f0") return {PoleRational(ScalarPoly::f0()), 0};
        if (id == "f1") return {PoleRational(ScalarPoly::f1()), 0};
        if (id == "i") return {PoleRational(GaussianRational::i()), 0};
        if (id == "pi") return {PoleRational(1), 1};
        throw ParseError("unknown identifier '" + id + "'", at);
    }

    ExprValue apply_fn(const std::string& fn, size_t at) {
        expect('(');
        ExprValue arg = parse_expr();
        expect(')');
        try {
            if (fn == "tr") return {arg.val.trace(n_), arg.pi_pow};
            if (fn == "piplus") return {arg.val.pi_plus(), arg.pi_pow};
            if (fn == "piminus") return {arg.val.pi_minus(), arg.pi_pow};
            if (fn == "dxi") return {arg.val.diff_xi(), arg.pi_pow};
            if (fn == "dxn") {
                if (!arg.val.is_polynomial())
                    throw ParseError("dxn needs a denominator-free operand", at);
                return {arg.val.map_coeffs([](const CliffordElement& c) { return c.derivative_xn(); }),
                        arg.pi_pow};
            }
            if (fn == "int") {
                LineIntegral li = arg.val.integrate_line();
                return {PoleRational(li.coeff), arg.pi_pow + 1};
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string(fn) + ": " + e.what(), at);
        }
        throw ParseError("unknown function '" + fn + "'", at);
    }
};

inline ExprValue parse_expr(const std::string& text, int n = 6) { return Parser(text, n).parse(); }

} // namespace kkw
