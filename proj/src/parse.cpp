#include "ode2/parse.hpp"
#include "ode2/errors.hpp"

#include <cctype>

namespace ode2 {

namespace {

struct Token {
    enum class Kind { Number, X, Y, Yp, Ypp, Ident, Plus, Minus, Star, Slash,
                      Caret, LParen, RParen, Equals, End };
    Kind kind = Kind::End;
    Rational value;     // Number
    std::string text;   // Ident
    size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && isspace((unsigned char)s_[i_])) ++i_;
        Token t;
        t.pos = i_;
        if (i_ >= s_.size()) return t;
        char c = s_[i_];
        if (isdigit((unsigned char)c)) {
            size_t j = i_;
            while (j < s_.size() && (isdigit((unsigned char)s_[j]) || s_[j] == '.')) ++j;
            std::string num = s_.substr(i_, j - i_);
            i_ = j;
            t.kind = Token::Kind::Number;
            t.value = rational_from_decimal(num);
            return t;
        }
        if (isalpha((unsigned char)c) || c == '_') {
            size_t j = i_;
            while (j < s_.size() && (isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
            std::string name = s_.substr(i_, j - i_);
            i_ = j;
            if (name == "x") { t.kind = Token::Kind::X; return t; }
            if (name == "y") {
                int primes = 0;
                while (i_ < s_.size() && s_[i_] == '\'') { ++primes; ++i_; }
                if (primes == 0) t.kind = Token::Kind::Y;
                else if (primes == 1) t.kind = Token::Kind::Yp;
                else if (primes == 2) t.kind = Token::Kind::Ypp;
                else {
                    Error e(ErrorCode::SyntaxError, "derivative order above 2");
                    e.index = (long)t.pos + 1;
                    throw e;
                }
                return t;
            }
            t.kind = Token::Kind::Ident;
            t.text = name;
            return t;
        }
        ++i_;
        switch (c) {
        case '+': t.kind = Token::Kind::Plus; return t;
        case '-': t.kind = Token::Kind::Minus; return t;
        case '*': t.kind = Token::Kind::Star; return t;
        case '/': t.kind = Token::Kind::Slash; return t;
        case '^': t.kind = Token::Kind::Caret; return t;
        case '(': t.kind = Token::Kind::LParen; return t;
        case ')': t.kind = Token::Kind::RParen; return t;
        case '=': t.kind = Token::Kind::Equals; return t;
        }
        Error e(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'");
        e.index = (long)t.pos + 1;
        throw e;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

// linear form c0 + cy*y + cyp*y' + cypp*y'' with polynomial coefficients
struct LinVal {
    Poly c0, cy, cyp, cypp;

    bool has_y() const { return !cy.is_zero() || !cyp.is_zero() || !cypp.is_zero(); }
    bool is_constant() const { return !has_y() && c0.degree() <= 0; }
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { advance(); }

    LinVal parse() {
        LinVal v = expr();
        if (cur_.kind == Token::Kind::Equals) {
            advance();
            LinVal rhs = expr();
            v = sub(v, rhs);
        }
        expect(Token::Kind::End, "end of input");
        return v;
    }

private:
    Lexer lex_;
    Token cur_;

    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void error(const std::string& msg) {
        Error e(ErrorCode::SyntaxError, msg);
        e.index = (long)cur_.pos + 1;
        throw e;
    }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) error("expected " + what);
    }

    static LinVal sub(const LinVal& a, const LinVal& b) {
        return {a.c0 - b.c0, a.cy - b.cy, a.cyp - b.cyp, a.cypp - b.cypp};
    }
    static LinVal add(const LinVal& a, const LinVal& b) {
        return {a.c0 + b.c0, a.cy + b.cy, a.cyp + b.cyp, a.cypp + b.cypp};
    }

    LinVal mul(const LinVal& a, const LinVal& b) {
        if (a.has_y() && b.has_y())
            error("nonlinear combination of y terms");
        const LinVal& scalar = a.has_y() ? b : a;
        const LinVal& lin = a.has_y() ? a : b;
        const Poly& s = scalar.c0;
        return {lin.c0 * s, lin.cy * s, lin.cyp * s, lin.cypp * s};
    }

    LinVal div(const LinVal& a, const LinVal& b, size_t pos) {
        if (b.has_y()) error("division by a y term");
        if (b.c0.degree() > 0) {
            Error e(ErrorCode::NonPolynomialCoefficient,
                    "division by a polynomial in x");
            e.index = (long)pos + 1;
            throw e;
        }
        if (b.c0.is_zero()) error("division by zero");
        QSurd inv = QSurd(1) / b.c0[0];
        return {a.c0 * inv, a.cy * inv, a.cyp * inv, a.cypp * inv};
    }

    LinVal expr() {
        bool neg = false;
        if (cur_.kind == Token::Kind::Plus) advance();
        else if (cur_.kind == Token::Kind::Minus) { neg = true; advance(); }
        LinVal v = term();
        if (neg) v = sub(LinVal{}, v);
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool minus = cur_.kind == Token::Kind::Minus;
            advance();
            LinVal rhs = term();
            v = minus ? sub(v, rhs) : add(v, rhs);
        }
        return v;
    }

    LinVal term() {
        LinVal v = factor();
        while (cur_.kind == Token::Kind::Star || cur_.kind == Token::Kind::Slash) {
            bool is_div = cur_.kind == Token::Kind::Slash;
            size_t pos = cur_.pos;
            advance();
            LinVal rhs = factor();
            v = is_div ? div(v, rhs, pos) : mul(v, rhs);
        }
        return v;
    }

    LinVal factor() {
        LinVal v = primary();
        if (cur_.kind == Token::Kind::Caret) {
            advance();
            if (cur_.kind != Token::Kind::Number || !is_integer(cur_.value) ||
                sgn(cur_.value) < 0)
                error("exponent must be a nonnegative integer");
            long e = cur_.value.get_num().get_si();
            advance();
            if (v.has_y()) error("power of a y term");
            LinVal r;
            r.c0 = v.c0.pow((int)e);
            return r;
        }
        return v;
    }

    LinVal primary() {
        LinVal v;
        switch (cur_.kind) {
        case Token::Kind::Number:
            v.c0 = Poly(QSurd(cur_.value));
            advance();
            return v;
        case Token::Kind::X:
            v.c0 = Poly::x();
            advance();
            return v;
        case Token::Kind::Y:
            v.cy = Poly::one();
            advance();
            return v;
        case Token::Kind::Yp:
            v.cyp = Poly::one();
            advance();
            return v;
        case Token::Kind::Ypp:
            v.cypp = Poly::one();
            advance();
            return v;
        case Token::Kind::Ident: {
            Error e(ErrorCode::FreeParameter,
                    "free parameter '" + cur_.text + "' (only x and y are allowed)");
            e.detail = cur_.text;
            e.index = (long)cur_.pos + 1;
            throw e;
        }
        case Token::Kind::LParen: {
            advance();
            v = expr();
            expect(Token::Kind::RParen, "')'");
            advance();
            return v;
        }
        default:
            error("expected a number, x, y or '('");
        }
    }
};

} // namespace

ODE2 parse_equation(const std::string& text) {
    Parser parser(text);
    LinVal v = parser.parse();
    if (!v.c0.is_zero()) {
        Error e(ErrorCode::SyntaxError, "inhomogeneous term; equations must be "
                                        "linear homogeneous in y");
        throw e;
    }
    if (v.cypp.is_zero()) {
        Error e(ErrorCode::NotSecondOrder, "coefficient of y'' vanishes");
        throw e;
    }
    return ODE2(v.cypp, v.cyp, v.cy);
}

namespace {

// surd := ("(" sum ")" "/" uint) | sum
// sum  := ("+"|"-")? item (("+"|"-") item)*
// item := rational | rational "*" "sqrt" "(" int ")" | "sqrt" "(" int ")"
class PointParser {
public:
    explicit PointParser(const std::string& s) : s_(s) {}

    QSurd parse() {
        skip();
        QSurd v;
        if (peek() == '(') {
            size_t save = i_;
            ++i_;
            v = sum();
            skip();
            if (peek() == ')') {
                ++i_;
                skip();
                if (peek() == '/') {
                    ++i_;
                    Rational den = number();
                    v = v / QSurd(den);
                }
            } else {
                i_ = save;
                v = sum();
            }
        } else {
            v = sum();
        }
        skip();
        if (i_ != s_.size()) err("trailing characters in point");
        return v;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void err(const std::string& m) {
        Error e(ErrorCode::SyntaxError, m + " in '" + s_ + "'");
        throw e;
    }
    void skip() { while (i_ < s_.size() && isspace((unsigned char)s_[i_])) ++i_; }
    char peek() { return i_ < s_.size() ? s_[i_] : '\0'; }

    Rational number() {
        skip();
        size_t j = i_;
        if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
        size_t start = j;
        while (j < s_.size() && (isdigit((unsigned char)s_[j]) || s_[j] == '.')) ++j;
        if (j == start) err("expected a number");
        Rational r = rational_from_decimal(s_.substr(i_, j - i_));
        i_ = j;
        skip();
        if (peek() == '/') {
            size_t save = i_;
            ++i_;
            skip();
            size_t k = i_;
            while (k < s_.size() && isdigit((unsigned char)s_[k])) ++k;
            // only consume the slash for a plain rational, not "(...)/n"
            if (k > i_) {
                Rational den = rational_from_decimal(s_.substr(i_, k - i_));
                if (den == 0) err("zero denominator");
                r /= den;
                i_ = k;
            } else {
                i_ = save;
            }
        }
        return r;
    }

    QSurd item() {
        skip();
        if (s_.compare(i_, 5, "sqrt(") == 0) {
            i_ += 5;
            Rational d = number();
            skip();
            if (peek() != ')') err("expected ')'");
            ++i_;
            if (!is_integer(d)) err("radicand must be an integer");
            return QSurd::sqrt_rational(d);
        }
        Rational r = number();
        skip();
        if (peek() == '*') {
            size_t save = i_;
            ++i_;
            skip();
            if (s_.compare(i_, 5, "sqrt(") == 0) {
                i_ += 5;
                Rational d = number();
                skip();
                if (peek() != ')') err("expected ')'");
                ++i_;
                if (!is_integer(d)) err("radicand must be an integer");
                return QSurd(r) * QSurd::sqrt_rational(d);
            }
            i_ = save;
        }
        return QSurd(r);
    }

    QSurd sum() {
        skip();
        bool neg = false;
        if (peek() == '+') ++i_;
        else if (peek() == '-') { neg = true; ++i_; }
        QSurd v = item();
        if (neg) v = -v;
        skip();
        while (peek() == '+' || peek() == '-') {
            bool minus = peek() == '-';
            ++i_;
            QSurd rhs = item();
            v = minus ? v - rhs : v + rhs;
            skip();
        }
        return v;
    }
};

} // namespace

QSurd parse_qsurd(const std::string& text) {
    return PointParser(text).parse();
}

Location parse_point(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace((unsigned char)c)) t += c;
    if (t == "inf" || t == "oo" || t == "infinity")
        return Location::infinity();
    return Location::finite(parse_qsurd(text));
}

} // namespace ode2
