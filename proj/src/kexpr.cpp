#include "premon/kexpr.hpp"

#include <cctype>

#include "premon/stext.hpp"

namespace premon {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        char c = peek();
        if (pos < text.size()) ++pos;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(1, static_cast<int>(pos) + 1, msg);
    }
};

struct Parser {
    Lexer lex;
    const AlgebraPtr& algebra;

    Parser(const std::string& t, const AlgebraPtr& a) : lex(t), algebra(a) {}

    NCPolynomial parse() {
        NCPolynomial p = expr();
        if (lex.peek() != '\0') lex.fail("unexpected trailing input");
        return p;
    }

    NCPolynomial expr() {
        NCPolynomial acc = term();
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                lex.take();
                acc = acc + term();
            } else if (c == '-') {
                lex.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    NCPolynomial term() {
        NCPolynomial acc = factor();
        while (true) {
            char c = lex.peek();
            if (c == '*') {
                lex.take();
                acc = acc * factor();
            } else if (c == '/') {
                lex.take();
                long d = integer_literal();
                if (d == 0) lex.fail("division by zero");
                Rat inv(1, d);
                inv.canonicalize();  // keep the denominator positive
                acc = acc * inv;
            } else {
                return acc;
            }
        }
    }

    NCPolynomial factor() {
        char c = lex.peek();
        if (c == '-') {
            lex.take();
            return -factor();
        }
        NCPolynomial base = atom();
        if (lex.peek() == '^') {
            lex.take();
            long e = integer_literal();
            if (e < 0) lex.fail("negative powers are not defined in U(g)");
            base = base.pow(static_cast<unsigned int>(e));
        }
        return base;
    }

    NCPolynomial atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            NCPolynomial p = expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return NCPolynomial::constant(Rat(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            if (name == "I") return NCPolynomial::one();
            if (!algebra->has_generator(name)) lex.fail("unknown generator: " + name);
            return NCPolynomial::generator(name);
        }
        lex.fail("expected number, generator, or '('");
    }

    long integer_literal() {
        lex.skip_ws();
        bool neg = false;
        if (lex.peek() == '-') {
            lex.take();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
            lex.fail("expected integer literal (division is by integers only)");
        long v = 0;
        while (lex.pos < lex.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex.text[lex.pos]))) {
            v = v * 10 + (lex.text[lex.pos] - '0');
            ++lex.pos;
        }
        if (v == 0 && neg) lex.fail("bad integer literal");
        return neg ? -v : v;
    }

    std::string identifier() {
        lex.skip_ws();
        std::string name;
        while (lex.pos < lex.text.size()) {
            char ch = lex.text[lex.pos];
            if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                name.push_back(ch);
                ++lex.pos;
            } else {
                break;
            }
        }
        return name;
    }
};

} // namespace

NCPolynomial parse_poly_expr(const std::string& text, const AlgebraPtr& algebra) {
    Parser p(text, algebra);
    return p.parse();
}

} // namespace premon
