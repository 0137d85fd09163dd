#include "germ/expr.hpp"

#include <cctype>
#include <optional>

#include "germ/error.hpp"

namespace germ {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    Lexer(const std::string& s, int line0) : s_(s), line_(line0) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        if (pos_ >= s_.size()) return {Tok::End, "", line_, col_};
        int line = line_, col = col_;
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                t += s_[pos_++];
                ++col_;
            }
            return {Tok::Int, t, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                t += s_[pos_++];
                ++col_;
            }
            return {Tok::Ident, t, line, col};
        }
        ++pos_;
        ++col_;
        switch (c) {
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            case ',': return {Tok::Comma, ",", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
    int col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& s, RingPtr ring, int line0)
        : lex_(s, line0), ring_(std::move(ring)) {
        cur_ = lex_.next();
    }

    Poly parse_expression_all() {
        Poly p = expression();
        expect_end();
        return p;
    }

    std::vector<Poly> parse_list_all() {
        std::vector<Poly> out;
        out.push_back(expression());
        while (cur_.kind == Tok::Comma) {
            advance();
            out.push_back(expression());
        }
        expect_end();
        return out;
    }

    PForm parse_form_all() {
        std::optional<PForm> acc;
        int sign = 1;
        if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            sign = cur_.kind == Tok::Minus ? -1 : 1;
            advance();
        }
        while (true) {
            PForm term = form_term();
            if (sign < 0) term = -term;
            if (!acc) {
                acc = term;
            } else {
                if (acc->form_degree() != term.form_degree())
                    throw ParseError("form terms have different degrees", cur_.line, cur_.col);
                *acc += term;
            }
            if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
                sign = cur_.kind == Tok::Minus ? -1 : 1;
                advance();
                continue;
            }
            break;
        }
        expect_end();
        return *acc;
    }

  private:
    void advance() { cur_ = lex_.next(); }

    void expect_end() {
        if (cur_.kind != Tok::End)
            throw ParseError("unexpected trailing input '" + cur_.text + "'", cur_.line,
                             cur_.col);
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.col); }

    // Is the current token a differential like dx (d + variable name)?
    bool at_dvar() const {
        if (cur_.kind != Tok::Ident || cur_.text.size() < 2 || cur_.text[0] != 'd') return false;
        return ring_->var_index(cur_.text.substr(1)).has_value();
    }

    Poly expression() {
        int sign = 1;
        if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            sign = cur_.kind == Tok::Minus ? -1 : 1;
            advance();
        }
        Poly p = term();
        if (sign < 0) p = -p;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            advance();
            Poly q = term();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (cur_.kind == Tok::Star) {
            advance();
            p = p * factor();
        }
        return p;
    }

    Poly factor() {
        Poly p = atom();
        if (cur_.kind == Tok::Caret) {
            advance();
            if (cur_.kind != Tok::Int) fail("exponent must be a non-negative integer");
            if (cur_.text.size() > 4) fail("exponent too large");
            long e = std::stol(cur_.text);
            advance();
            Poly r = Poly::constant(ring_, Rational(1));
            for (long i = 0; i < e; ++i) r = r * p;
            return r;
        }
        return p;
    }

    Poly atom() {
        switch (cur_.kind) {
            case Tok::Int: {
                Rational num{mpz_class(cur_.text)};
                advance();
                if (cur_.kind == Tok::Slash) {
                    advance();
                    if (cur_.kind != Tok::Int) fail("denominator must be an integer");
                    Rational den{mpz_class(cur_.text)};
                    if (den.is_zero()) fail("zero denominator");
                    advance();
                    return Poly::constant(ring_, num / den);
                }
                return Poly::constant(ring_, num);
            }
            case Tok::Ident: {
                auto idx = ring_->var_index(cur_.text);
                if (!idx) fail("unknown variable '" + cur_.text + "'");
                advance();
                return Poly::variable(ring_, *idx);
            }
            case Tok::LParen: {
                advance();
                Poly p = expression();
                if (cur_.kind != Tok::RParen) fail("expected ')'");
                advance();
                return p;
            }
            case Tok::Minus: {
                advance();
                return -atom();
            }
            default:
                fail("expected a number, variable, or '('");
        }
    }

    // One summand of a form: d-block alone, coefficient alone (0-form), or
    // coefficient followed by a d-block.
    PForm form_term() {
        if (at_dvar()) return dblock(Poly::constant(ring_, Rational(1)));
        Poly coeff = term();  // multiplicative level; '+'/'-' separate form terms
        if (at_dvar()) return dblock(coeff);
        return PForm::term(ring_, coeff, {});
    }

    PForm dblock(Poly coeff) {
        IndexTuple idx;
        while (true) {
            if (!at_dvar()) fail("expected a differential like dx");
            idx.push_back(*ring_->var_index(cur_.text.substr(1)));
            advance();
            if (cur_.kind == Tok::Caret) {
                advance();
                continue;
            }
            break;
        }
        return PForm::term(ring_, std::move(coeff), std::move(idx));
    }

    Lexer lex_;
    RingPtr ring_;
    Token cur_;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring, int line0) {
    return Parser(text, ring, line0).parse_expression_all();
}

std::vector<Poly> parse_poly_list(const std::string& text, const RingPtr& ring, int line0) {
    return Parser(text, ring, line0).parse_list_all();
}

PForm parse_form(const std::string& text, const RingPtr& ring, int line0) {
    return Parser(text, ring, line0).parse_form_all();
}

}  // namespace germ
