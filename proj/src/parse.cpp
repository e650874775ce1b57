#include "isoder/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace isoder {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(std::move(message) + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, Semi, End };
    Kind kind;
    std::string text; // Number: literal digits or digits/digits; Ident: name
    int line, column;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Number: return "number";
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::Comma: return "','";
        case Token::Kind::Semi: return "';'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_ws();
        const int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::Kind::End, "", line, col};
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = take_digits();
            // A rational literal "n/d" is one token; the '/' is consumed only
            // when digits follow directly.
            if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                advance(); // '/'
                lit += "/" + take_digits();
            }
            return {Token::Kind::Number, lit, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                name += s_[pos_];
                advance();
            }
            return {Token::Kind::Ident, name, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", line, col};
            case '-': return {Token::Kind::Minus, "-", line, col};
            case '*': return {Token::Kind::Star, "*", line, col};
            case '^': return {Token::Kind::Caret, "^", line, col};
            case '(': return {Token::Kind::LParen, "(", line, col};
            case ')': return {Token::Kind::RParen, ")", line, col};
            case ',': return {Token::Kind::Comma, ",", line, col};
            case ';': return {Token::Kind::Semi, ";", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    std::string take_digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            d += s_[pos_];
            advance();
        }
        return d;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

/// Recursive-descent parser over the token stream. allow_x/allow_y restrict
/// the variable set for the univariate entry points.
class Parser {
public:
    Parser(const std::string& text, const ParseOptions& opts, bool allow_x, bool allow_y)
        : lex_(text), opts_(opts), allow_x_(allow_x), allow_y_(allow_y) {
        cur_ = lex_.next();
    }

    BPoly parse_expr_to_end() {
        BPoly e = expr();
        expect_end();
        return e;
    }

    Token current() const { return cur_; }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, cur_.line, cur_.column);
    }
    void bump() { cur_ = lex_.next(); }
    bool accept(Token::Kind k) {
        if (cur_.kind != k) return false;
        bump();
        return true;
    }
    void expect_end() const {
        if (cur_.kind == Token::Kind::End) return;
        if (cur_.kind == Token::Kind::Number || cur_.kind == Token::Kind::Ident ||
            cur_.kind == Token::Kind::LParen)
            fail(std::string("expected an operator before ") + token_name(cur_.kind) +
                 " (implicit multiplication is not allowed; write an explicit '*')");
        fail(std::string("expected '+', '-', '*', '^', or end of input, found ") +
             token_name(cur_.kind));
    }

    BPoly expr() {
        bool neg = false;
        if (accept(Token::Kind::Minus)) neg = true;
        BPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept(Token::Kind::Plus))
                acc = acc + term();
            else if (accept(Token::Kind::Minus))
                acc = acc - term();
            else
                return acc;
        }
    }

    BPoly term() {
        BPoly acc = factor();
        while (accept(Token::Kind::Star)) acc = acc * factor();
        // A value token directly after a factor means a missing '*'.
        if (cur_.kind == Token::Kind::Number || cur_.kind == Token::Kind::Ident ||
            cur_.kind == Token::Kind::LParen)
            fail(std::string("expected an operator before ") + token_name(cur_.kind) +
                 " (implicit multiplication is not allowed; write an explicit '*')");
        return acc;
    }

    BPoly factor() {
        BPoly base = atom();
        if (!accept(Token::Kind::Caret)) return base;
        if (cur_.kind != Token::Kind::Number || cur_.text.find('/') != std::string::npos)
            fail("expected a nonnegative integer exponent after '^'");
        long e = 0;
        for (const char ch : cur_.text) {
            e = e * 10 + (ch - '0');
            if (e > opts_.max_degree)
                fail("exponent exceeds the degree cap " + std::to_string(opts_.max_degree));
        }
        bump();
        return base.pow(e);
    }

    BPoly atom() {
        if (cur_.kind == Token::Kind::Number) {
            const Rat v = rat_from_string(cur_.text);
            bump();
            return BPoly(v);
        }
        if (cur_.kind == Token::Kind::Ident) {
            if (cur_.text == "x") {
                if (!allow_x_) fail("the variable x is not allowed here");
                bump();
                return BPoly::x();
            }
            if (cur_.text == "y") {
                if (!allow_y_) fail("the variable y is not allowed here");
                bump();
                return BPoly::y();
            }
            fail("unknown identifier '" + cur_.text + "' (expected x, y, or a rational literal)");
        }
        if (accept(Token::Kind::LParen)) {
            BPoly e = expr();
            if (!accept(Token::Kind::RParen)) fail("expected ')'");
            return e;
        }
        fail(std::string("expected a rational literal, x, y, or '(', found ") +
             token_name(cur_.kind));
    }

    Lexer lex_;
    Token cur_;
    ParseOptions opts_;
    bool allow_x_, allow_y_;
};

} // namespace

BPoly parse_poly(const std::string& text, const ParseOptions& opts) {
    return Parser(text, opts, true, true).parse_expr_to_end();
}

UPoly parse_upoly_x(const std::string& text, const ParseOptions& opts) {
    const BPoly p = Parser(text, opts, true, false).parse_expr_to_end();
    return *p.as_upoly_in_x(); // y-free by construction
}

UPoly parse_upoly_y(const std::string& text, const ParseOptions& opts) {
    const BPoly p = Parser(text, opts, false, true).parse_expr_to_end();
    return *p.as_upoly_in_y(); // x-free by construction
}

Rat parse_rational(const std::string& text) {
    // Reuse the polynomial machinery with both variables disallowed; the
    // result is a constant.
    const BPoly p = Parser(text, ParseOptions{}, false, false).parse_expr_to_end();
    if (p.is_zero()) return Rat(0);
    return p.coeff_y(0).coeff(0);
}

namespace {

/// Letter-word parser layered over the same lexer/grammar.
class WordParser {
public:
    WordParser(const std::string& text, const ParseOptions& opts) : text_(text), opts_(opts) {}

    Automorphism parse() {
        std::vector<Letter> word;
        size_t pos = 0;
        for (;;) {
            skip_ws(pos);
            if (pos >= text_.size()) break;
            const size_t start = pos;
            std::string name;
            while (pos < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos])))
                name += text_[pos++];
            if (name == "id") continue;
            skip_ws(pos);
            if (name.empty() || pos >= text_.size() || text_[pos] != '(')
                throw ParseError("expected a letter: affine(...), elemY(...), elemX(...), or id",
                                 1, static_cast<int>(start) + 1);
            const size_t close = matching_paren(pos);
            const std::string body = text_.substr(pos + 1, close - pos - 1);
            pos = close + 1;
            word.push_back(letter(name, body, static_cast<int>(start) + 1));
        }
        return Automorphism(std::move(word));
    }

private:
    void skip_ws(size_t& pos) const {
        while (pos < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos]))) ++pos;
    }

    size_t matching_paren(size_t open) const {
        int depth = 0;
        for (size_t i = open; i < text_.size(); ++i) {
            if (text_[i] == '(') ++depth;
            if (text_[i] == ')' && --depth == 0) return i;
        }
        throw ParseError("unbalanced '(' in automorphism letter", 1, static_cast<int>(open) + 1);
    }

    /// Split on top-level separators only (commas inside nested parens stay).
    std::vector<std::string> split_top(const std::string& s, char sep) const {
        std::vector<std::string> parts;
        std::string cur;
        int depth = 0;
        for (const char ch : s) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == sep && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
        return parts;
    }

    Letter letter(const std::string& name, const std::string& body, int col) const {
        const std::vector<std::string> halves = split_top(body, ';');
        if (name == "affine") {
            if (halves.size() != 2)
                throw ParseError("affine needs 'm11,m12,m21,m22; v1,v2'", 1, col);
            const auto ms = split_top(halves[0], ',');
            const auto vs = split_top(halves[1], ',');
            if (ms.size() != 4 || vs.size() != 2)
                throw ParseError("affine needs 'm11,m12,m21,m22; v1,v2'", 1, col);
            return Affine{{parse_rational(ms[0]), parse_rational(ms[1]), parse_rational(ms[2]),
                           parse_rational(ms[3])},
                          {parse_rational(vs[0]), parse_rational(vs[1])}};
        }
        if (name == "elemY") {
            if (halves.size() != 2) throw ParseError("elemY needs 'p(x); beta'", 1, col);
            return ElemY{parse_upoly_x(halves[0], opts_), parse_rational(halves[1])};
        }
        if (name == "elemX") {
            if (halves.size() != 2) throw ParseError("elemX needs 'q(y); alpha'", 1, col);
            return ElemX{parse_upoly_y(halves[0], opts_), parse_rational(halves[1])};
        }
        throw ParseError("unknown letter '" + name + "' (expected affine, elemY, elemX, or id)",
                         1, col);
    }

    const std::string& text_;
    ParseOptions opts_;
};

} // namespace

Automorphism parse_automorphism(const std::string& text, const ParseOptions& opts) {
    return WordParser(text, opts).parse();
}

std::string print_poly(const BPoly& f) { return f.to_string(); }

std::string print_upoly(const UPoly& f, const std::string& var) { return f.to_string(var); }

} // namespace isoder
