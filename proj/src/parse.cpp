#include "dualis/parse.hpp"

#include <cctype>

namespace dualis {

namespace {

const MonomialOrder kCanonical = MonomialOrder::degrevlex();

enum class TokenKind { Identifier, Number, Symbol, End };

struct Token {
    TokenKind kind;
    std::string text; // identifier/number text, or the symbol character
    SourcePos pos;
};

class Lexer {
public:
    Lexer(std::string_view text, std::vector<std::string>* labels)
        : text_(text), labels_(labels) {
        advance();
    }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_trivia();
        current_.pos = pos_;
        if (at_end()) {
            current_ = {TokenKind::End, "", pos_};
            return;
        }
        char c = text_[index_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[index_])) ||
                                 text_[index_] == '_'))
                word.push_back(consume());
            current_ = {TokenKind::Identifier, std::move(word), current_.pos};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[index_])))
                digits.push_back(consume());
            current_ = {TokenKind::Number, std::move(digits), current_.pos};
        } else if (std::string_view(";=+-*^/()").find(c) != std::string_view::npos) {
            current_ = {TokenKind::Symbol, std::string(1, consume()), current_.pos};
        } else {
            throw ParseError(ErrorCode::Parse, pos_,
                             std::string("unexpected character '") + c + "'");
        }
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = text_[index_];
            if (c == '#') {
                std::string label;
                consume();
                while (!at_end() && text_[index_] != '\n') label.push_back(consume());
                if (labels_ != nullptr) labels_->push_back(label);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                consume();
            } else {
                break;
            }
        }
    }

    bool at_end() const { return index_ >= text_.size(); }

    char consume() {
        char c = text_[index_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    std::string_view text_;
    std::vector<std::string>* labels_;
    std::size_t index_ = 0;
    SourcePos pos_;
    Token current_{TokenKind::End, "", {1, 1}};
};

class Parser {
public:
    Parser(std::string_view text, std::vector<std::string>* labels) : lexer_(text, labels) {}

    IdealDocument parse_document() {
        Ring ring = parse_ring_decl();
        std::vector<Polynomial> polys = parse_ideal_decl(ring);
        expect_end();
        return {std::move(ring), std::move(polys), {}};
    }

    Polynomial parse_fragment(const Ring& ring) {
        Polynomial p = parse_poly(ring);
        expect_end();
        return p;
    }

private:
    Ring parse_ring_decl() {
        expect_keyword("ring");
        std::vector<std::string> names;
        while (lexer_.peek().kind == TokenKind::Identifier) {
            Token t = lexer_.take();
            if (is_reserved_name(t.text))
                throw ParseError(ErrorCode::ReservedName, t.pos,
                                 "variable name '" + t.text + "' is reserved");
            names.push_back(t.text);
        }
        if (names.empty()) fail("variable name");
        try {
            Ring ring(std::move(names));
            expect_symbol(";");
            return ring;
        } catch (const Error& e) {
            throw ParseError(ErrorCode::Parse, lexer_.peek().pos, e.what());
        }
    }

    std::vector<Polynomial> parse_ideal_decl(const Ring& ring) {
        expect_keyword("ideal");
        expect_symbol("=");
        std::vector<Polynomial> polys;
        polys.push_back(parse_poly(ring));
        while (is_symbol(";")) {
            lexer_.take();
            if (lexer_.peek().kind == TokenKind::End) return polys; // trailing ';'
            polys.push_back(parse_poly(ring));
        }
        return polys;
    }

    Polynomial parse_poly(const Ring& ring) {
        bool negate = false;
        if (is_symbol("-")) {
            lexer_.take();
            negate = true;
        }
        Polynomial acc = parse_term(ring);
        if (negate) acc = neg(acc);
        while (is_symbol("+") || is_symbol("-")) {
            bool minus = lexer_.take().text == "-";
            Polynomial t = parse_term(ring);
            acc = minus ? sub(acc, t, kCanonical) : add(acc, t, kCanonical);
        }
        return acc;
    }

    Polynomial parse_term(const Ring& ring) {
        Polynomial acc = parse_factor(ring);
        while (is_symbol("*")) {
            lexer_.take();
            acc = mul(acc, parse_factor(ring), kCanonical);
        }
        return acc;
    }

    Polynomial parse_factor(const Ring& ring) {
        Polynomial base = parse_base(ring);
        if (is_symbol("^")) {
            lexer_.take();
            Token t = lexer_.peek();
            if (t.kind != TokenKind::Number) fail("exponent");
            lexer_.take();
            unsigned long e = to_bounded(t, 100000, "exponent");
            base = pow(base, static_cast<std::uint32_t>(e), kCanonical);
        }
        return base;
    }

    Polynomial parse_base(const Ring& ring) {
        const Token& t = lexer_.peek();
        if (t.kind == TokenKind::Number) return Polynomial::constant(ring, parse_rational());
        if (t.kind == TokenKind::Identifier) {
            Token name = lexer_.take();
            auto index = ring.index_of(name.text);
            if (!index)
                throw ParseError(ErrorCode::UnknownVariable, name.pos,
                                 "unknown variable '" + name.text + "'");
            return Polynomial::variable(ring, *index);
        }
        if (is_symbol("(")) {
            lexer_.take();
            Polynomial inner = parse_poly(ring);
            expect_symbol(")");
            return inner;
        }
        fail("number, variable name, or '('");
    }

    Rational parse_rational() {
        Token num = lexer_.take();
        if (is_symbol("/")) {
            Token slash = lexer_.take();
            Token den = lexer_.peek();
            if (den.kind != TokenKind::Number) fail("denominator");
            lexer_.take();
            if (mpz_class(den.text) == 0)
                throw ParseError(ErrorCode::Parse, den.pos, "denominator must be nonzero");
            (void)slash;
            return Rational(mpz_class(num.text), mpz_class(den.text));
        }
        return Rational(mpz_class(num.text));
    }

    unsigned long to_bounded(const Token& t, unsigned long limit, const char* what) {
        mpz_class v(t.text);
        if (v > limit)
            throw ParseError(ErrorCode::Parse, t.pos, std::string(what) + " too large");
        return v.get_ui();
    }

    void expect_keyword(const std::string& word) {
        const Token& t = lexer_.peek();
        if (t.kind != TokenKind::Identifier || t.text != word) fail("'" + word + "'");
        lexer_.take();
    }

    void expect_symbol(const std::string& sym) {
        if (!is_symbol(sym)) fail("'" + sym + "'");
        lexer_.take();
    }

    bool is_symbol(std::string_view sym) const {
        const Token& t = lexer_.peek();
        return t.kind == TokenKind::Symbol && t.text == sym;
    }

    void expect_end() {
        if (lexer_.peek().kind != TokenKind::End) fail("end of input");
    }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = lexer_.peek();
        std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(ErrorCode::Parse, t.pos, "expected " + expected + ", found " + found);
    }

    Lexer lexer_;
};

} // namespace

bool is_reserved_name(std::string_view name) {
    if (name.empty()) return true;
    if (name.front() == '@') return true;
    auto all_digits = [](std::string_view s) {
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (name.substr(0, 6) == "lambda" && all_digits(name.substr(6))) return true;
    if (name.size() >= 2 && name.front() == 'u' && all_digits(name.substr(1))) return true;
    return false;
}

IdealDocument parse_ideal(std::string_view text) {
    std::vector<std::string> labels;
    Parser parser(text, &labels);
    IdealDocument doc = parser.parse_document();
    doc.labels = std::move(labels);
    return doc;
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
    Parser parser(text, nullptr);
    return parser.parse_fragment(ring);
}

} // namespace dualis
