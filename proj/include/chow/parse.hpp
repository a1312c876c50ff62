#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace chow {

// Ideal file: optional "ring: x, y, z" header, one polynomial per line,
// '#' starts a comment. Without a header, variables are inferred from usage
// in first-appearance order.
struct IdealFile {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

namespace detail {

struct Token {
    enum Kind { ident, number, plus, minus, star, slash, caret, lparen, rparen, end } kind;
    std::string text;
    int line;
    int col;
};

class LineLexer {
  public:
    LineLexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
        int col = (int)pos_ + 1;
        if (pos_ >= s_.size() || s_[pos_] == '#') {
            tok_ = {Token::end, "", line_, col};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c)) {
            std::size_t j = pos_;
            while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
            tok_ = {Token::number, s_.substr(pos_, j - pos_), line_, col};
            pos_ = j;
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t j = pos_;
            while (j < s_.size() && (std::isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
            tok_ = {Token::ident, s_.substr(pos_, j - pos_), line_, col};
            pos_ = j;
            return;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '*': k = Token::star; break;
            case '/': k = Token::slash; break;
            case '^': k = Token::caret; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            default:
                throw parse_error(line_, col, std::string("unexpected character '") + c + "'");
        }
        tok_ = {k, std::string(1, c), line_, col};
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
    Token tok_;
};

class PolyParser {
  public:
    PolyParser(LineLexer& lx, RingPtr ring) : lx_(lx), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expr();
        const Token& t = lx_.peek();
        if (t.kind != Token::end)
            throw parse_error(t.line, t.col, "unexpected '" + t.text + "' after expression");
        return p;
    }

  private:
    Polynomial expr() {
        int sign = 1;
        while (lx_.peek().kind == Token::plus || lx_.peek().kind == Token::minus) {
            if (lx_.take().kind == Token::minus) sign = -sign;
        }
        Polynomial p = term() * Rat(sign);
        while (lx_.peek().kind == Token::plus || lx_.peek().kind == Token::minus) {
            bool neg = lx_.take().kind == Token::minus;
            Polynomial q = term();
            p += neg ? -q : q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            Token::Kind k = lx_.peek().kind;
            if (k == Token::star) {
                lx_.take();
                p = p * factor();
            } else if (k == Token::slash) {
                Token t = lx_.take();
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw parse_error(t.line, t.col, "division only by nonzero constants");
                p = p * (Rat(1) / d.terms().begin()->second);
            } else if (k == Token::ident || k == Token::number || k == Token::lparen) {
                p = p * factor();  // juxtaposition: the '*' is optional
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        Token t = lx_.take();
        Polynomial base(ring_);
        switch (t.kind) {
            case Token::minus:
                return -factor();
            case Token::number:
                base = Polynomial::constant(ring_, Rat(t.text));
                break;
            case Token::ident: {
                if (!ring_->has(t.text))
                    throw parse_error(t.line, t.col, "unknown variable '" + t.text + "'");
                base = Polynomial::variable(ring_, ring_->index_of(t.text));
                break;
            }
            case Token::lparen: {
                base = expr();
                Token r = lx_.take();
                if (r.kind != Token::rparen) throw parse_error(r.line, r.col, "expected ')'");
                break;
            }
            default:
                throw parse_error(t.line, t.col, "expected a term, got '" + t.text + "'");
        }
        if (lx_.peek().kind == Token::caret) {
            lx_.take();
            Token e = lx_.take();
            if (e.kind != Token::number) throw parse_error(e.line, e.col, "expected exponent");
            base = base.pow(std::stoul(e.text));
        }
        return base;
    }

    LineLexer& lx_;
    RingPtr ring_;
};

inline bool is_ring_header(const std::string& line, std::string& rest) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    if (line.compare(i, 5, "ring:") != 0) return false;
    rest = line.substr(i + 5);
    return true;
}

inline std::vector<std::string> split_header_vars(const std::string& rest, int line_no) {
    std::vector<std::string> names;
    std::string cur;
    int col = 1;
    auto flush = [&](int at) {
        if (cur.empty()) throw parse_error(line_no, at, "empty variable name in ring header");
        names.push_back(cur);
        cur.clear();
    };
    for (std::size_t i = 0; i <= rest.size(); ++i, ++col) {
        char c = i < rest.size() ? rest[i] : ',';
        if (c == ',') {
            if (i == rest.size() && cur.empty() && !names.empty()) break;
            flush(col);
        } else if (std::isalnum((unsigned char)c) || c == '_') {
            cur += c;
        } else if (!std::isspace((unsigned char)c)) {
            throw parse_error(line_no, col, std::string("bad character '") + c + "' in ring header");
        }
    }
    return names;
}

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line_no = 1) {
    detail::LineLexer lx(text, line_no);
    return detail::PolyParser(lx, ring).parse();
}

inline IdealFile parse_ideal_file(const std::string& text) {
    std::vector<std::pair<int, std::string>> poly_lines;
    std::optional<std::vector<std::string>> header;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        ++line_no;
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        std::string rest;
        bool blank = true;
        for (char c : line) {
            if (c == '#') break;
            if (!std::isspace((unsigned char)c)) blank = false;
        }
        if (blank) continue;
        if (detail::is_ring_header(line, rest)) {
            if (header) throw parse_error(line_no, 1, "duplicate ring header");
            if (!poly_lines.empty())
                throw parse_error(line_no, 1, "ring header must precede polynomials");
            header = detail::split_header_vars(rest, line_no);
            continue;
        }
        poly_lines.emplace_back(line_no, line);
    }

    std::vector<std::string> vars;
    if (header) {
        vars = *header;
    } else {
        // Infer variables in first-appearance order.
        for (const auto& [ln, line] : poly_lines) {
            detail::LineLexer lx(line, ln);
            while (lx.peek().kind != detail::Token::end) {
                auto t = lx.take();
                if (t.kind == detail::Token::ident) {
                    bool seen = false;
                    for (const auto& v : vars) seen = seen || v == t.text;
                    if (!seen) vars.push_back(t.text);
                }
            }
        }
    }
    IdealFile f;
    f.ring = make_ring(vars);
    for (const auto& [ln, line] : poly_lines) f.gens.push_back(parse_polynomial(line, f.ring, ln));
    return f;
}

inline std::string serialize_ideal_file(const IdealFile& f) {
    std::string out = "ring:";
    for (std::size_t i = 0; i < f.ring->vars.size(); ++i)
        out += (i ? ", " : " ") + f.ring->vars[i];
    out += "\n";
    for (const auto& g : f.gens) out += g.to_string() + "\n";
    return out;
}

}  // namespace chow
