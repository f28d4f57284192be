// Copyright 2026 The toric authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIC_PARSE_HPP
#define TORIC_PARSE_HPP

/// Textual polynomial format and its canonical renderer.
///
/// Grammar (one polynomial per line in .poly files, '#' comments to end of
/// line, blank lines ignored):
///
///   expression := term (('+'|'-') term)*
///   term       := factor ('*' factor)*
///   factor     := INT | VAR | VAR '^' INT | '(' expression ')' | '-' factor
///   VAR        := [A-Za-z_][A-Za-z0-9_]*
///   INT        := [0-9]+
///
/// Implicit multiplication and division are rejected. Variable order is the
/// order of first textual occurrence, which makes parses fully deterministic.

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/poly.hpp"
#include "toric/system.hpp"

namespace toric {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

namespace detail {

struct Token {
    enum Kind { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

inline std::vector<Token> tokenize(const std::string& text, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        int col = static_cast<int>(i) + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;  // comment to end of line
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Int, text.substr(i, j - i), line_no, col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            out.push_back({Token::Var, text.substr(i, j - i), line_no, col});
            i = j;
        } else {
            Token::Kind k;
            switch (c) {
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                case '*': k = Token::Star; break;
                case '^': k = Token::Caret; break;
                case '(': k = Token::LParen; break;
                case ')': k = Token::RParen; break;
                case '/':
                    throw ParseError(line_no, col, "division is not supported");
                default:
                    throw ParseError(line_no, col,
                                     std::string("unexpected character '") + c + "'");
            }
            out.push_back({k, std::string(1, c), line_no, col});
            ++i;
        }
    }
    out.push_back({Token::End, "", line_no, static_cast<int>(text.size()) + 1});
    return out;
}

inline void collect_variables(const std::vector<Token>& tokens,
                              std::vector<std::string>& names) {
    for (const Token& t : tokens) {
        if (t.kind != Token::Var) continue;
        bool known = false;
        for (const std::string& n : names)
            if (n == t.text) {
                known = true;
                break;
            }
        if (!known) names.push_back(t.text);
    }
}

class PolyParser {
  public:
    PolyParser(const std::vector<Token>& tokens, ContextPtr ctx)
        : tokens_(tokens), ctx_(std::move(ctx)) {}

    Polynomial parse() {
        Polynomial f = expression();
        expect(Token::End, "end of input");
        return f;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& message) {
        throw ParseError(t.line, t.col, message);
    }

    void expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) fail(peek(), "expected " + what);
    }

    Polynomial expression() {
        Polynomial acc = term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = advance().kind == Token::Minus;
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == Token::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        const Token& t = advance();
        switch (t.kind) {
            case Token::Int: {
                Integer z(t.text, 10);
                return Polynomial::constant(ctx_, FieldElement::from_integer(z, ctx_->field()));
            }
            case Token::Var: {
                int v = ctx_->index_of(t.text);
                if (v < 0) fail(t, "unknown variable '" + t.text + "'");
                std::uint32_t e = 1;
                if (peek().kind == Token::Caret) {
                    advance();
                    if (peek().kind != Token::Int)
                        fail(peek(), "exponent must be a non-negative integer literal");
                    const Token& et = advance();
                    Integer z(et.text, 10);
                    if (z > 0xffffffffL) fail(et, "exponent too large");
                    e = static_cast<std::uint32_t>(z.get_ui());
                }
                return Polynomial::variable(ctx_, v, e);
            }
            case Token::Minus:
                return -factor();
            case Token::LParen: {
                Polynomial f = expression();
                expect(Token::RParen, "')'");
                advance();
                return f;
            }
            case Token::End:
                fail(t, "unexpected end of input");
            default:
                fail(t, "unexpected '" + t.text + "'");
        }
    }

    const std::vector<Token>& tokens_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses into an existing ambient context; unknown variables are errors.
inline Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx,
                                   int line_no = 1) {
    std::vector<detail::Token> tokens = detail::tokenize(text, line_no);
    return detail::PolyParser(tokens, ctx).parse();
}

/// Parses standalone text; the ambient variables are those occurring in the
/// text, ordered by first occurrence.
inline Polynomial parse_polynomial(const std::string& text, const FieldSpec& field,
                                   OrderKind kind = OrderKind::grevlex) {
    std::vector<detail::Token> tokens = detail::tokenize(text, 1);
    std::vector<std::string> names;
    detail::collect_variables(tokens, names);
    ContextPtr ctx = Context::make(field, std::move(names), kind);
    return detail::PolyParser(tokens, ctx).parse();
}

/// A .poly file as read from disk: the model id (file stem) and the
/// non-comment polynomial source lines with their line numbers.
struct SystemFile {
    std::string model_id;
    FieldSpec field;
    std::vector<std::pair<int, std::string>> lines;
};

inline std::string model_id_from_path(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    std::string stem = (dot == std::string::npos || dot == 0) ? base : base.substr(0, dot);
    return stem.empty() ? base : stem;
}

inline SystemFile read_system_file(const std::string& path, const FieldSpec& field) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    SystemFile sf{model_id_from_path(path), field, {}};
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        sf.lines.emplace_back(no, body);
    }
    if (in.bad()) throw std::runtime_error("i/o error reading " + path);
    return sf;
}

/// Parses all lines of a system file into one shared context. Variable order
/// is first occurrence across the whole file; zero polynomials are filtered
/// and the context shrinks to the variables still occurring.
inline PolySystem parse_system(const SystemFile& sf, OrderKind kind = OrderKind::grevlex) {
    std::vector<std::vector<detail::Token>> token_lines;
    std::vector<std::string> names;
    for (const auto& [no, text] : sf.lines) {
        token_lines.push_back(detail::tokenize(text, no));
        detail::collect_variables(token_lines.back(), names);
    }
    ContextPtr ctx = Context::make(sf.field, std::move(names), kind);
    std::vector<Polynomial> polys;
    polys.reserve(token_lines.size());
    for (const auto& tokens : token_lines)
        polys.push_back(detail::PolyParser(tokens, ctx).parse());
    return PolySystem::from_polynomials(ctx, std::move(polys));
}

inline PolySystem parse_system_file(const std::string& path, const FieldSpec& field,
                                    OrderKind kind = OrderKind::grevlex) {
    return parse_system(read_system_file(path, field), kind);
}

/// Canonical text form: terms in the active order, explicit '*', '^' only for
/// exponents > 1. Inverse of parse_polynomial for the same context. Requires
/// integral coefficients (the grammar has no fraction syntax).
inline std::string render(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const ContextPtr& ctx = f.context();
    std::ostringstream out;
    bool first = true;
    for (const Term& t : f.terms()) {
        if (!t.coeff.is_integral())
            throw std::domain_error("render requires integral coefficients");
        bool negative;
        std::string mag;
        if (ctx->field().is_rational()) {
            const Integer& num = t.coeff.rational().get_num();
            negative = num < 0;
            mag = Integer(abs(num)).get_str();
        } else {
            negative = false;
            mag = std::to_string(t.coeff.residue());
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != "1" || t.mono.is_one()) factors.push_back(mag);
        for (std::size_t j = 0; j < ctx->size(); ++j) {
            std::uint32_t e = t.mono.exp(j);
            if (e == 0) continue;
            factors.push_back(e == 1 ? ctx->name(j)
                                     : ctx->name(j) + "^" + std::to_string(e));
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) out << "*";
            out << factors[k];
        }
    }
    return out.str();
}

/// Renders every polynomial of a system, one per line.
inline std::string render_system(const PolySystem& sys) {
    std::ostringstream out;
    for (const Polynomial& f : sys.polynomials()) out << render(f) << "\n";
    return out.str();
}

}  // namespace toric

#endif  // TORIC_PARSE_HPP
