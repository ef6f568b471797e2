#pragma once

// Text input: polynomial expressions, ideal files, algebra files.
//
// Polynomial grammar (explicit '*' between factors):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := number | variable | '(' expr ')'
// Numbers are integer literals, optionally "a/b" fractions so printed
// polynomials parse back unchanged.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "local_algebra.hpp"
#include "polynomial.hpp"

namespace jetcalc {

inline constexpr int kMaxExponent = 1000000;

namespace detail {

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars,
               FieldSpec field, std::size_t line)
        : text_(text), vars_(vars), field_(field), line_(line) {
        for (std::size_t i = 0; i < vars.size(); ++i) var_index_[vars[i]] = i;
        next_token();
    }

    Polynomial parse() {
        Polynomial p = parse_expr();
        if (tok_.kind != Token::Kind::end) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, tok_.pos);
    }

    void next_token() {
        while (cursor_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[cursor_])))
            ++cursor_;
        tok_.pos = cursor_;
        if (cursor_ >= text_.size()) {
            tok_ = {Token::Kind::end, "", cursor_};
            return;
        }
        char c = text_[cursor_];
        auto single = [&](Token::Kind k) {
            tok_ = {k, std::string(1, c), cursor_};
            ++cursor_;
        };
        switch (c) {
            case '+': single(Token::Kind::plus); return;
            case '-': single(Token::Kind::minus); return;
            case '*': single(Token::Kind::star); return;
            case '^': single(Token::Kind::caret); return;
            case '(': single(Token::Kind::lparen); return;
            case ')': single(Token::Kind::rparen); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = cursor_;
            while (cursor_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[cursor_])))
                ++cursor_;
            // Fraction literal "a/b" (no spaces around the slash).
            if (cursor_ < text_.size() && text_[cursor_] == '/' && cursor_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[cursor_ + 1]))) {
                ++cursor_;
                while (cursor_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[cursor_])))
                    ++cursor_;
            }
            tok_ = {Token::Kind::number, text_.substr(start, cursor_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = cursor_;
            while (cursor_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[cursor_])) ||
                    text_[cursor_] == '_'))
                ++cursor_;
            tok_ = {Token::Kind::ident, text_.substr(start, cursor_ - start), start};
            return;
        }
        tok_ = {Token::Kind::end, std::string(1, c), cursor_};
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            bool minus = tok_.kind == Token::Kind::minus;
            next_token();
            Polynomial q = parse_term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (tok_.kind == Token::Kind::star) {
            next_token();
            p = p * parse_factor();
        }
        return p;
    }

    Polynomial parse_factor() {
        if (tok_.kind == Token::Kind::minus) {
            next_token();
            return -parse_factor();
        }
        Polynomial p = parse_atom();
        if (tok_.kind == Token::Kind::caret) {
            next_token();
            if (tok_.kind != Token::Kind::number) fail("expected integer exponent after '^'");
            if (tok_.text.find('/') != std::string::npos) fail("exponent must be an integer");
            if (tok_.text.size() > 7) fail("exponent overflow");
            long long e = std::stoll(tok_.text);
            if (e > kMaxExponent) fail("exponent overflow");
            next_token();
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    Polynomial parse_atom() {
        switch (tok_.kind) {
            case Token::Kind::number: {
                auto v = parse_rational(tok_.text);
                if (!v) fail("malformed number literal");
                next_token();
                return Polynomial::constant(vars_, field_, *v);
            }
            case Token::Kind::ident: {
                auto it = var_index_.find(tok_.text);
                if (it == var_index_.end()) fail("unknown variable '" + tok_.text + "'");
                next_token();
                return Polynomial::variable(vars_, field_, it->second);
            }
            case Token::Kind::lparen: {
                next_token();
                Polynomial p = parse_expr();
                if (tok_.kind != Token::Kind::rparen) fail("expected ')'");
                next_token();
                return p;
            }
            default:
                fail("expected a number, variable, or '('");
        }
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    FieldSpec field_;
    std::size_t line_;
    std::map<std::string, std::size_t> var_index_;
    std::size_t cursor_ = 0;
    Token tok_{Token::Kind::end, "", 0};
};

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_names(const std::string& s, std::size_t line) {
    std::vector<std::string> names;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string name = trim(item);
        if (name.empty()) throw ParseError("empty name in list", line, 0);
        for (char c : name)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw ParseError("invalid name '" + name + "'", line, 0);
        if (std::isdigit(static_cast<unsigned char>(name.front())))
            throw ParseError("name '" + name + "' may not start with a digit", line, 0);
        names.push_back(name);
    }
    if (names.empty()) throw ParseError("expected a comma-separated name list", line, 0);
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw ParseError("duplicate name '" + names[i] + "'", line, 0);
    return names;
}

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& vars, FieldSpec field,
                                   std::size_t line = 0) {
    field.validate();
    return detail::PolyParser(text, vars, field, line).parse();
}

// Ideal file: "vars: x,y", "char: 0", then one polynomial per line.
// '#' lines and blank lines are skipped.  char_override, when given,
// replaces the file's characteristic before any polynomial is parsed.
inline IdealPresentation parse_ideal_text(
    const std::string& text, std::optional<std::uint32_t> char_override = std::nullopt) {
    std::vector<std::string> vars;
    bool have_vars = false;
    FieldSpec field;
    if (char_override) {
        field.characteristic = *char_override;
        field.validate();
    }
    std::vector<Polynomial> gens;

    std::stringstream ss(text);
    std::string raw;
    std::size_t line = 0;
    for (; std::getline(ss, raw); ++line) {
        std::string s = detail::trim(raw);
        if (s.empty() || s.front() == '#') continue;
        if (s.rfind("vars:", 0) == 0) {
            if (have_vars) throw ParseError("duplicate vars line", line, 0);
            vars = detail::split_names(s.substr(5), line);
            have_vars = true;
            continue;
        }
        if (s.rfind("char:", 0) == 0) {
            if (!gens.empty())
                throw ParseError("char line must precede the polynomials", line, 0);
            std::string v = detail::trim(s.substr(5));
            if (char_override) continue;
            try {
                unsigned long p = std::stoul(v);
                if (p > 0x7fffffffUL) throw std::out_of_range("p");
                field.characteristic = static_cast<std::uint32_t>(p);
            } catch (const std::exception&) {
                throw ParseError("invalid characteristic '" + v + "'", line, 0);
            }
            field.validate();
            continue;
        }
        if (!have_vars)
            throw ParseError("polynomial before the vars line", line, 0);
        gens.push_back(parse_polynomial(s, vars, field, line));
    }
    if (!have_vars) throw ParseError("missing vars line", 0, 0);
    IdealPresentation ideal{vars, field, std::move(gens)};
    ideal.validate();
    return ideal;
}

// Algebra file: "algvars: s,t" then either "relations: s^2, t^3" or
// "power: 3" (the latter meaning all monomials of that total degree).
inline LocalAlgebra parse_algebra_text(const std::string& text) {
    std::vector<std::string> gens;
    bool have_gens = false;
    std::vector<Exps> relations;
    std::optional<int> power;

    std::stringstream ss(text);
    std::string raw;
    std::size_t line = 0;
    for (; std::getline(ss, raw); ++line) {
        std::string s = detail::trim(raw);
        if (s.empty() || s.front() == '#') continue;
        if (s.rfind("algvars:", 0) == 0) {
            if (have_gens) throw ParseError("duplicate algvars line", line, 0);
            gens = detail::split_names(s.substr(8), line);
            have_gens = true;
            continue;
        }
        if (s.rfind("relations:", 0) == 0) {
            if (!have_gens) throw ParseError("relations before the algvars line", line, 0);
            std::stringstream rs(s.substr(10));
            std::string item;
            while (std::getline(rs, item, ',')) {
                std::string mono = detail::trim(item);
                if (mono.empty()) continue;
                Polynomial p = parse_polynomial(mono, gens, FieldSpec{}, line);
                if (p.terms().size() != 1 || p.terms().begin()->second != 1)
                    throw ParseError("relation '" + mono + "' is not a monomial", line, 0);
                relations.push_back(p.terms().begin()->first);
            }
            continue;
        }
        if (s.rfind("power:", 0) == 0) {
            if (!have_gens) throw ParseError("power before the algvars line", line, 0);
            try {
                power = std::stoi(detail::trim(s.substr(6)));
            } catch (const std::exception&) {
                throw ParseError("invalid power", line, 0);
            }
            if (*power < 1) throw ParseError("power must be >= 1", line, 0);
            continue;
        }
        throw ParseError("unrecognized line '" + s + "'", line, 0);
    }
    if (!have_gens) throw ParseError("missing algvars line", 0, 0);
    if (power) {
        if (!relations.empty())
            throw ParseError("give either relations or power, not both", 0, 0);
        LocalAlgebra model = fat_point_algebra(static_cast<int>(gens.size()), *power);
        return make_local_algebra(gens, model.relations);
    }
    if (relations.empty()) throw ParseError("missing relations or power line", 0, 0);
    return make_local_algebra(gens, std::move(relations));
}

}  // namespace jetcalc
