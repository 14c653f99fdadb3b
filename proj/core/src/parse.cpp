#include "sharpdeg/parse.hpp"

#include <cctype>
#include <sstream>

namespace sharpdeg {

namespace {

struct Token {
    enum class Kind { Number, Var, Plus, Minus, Caret, Slash, Colon, Semi, LBracket, RBracket,
                      LParen, RParen, Comma, Equals, Ident, End };
    Kind kind;
    std::string text;
    char var_letter = 0;
    long var_index = -1;
    std::size_t offset = 0;
};

struct Lexer {
    std::string src;
    std::size_t pos = 0;

    explicit Lexer(std::string s) : src(std::move(s)) {}

    void skip_space() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    Token next() {
        skip_space();
        Token t;
        t.offset = pos;
        if (pos >= src.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        // unicode minus sign, three bytes
        if (src.compare(pos, 3, "\xe2\x88\x92") == 0) {
            t.kind = Token::Kind::Minus;
            pos += 3;
            return t;
        }
        char c = src[pos];
        switch (c) {
            case '+': t.kind = Token::Kind::Plus; ++pos; return t;
            case '-': t.kind = Token::Kind::Minus; ++pos; return t;
            case '^': t.kind = Token::Kind::Caret; ++pos; return t;
            case '/': t.kind = Token::Kind::Slash; ++pos; return t;
            case ':': t.kind = Token::Kind::Colon; ++pos; return t;
            case ';': t.kind = Token::Kind::Semi; ++pos; return t;
            case '[': t.kind = Token::Kind::LBracket; ++pos; return t;
            case ']': t.kind = Token::Kind::RBracket; ++pos; return t;
            case '(': t.kind = Token::Kind::LParen; ++pos; return t;
            case ')': t.kind = Token::Kind::RParen; ++pos; return t;
            case ',': t.kind = Token::Kind::Comma; ++pos; return t;
            case '=': t.kind = Token::Kind::Equals; ++pos; return t;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            t.kind = Token::Kind::Number;
            t.text = src.substr(start, pos - start);
            return t;
        }
        if ((c == 'x' || c == 'X' || c == 'z' || c == 'Z') && pos + 1 < src.size() &&
            std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
            t.kind = Token::Kind::Var;
            t.var_letter = c;
            ++pos;
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            t.var_index = std::stol(src.substr(start, pos - start));
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
            t.kind = Token::Kind::Ident;
            t.text = src.substr(start, pos - start);
            return t;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
    }
};

struct RawTerm {
    Rational coeff;
    std::vector<std::pair<long, int>> factors;  // (variable index, exponent)
    std::size_t offset = 0;
};

struct PolyParser {
    Lexer lex;
    Token cur;
    char letter = 0;  // the single variable letter seen
    long max_index = -1;

    explicit PolyParser(const std::string& s) : lex(s) { cur = lex.next(); }

    void advance() { cur = lex.next(); }

    Rational parse_number() {
        if (cur.kind != Token::Kind::Number) throw ParseError("expected a number", cur.offset);
        Rational r(cur.text);
        advance();
        if (cur.kind == Token::Kind::Slash) {
            advance();
            if (cur.kind != Token::Kind::Number)
                throw ParseError("expected a denominator", cur.offset);
            Rational den(cur.text);
            if (sgn(den) == 0) throw ParseError("zero denominator", cur.offset);
            advance();
            r /= den;
        }
        r.canonicalize();
        return r;
    }

    RawTerm parse_term() {
        RawTerm t;
        t.coeff = 1;
        t.offset = cur.offset;
        bool any = false;
        if (cur.kind == Token::Kind::Number) {
            t.coeff = parse_number();
            any = true;
        }
        while (cur.kind == Token::Kind::Var) {
            char l = cur.var_letter;
            if (letter == 0) letter = l;
            if (l != letter)
                throw ParseError(std::string("mixed variable letters '") + letter + "' and '" + l +
                                     "'",
                                 cur.offset);
            long idx = cur.var_index;
            if (l == 'x' && idx < 1) throw ParseError("affine variables start at x1", cur.offset);
            max_index = std::max(max_index, idx);
            advance();
            int e = 1;
            if (cur.kind == Token::Kind::Caret) {
                advance();
                if (cur.kind != Token::Kind::Number)
                    throw ParseError("expected an exponent", cur.offset);
                e = std::stoi(cur.text);
                advance();
            }
            t.factors.emplace_back(idx, e);
            any = true;
        }
        if (!any) throw ParseError("expected a term", cur.offset);
        return t;
    }
};

} // namespace

static ParsedPolynomial parse_polynomial_impl(const std::string& text, int fixed_nvars) {
    PolyParser p(text);
    std::vector<std::pair<Rational, RawTerm>> terms;
    int sign = 1;
    if (p.cur.kind == Token::Kind::Minus) {
        sign = -1;
        p.advance();
    } else if (p.cur.kind == Token::Kind::Plus) {
        p.advance();
    }
    for (;;) {
        RawTerm t = p.parse_term();
        terms.emplace_back(Rational(sign), std::move(t));
        if (p.cur.kind == Token::Kind::End) break;
        if (p.cur.kind == Token::Kind::Plus) sign = 1;
        else if (p.cur.kind == Token::Kind::Minus) sign = -1;
        else throw ParseError("expected '+' or '-'", p.cur.offset);
        p.advance();
    }

    VarStyle style = (p.letter == 'x') ? VarStyle::Affine : VarStyle::Homogeneous;
    int nvars;
    if (p.letter == 0) {
        nvars = fixed_nvars > 0 ? fixed_nvars : 1;  // constants default to one variable
        style = VarStyle::Affine;
    } else if (style == VarStyle::Affine) {
        nvars = static_cast<int>(p.max_index);
    } else {
        nvars = static_cast<int>(p.max_index) + 1;
    }
    if (fixed_nvars > 0) {
        if (nvars > fixed_nvars)
            throw ParseError("variable index exceeds the declared count", 0);
        nvars = fixed_nvars;
    }

    Polynomial out(nvars);
    for (auto& [sgn_c, t] : terms) {
        MultiIndex m(static_cast<std::size_t>(nvars));
        for (auto [idx, e] : t.factors) {
            std::size_t slot = (style == VarStyle::Affine) ? static_cast<std::size_t>(idx - 1)
                                                           : static_cast<std::size_t>(idx);
            if (slot >= m.size()) throw ParseError("unknown variable", t.offset);
            m[slot] += e;
        }
        out.add_term(m, sgn_c * t.coeff);
    }
    return {out, style};
}

ParsedPolynomial parse_polynomial(const std::string& text) { return parse_polynomial_impl(text, 0); }

ParsedPolynomial parse_polynomial(const std::string& text, int nvars) {
    return parse_polynomial_impl(text, nvars);
}

std::string print_polynomial(const Polynomial& p, VarStyle style) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        bool has_vars = m.degree() != 0;
        if (!has_vars || a != 1) {
            os << rational_to_string(a);
            if (has_vars) os << " ";
        }
        bool first_factor = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_factor) os << " ";
            first_factor = false;
            if (style == VarStyle::Affine) os << "x" << (i + 1);
            else os << "X" << i;
            if (m[i] != 1) os << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

MonomialMap parse_map(const std::string& text) {
    Lexer lex(text);
    Token cur = lex.next();
    auto expect = [&](Token::Kind k, const char* what) {
        if (cur.kind != k) throw ParseError(std::string("expected ") + what, cur.offset);
        Token t = cur;
        cur = lex.next();
        return t;
    };
    Token head = expect(Token::Kind::Ident, "'map'");
    if (head.text != "map") throw ParseError("expected 'map'", head.offset);

    auto parse_signature = [&](const char* label) {
        Token key = expect(Token::Kind::Ident, label);
        if (key.text != label) throw ParseError(std::string("expected '") + label + "'", key.offset);
        expect(Token::Kind::Equals, "'='");
        Token q = expect(Token::Kind::Ident, "'Q'");
        if (q.text != "Q") throw ParseError("expected 'Q'", q.offset);
        expect(Token::Kind::LParen, "'('");
        Token a = expect(Token::Kind::Number, "a count");
        expect(Token::Kind::Comma, "','");
        Token b = expect(Token::Kind::Number, "a count");
        expect(Token::Kind::RParen, "')'");
        return HyperquadricSignature{std::stoi(a.text), std::stoi(b.text)};
    };

    MonomialMap f;
    f.source = parse_signature("source");
    f.target = parse_signature("target");
    const int nv = f.source.pos + f.source.neg + 1;

    expect(Token::Kind::LBracket, "'['");
    for (;;) {
        MapComponent comp;
        comp.exponent = MultiIndex(static_cast<std::size_t>(nv));
        bool any = false;
        while (cur.kind == Token::Kind::Var) {
            if (cur.var_letter != 'z' && cur.var_letter != 'Z')
                throw ParseError("map components use z variables", cur.offset);
            long idx = cur.var_index;
            if (idx >= nv) throw ParseError("variable index exceeds the source dimension", cur.offset);
            cur = lex.next();
            int e = 1;
            if (cur.kind == Token::Kind::Caret) {
                cur = lex.next();
                Token num = expect(Token::Kind::Number, "an exponent");
                e = std::stoi(num.text);
            }
            comp.exponent[static_cast<std::size_t>(idx)] += e;
            any = true;
        }
        if (!any) throw ParseError("expected a monomial", cur.offset);
        expect(Token::Kind::Colon, "':'");
        int slot_sign = 1;
        if (cur.kind == Token::Kind::Plus) cur = lex.next();
        else if (cur.kind == Token::Kind::Minus) {
            slot_sign = -1;
            cur = lex.next();
        }
        Token num = expect(Token::Kind::Number, "a squared magnitude");
        Rational mag(num.text);
        if (cur.kind == Token::Kind::Slash) {
            cur = lex.next();
            Token den = expect(Token::Kind::Number, "a denominator");
            Rational d(den.text);
            if (sgn(d) == 0) throw ParseError("zero denominator", den.offset);
            mag /= d;
        }
        mag.canonicalize();
        if (sgn(mag) <= 0) throw ParseError("squared magnitude must be positive", num.offset);
        comp.coeff_sq = mag;
        comp.negative_slot = slot_sign < 0;
        f.components.push_back(std::move(comp));
        if (cur.kind == Token::Kind::Semi) {
            cur = lex.next();
            continue;
        }
        break;
    }
    expect(Token::Kind::RBracket, "']'");
    if (cur.kind != Token::Kind::End) throw ParseError("trailing input", cur.offset);
    f.validate();
    return f;
}

std::string print_map(const MonomialMap& f) {
    std::ostringstream os;
    os << "map source=Q(" << f.source.pos << "," << f.source.neg << ")";
    os << " target=Q(" << f.target.pos << "," << f.target.neg << ") [ ";
    bool first = true;
    for (const MapComponent& c : f.components) {
        if (!first) os << " ; ";
        first = false;
        bool any = false;
        for (std::size_t i = 0; i < c.exponent.size(); ++i) {
            if (c.exponent[i] == 0) continue;
            if (any) os << " ";
            any = true;
            os << "z" << i;
            if (c.exponent[i] != 1) os << "^" << c.exponent[i];
        }
        if (!any) os << "z0^0";
        os << " : " << (c.negative_slot ? "-" : "+") << rational_to_string(c.coeff_sq);
    }
    os << " ]";
    return os.str();
}

} // namespace sharpdeg
