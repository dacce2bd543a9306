#include "etaq/parse.hpp"

#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace etaq {

namespace {

using Expo = std::array<int, 4>; // exponents of x0, x1, y0, y1
using Poly4 = std::map<Expo, Scalar>;

[[noreturn]] void parse_fail(size_t pos, const std::string& msg) {
    fail(ErrorKind::ParseError, "parse error at position " + std::to_string(pos) + ": " + msg);
}

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string read_digits() {
        skip_ws();
        const size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) parse_fail(start, "expected a number");
        return text.substr(start, pos - start);
    }

    unsigned long read_natural() {
        const size_t at = pos;
        const std::string digits = read_digits();
        if (digits.size() > 6) parse_fail(at, "number too large here");
        return std::stoul(digits);
    }
};

struct Parser {
    Lexer lex;
    const FieldSpec& field;

    Poly4 constant(const Scalar& s) const {
        Poly4 p;
        if (!s.is_zero()) p.emplace(Expo{0, 0, 0, 0}, s);
        return p;
    }

    static void add_into(Poly4& a, const Poly4& b, bool negate) {
        for (const auto& [e, c] : b) {
            auto it = a.find(e);
            if (it == a.end()) {
                a.emplace(e, negate ? -c : c);
            } else {
                it->second = negate ? it->second - c : it->second + c;
                if (it->second.is_zero()) a.erase(it);
            }
        }
    }

    Poly4 mul(const Poly4& a, const Poly4& b) const {
        Poly4 r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                const Scalar c = ca * cb;
                auto it = r.find(e);
                if (it == r.end()) {
                    if (!c.is_zero()) r.emplace(e, c);
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
        return r;
    }

    std::optional<Scalar> as_constant(const Poly4& p) const {
        if (p.empty()) return Scalar::zero(field);
        if (p.size() == 1 && p.begin()->first == Expo{0, 0, 0, 0}) return p.begin()->second;
        return std::nullopt;
    }

    Poly4 parse_expr() {
        bool neg = lex.accept('-');
        Poly4 acc = parse_term();
        if (neg) {
            Poly4 z;
            add_into(z, acc, true);
            acc = std::move(z);
        }
        while (true) {
            if (lex.accept('+')) {
                add_into(acc, parse_term(), false);
            } else if (lex.accept('-')) {
                add_into(acc, parse_term(), true);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly4 parse_term() {
        Poly4 acc = parse_factor();
        while (true) {
            if (lex.accept('*')) {
                acc = mul(acc, parse_factor());
            } else if (lex.accept('/')) {
                const size_t at = lex.pos;
                auto d = as_constant(parse_factor());
                if (!d) parse_fail(at, "division by a non-constant expression");
                if (d->is_zero()) parse_fail(at, "division by zero");
                acc = mul(acc, constant(d->inverse()));
            } else {
                break;
            }
        }
        return acc;
    }

    Poly4 parse_factor() {
        Poly4 base = parse_atom();
        if (lex.accept('^')) {
            const unsigned long e = lex.read_natural();
            Poly4 acc = constant(Scalar::one(field));
            for (unsigned long i = 0; i < e; ++i) acc = mul(acc, base);
            return acc;
        }
        return base;
    }

    Poly4 parse_atom() {
        lex.skip_ws();
        const size_t at = lex.pos;
        const char c = lex.peek();
        if (c == '(') {
            lex.accept('(');
            Poly4 inner = parse_expr();
            if (!lex.accept(')')) parse_fail(lex.pos, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string digits = lex.read_digits();
            return constant(Scalar::of_mpq(field, mpq_class(mpz_class(digits, 10))));
        }
        if (c == 'x' || c == 'y') {
            lex.accept(c);
            const char idx = lex.pos < lex.text.size() ? lex.text[lex.pos] : '\0';
            if (idx != '0' && idx != '1') parse_fail(at, "expected x0, x1, y0 or y1");
            ++lex.pos;
            Expo e{0, 0, 0, 0};
            e[static_cast<size_t>((c == 'y') ? 2 : 0) + static_cast<size_t>(idx - '0')] = 1;
            Poly4 p;
            p.emplace(e, Scalar::one(field));
            return p;
        }
        if (c == 'z') {
            lex.accept('z');
            const unsigned long m = lex.read_natural();
            if (!field.is_cyclotomic() || field.zeta_order() != m)
                parse_fail(at, "z" + std::to_string(m) + " requires field Q(z" + std::to_string(m) +
                                   "), got " + field.name());
            return constant(Scalar::zeta(field));
        }
        parse_fail(at, "unexpected character");
    }
};

std::string monomial_string(const Expo& e) {
    static const char* names[4] = {"x0", "x1", "y0", "y1"};
    std::string s;
    for (size_t v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

} // namespace

BiForm parse_biform(const std::string& text, const FieldSpec& field,
                    std::optional<std::pair<int, int>> expected_bidegree) {
    Parser parser{Lexer{text}, field};
    Poly4 p = parser.parse_expr();
    if (!parser.lex.eof()) parse_fail(parser.lex.pos, "trailing input");

    if (p.empty()) {
        const auto bd = expected_bidegree.value_or(std::make_pair(0, 0));
        return BiForm::zero(field, bd.first, bd.second);
    }
    const Expo first = p.begin()->first;
    const int d1 = first[0] + first[1];
    const int d2 = first[2] + first[3];
    for (const auto& [e, c] : p) {
        (void)c;
        if (e[0] + e[1] != d1 || e[2] + e[3] != d2)
            fail(ErrorKind::NotBihomogeneous,
                 "monomials " + monomial_string(first) + " and " + monomial_string(e) +
                     " have different bidegrees");
    }
    if (expected_bidegree && (expected_bidegree->first != d1 || expected_bidegree->second != d2))
        fail(ErrorKind::ParseError,
             "expected bidegree (" + std::to_string(expected_bidegree->first) + "," +
                 std::to_string(expected_bidegree->second) + "), parsed (" + std::to_string(d1) +
                 "," + std::to_string(d2) + ")");

    BiForm h(field, d1, d2);
    for (const auto& [e, c] : p) h.set_coeff(e[0], e[2], c);
    return h;
}

Scalar parse_scalar(const std::string& text, const FieldSpec& field) {
    Parser parser{Lexer{text}, field};
    Poly4 p = parser.parse_expr();
    if (!parser.lex.eof()) parse_fail(parser.lex.pos, "trailing input");
    auto c = parser.as_constant(p);
    if (!c) fail(ErrorKind::ParseError, "expected a constant expression, found variables");
    return *c;
}

std::string to_expression(const BiForm& h) {
    std::ostringstream out;
    bool first = true;
    for (int i = h.deg_x(); i >= 0; --i) {
        for (int j = h.deg_y(); j >= 0; --j) {
            const Scalar& c = h.coeff(i, j);
            if (c.is_zero()) continue;
            std::string cs = c.to_string();
            const bool composite = cs.find_first_of("+-", 1) != std::string::npos;
            bool negated = false;
            if (!composite && cs.size() > 1 && cs[0] == '-') {
                negated = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (negated) out << "-";
                first = false;
            } else {
                out << (negated ? " - " : " + ");
            }
            const Expo e{i, h.deg_x() - i, j, h.deg_y() - j};
            const std::string mono = monomial_string(e);
            if (mono.empty()) {
                out << (composite ? "(" + cs + ")" : cs);
            } else if (composite) {
                out << "(" << cs << ")*" << mono;
            } else if (cs == "1") {
                out << mono;
            } else {
                out << cs << "*" << mono;
            }
        }
    }
    if (first) return "0";
    return out.str();
}

} // namespace etaq
