#include "qkgr/classparse.hpp"

#include "qkgr/kring.hpp"

#include <cctype>

namespace qkgr {

namespace {

struct Parser {
    const std::string& s;
    int n;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected integer", start);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    LaurentPoly atom() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of expression", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            LaurentPoly e = sum();
            if (!eat(')')) throw parse_error("expected ')'", pos);
            return e;
        }
        if (c == 'P') {
            std::size_t start = pos;
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                throw parse_error("expected variable index after P", start);
            long idx = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                idx = idx * 10 + (s[pos] - '0');
                ++pos;
            }
            if (idx < 1 || idx > n) throw parse_error("variable index out of range", start);
            return LaurentPoly::var(pvar(static_cast<int>(idx)));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LaurentPoly(BigRat(integer()));
        throw parse_error("unexpected character", pos);
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        if (eat('^')) {
            long e = integer();
            if (e >= 0) return base.pow(static_cast<int>(e));
            // Laurent inverse of a single monomial only
            if (base.size() != 1) throw parse_error("negative power of a non-monomial", pos);
            const auto& [exps, coeff] = *base.terms().begin();
            Mono m(coeff, exps);
            return LaurentPoly(m.pow(static_cast<int>(e)));
        }
        return base;
    }

    LaurentPoly unary() {
        if (eat('-')) return -unary();
        return power();
    }

    LaurentPoly product() {
        LaurentPoly acc = unary();
        while (peek() == '*') {
            eat('*');
            acc = acc * unary();
        }
        return acc;
    }

    LaurentPoly sum() {
        LaurentPoly acc = product();
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                acc = acc + product();
            } else if (c == '-') {
                eat('-');
                acc = acc - product();
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

LaurentPoly parse_class_expr(const std::string& text, int n) {
    Parser p{text, n};
    LaurentPoly e = p.sum();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    return e;
}

}  // namespace qkgr
