#pragma once

// Text parser and printer for polynomial expressions.
//
// Grammar: terms joined by '+' and '-'; a term is an optional decimal
// coefficient, an optional '*', then variables with optional '^' integer
// exponents. Whitespace is insignificant.

#include <cctype>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace socle {

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const PrimeField& field,
               const std::vector<std::string>& names)
        : s_(text), field_(field), names_(names) {}

    Polynomial parse() {
        Polynomial acc(field_, names_.size());
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        acc = acc + parse_term(neg);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = get();
            if (c != '+' && c != '-')
                fail(std::string("expected '+' or '-', found '") + c + "'");
            acc = acc + parse_term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    Polynomial parse_term(bool negate) {
        skip_ws();
        fp_t coeff = 1;
        bool saw_anything = false;
        if (std::isdigit(peek())) {
            coeff = field_.reduce(static_cast<long long>(parse_uint(false)));
            saw_anything = true;
            skip_ws();
            if (peek() == '*') {
                get();
                skip_ws();
                if (!std::isalpha(peek()) && peek() != '_')
                    fail("expected a variable after '*'");
            }
        }
        std::vector<exp_t> exps(names_.size(), 0);
        while (std::isalpha(peek()) || peek() == '_') {
            std::size_t v = parse_variable();
            exp_t e = 1;
            skip_ws();
            if (peek() == '^') {
                get();
                skip_ws();
                if (!std::isdigit(peek())) fail("expected an exponent after '^'");
                e = static_cast<exp_t>(parse_uint(true));
            }
            exps[v] += e;
            saw_anything = true;
            skip_ws();
            if (peek() == '*') {
                get();
                skip_ws();
                if (!std::isalpha(peek()) && peek() != '_')
                    fail("expected a variable after '*'");
            }
        }
        if (!saw_anything) fail("expected a term");
        if (negate) coeff = field_.neg(coeff);
        return Polynomial::term(field_, Monomial(std::move(exps)), coeff);
    }

    std::size_t parse_variable() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(s_[pos_]) || s_[pos_] == '_')) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        fail("unknown variable '" + name + "'");
        return 0;
    }

    std::uint64_t parse_uint(bool is_exponent) {
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(s_[pos_])) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (1ull << 31))
                fail(is_exponent ? "exponent overflow (> 2^31)"
                                 : "coefficient too large");
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("parse error at position " + std::to_string(pos_) + " in \"" +
                          s_ + "\": " + msg);
    }

    const std::string& s_;
    const PrimeField& field_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const PrimeField& field,
                                   const std::vector<std::string>& names) {
    return detail::PolyParser(text, field, names).parse();
}

inline std::string print_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

// Residues above p/2 print as negative magnitudes, so generators such as
// "x - w" survive a print/parse round trip in readable form.
inline std::string print_polynomial(const Polynomial& p,
                                    const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    const fp_t mod = p.field().modulus();
    std::string out;
    for (const auto& t : p.terms()) {
        fp_t c = t.coeff;
        bool neg = c > mod / 2;
        fp_t mag = neg ? mod - c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = print_monomial(t.mono, names);
        if (ms.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += ms;
        }
    }
    return out;
}

} // namespace socle
