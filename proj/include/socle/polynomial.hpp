#pragma once

// Sparse multivariate polynomials over F_p. Terms are kept sorted in
// descending grevlex order with no zero coefficients.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace socle {

struct Term {
    Monomial mono;
    fp_t coeff;
};

class Polynomial {
public:
    Polynomial() = default;

    Polynomial(PrimeField field, std::size_t nvars)
        : field_(field), nvars_(nvars) {}

    static Polynomial constant(PrimeField field, std::size_t nvars, fp_t c) {
        Polynomial p(field, nvars);
        if (c % field.modulus() != 0) p.terms_.push_back({Monomial(nvars), c % field.modulus()});
        return p;
    }

    static Polynomial term(PrimeField field, Monomial m, fp_t c) {
        Polynomial p(field, m.nvars());
        c %= field.modulus();
        if (c != 0) p.terms_.push_back({std::move(m), c});
        return p;
    }

    static Polynomial variable(PrimeField field, std::size_t nvars, std::size_t i) {
        std::vector<exp_t> e(nvars, 0);
        e[i] = 1;
        return term(field, Monomial(std::move(e)), 1);
    }

    // terms must be combined, normalized, and sorted descending grevlex
    static Polynomial from_sorted_terms(PrimeField field, std::size_t nvars,
                                        std::vector<Term> terms) {
        Polynomial p(field, nvars);
        p.terms_ = std::move(terms);
        return p;
    }

    const PrimeField& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous(const std::vector<exp_t>& weights) const {
        if (terms_.empty()) return true;
        std::uint64_t d = terms_[0].mono.weighted_degree(weights);
        for (const auto& t : terms_)
            if (t.mono.weighted_degree(weights) != d) return false;
        return true;
    }

    // maximal term under the given order
    const Term& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw input_error("leading term of the zero polynomial");
        if (order.kind() == MonomialOrder::Kind::grevlex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (order.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
        return terms_[best];
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        MonomialOrder g = MonomialOrder::grevlex();
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = g.compare(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                out.push_back(terms_[i++]);
            } else if (c < 0) {
                out.push_back(o.terms_[j++]);
            } else {
                fp_t s = field_.add(terms_[i].coeff, o.terms_[j].coeff);
                if (s != 0) out.push_back({terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
        return from_sorted_terms(field_, nvars_, std::move(out));
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial scaled(fp_t c) const {
        if (c == 0) return Polynomial(field_, nvars_);
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
        return r;
    }

    // this * (c * m)
    Polynomial times_term(const Monomial& m, fp_t c) const {
        if (c == 0) return Polynomial(field_, nvars_);
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        if (is_zero() || o.is_zero()) return Polynomial(field_, nvars_);
        struct GrevlexDesc {
            MonomialOrder g = MonomialOrder::grevlex();
            bool operator()(const Monomial& a, const Monomial& b) const {
                return g.compare(a, b) > 0;
            }
        };
        std::map<Monomial, fp_t, GrevlexDesc> acc;
        for (const auto& a : terms_) {
            for (const auto& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                fp_t c = field_.mul(a.coeff, b.coeff);
                auto [it, fresh] = acc.emplace(std::move(m), c);
                if (!fresh) it->second = field_.add(it->second, c);
            }
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (c != 0) out.push_back({m, c});
        return from_sorted_terms(field_, nvars_, std::move(out));
    }

    Polynomial pow(std::uint32_t k) const {
        Polynomial r = constant(field_, nvars_, 1);
        Polynomial base(*this);
        while (k) {
            if (k & 1) r = r * base;
            if (k >>= 1) base = base * base;
        }
        return r;
    }

    // monic multiple (leading grevlex coefficient scaled to 1)
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(terms_.front().coeff));
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void check_ring(const Polynomial& o) const {
        if (field_ != o.field_ || nvars_ != o.nvars_)
            throw input_error("polynomial arithmetic across different rings");
    }

    PrimeField field_;
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

} // namespace socle
