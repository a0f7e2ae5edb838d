#pragma once

// RingDescriptor: R = S/J for S = F_p[x_1..x_n] with a homogeneous defining
// ideal J. Positive integer variable weights are auto-detected so that
// quasi-homogeneous relations (weighted gradings) are accepted; the standard
// grading is tried first.

#include <numeric>
#include <string>
#include <vector>

#include "parser.hpp"
#include "polynomial.hpp"

namespace socle {

namespace detail {

struct Rat {
    long long n = 0, d = 1;
    static long long gcd(long long a, long long b) {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }
    static Rat make(long long n, long long d = 1) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }
    Rat operator+(Rat o) const { return make(n * o.d + o.n * d, d * o.d); }
    Rat operator-(Rat o) const { return make(n * o.d - o.n * d, d * o.d); }
    Rat operator*(Rat o) const { return make(n * o.n, d * o.d); }
    Rat operator/(Rat o) const { return make(n * o.d, d * o.n); }
    bool is_zero() const { return n == 0; }
};

// Searches for positive integer weights making every row orthogonal to w.
// Rows are exponent-vector differences between monomials of one relation.
inline std::vector<exp_t> solve_positive_weights(std::vector<std::vector<long long>> rows,
                                                 std::size_t n) {
    auto satisfies = [&](const std::vector<long long>& w) {
        for (const auto& r : rows) {
            long long s = 0;
            for (std::size_t i = 0; i < n; ++i) s += r[i] * w[i];
            if (s != 0) return false;
        }
        return true;
    };
    std::vector<long long> ones(n, 1);
    if (satisfies(ones)) return std::vector<exp_t>(n, 1);

    // RREF over the rationals
    std::vector<std::vector<Rat>> m;
    for (const auto& r : rows) {
        std::vector<Rat> q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = Rat::make(r[i]);
        m.push_back(std::move(q));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = Rat::make(m[rank][col].d, m[rank][col].n);
        for (auto& e : m[rank]) e = e * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) m[r][c] = m[r][c] - f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    if (free_cols.empty() || free_cols.size() > 4) return {};

    // grid-search small positive values for the free variables
    std::vector<long long> assign(free_cols.size(), 1);
    const long long cap = free_cols.size() == 1 ? 1 : 6;
    while (true) {
        std::vector<Rat> w(n);
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            w[free_cols[k]] = Rat::make(assign[k]);
        for (std::size_t r = 0; r < rank; ++r) {
            Rat v = Rat::make(0);
            for (std::size_t c = pivot_col[r] + 1; c < n; ++c)
                v = v - m[r][c] * w[c];
            w[pivot_col[r]] = v;
        }
        long long lcm = 1;
        for (const auto& e : w) lcm = lcm / Rat::gcd(lcm, e.d) * e.d;
        std::vector<long long> wi(n);
        bool pos = true;
        for (std::size_t i = 0; i < n; ++i) {
            wi[i] = w[i].n * (lcm / w[i].d);
            if (wi[i] <= 0) pos = false;
        }
        if (pos && satisfies(wi)) {
            long long g = 0;
            for (auto v : wi) g = Rat::gcd(g, v);
            std::vector<exp_t> out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<exp_t>(wi[i] / g);
            return out;
        }
        std::size_t k = 0;
        while (k < assign.size() && assign[k] == cap) assign[k++] = 1;
        if (k == assign.size()) break;
        ++assign[k];
    }
    return {};
}

} // namespace detail

class RingDescriptor {
public:
    RingDescriptor(PrimeField field, std::vector<std::string> vars,
                   std::vector<Polynomial> relations)
        : field_(field), vars_(std::move(vars)) {
        if (vars_.empty()) throw input_error("a ring needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw input_error("duplicate variable name '" + vars_[i] + "'");
        for (auto& rel : relations) {
            if (rel.is_zero()) continue;
            if (rel.nvars() != vars_.size() || rel.field() != field_)
                throw input_error("relation from a different ring");
            if (rel.is_constant())
                throw input_error("the defining ideal J must be proper");
            relations_.push_back(std::move(rel));
        }
        detect_weights();
    }

    static RingDescriptor parse(fp_t characteristic, std::vector<std::string> vars,
                                const std::vector<std::string>& relation_texts) {
        PrimeField field(characteristic);
        std::vector<Polynomial> rels;
        rels.reserve(relation_texts.size());
        for (const auto& s : relation_texts)
            rels.push_back(parse_polynomial(s, field, vars));
        return RingDescriptor(field, std::move(vars), std::move(rels));
    }

    const PrimeField& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const std::vector<exp_t>& weights() const { return weights_; }
    bool standard_graded() const {
        for (auto w : weights_)
            if (w != 1) return false;
        return true;
    }

    Polynomial parse_poly(const std::string& text) const {
        return parse_polynomial(text, field_, vars_);
    }
    std::string print_poly(const Polynomial& p) const { return print_polynomial(p, vars_); }

    bool same_ring(const RingDescriptor& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && relations_size_equal(o);
    }

private:
    bool relations_size_equal(const RingDescriptor& o) const {
        if (relations_.size() != o.relations_.size()) return false;
        for (std::size_t i = 0; i < relations_.size(); ++i)
            if (relations_[i] != o.relations_[i]) return false;
        return true;
    }

    void detect_weights() {
        const std::size_t n = vars_.size();
        std::vector<std::vector<long long>> rows;
        for (const auto& rel : relations_) {
            const auto& ts = rel.terms();
            for (std::size_t k = 1; k < ts.size(); ++k) {
                std::vector<long long> row(n);
                for (std::size_t i = 0; i < n; ++i)
                    row[i] = static_cast<long long>(ts[k].mono[i]) -
                             static_cast<long long>(ts[0].mono[i]);
                rows.push_back(std::move(row));
            }
        }
        weights_ = detail::solve_positive_weights(rows, n);
        if (weights_.empty())
            throw input_error(
                "defining ideal J is not homogeneous for any positive weight grading");
        for (const auto& rel : relations_)
            if (!rel.is_homogeneous(weights_))
                throw input_error("internal: weight detection produced a non-grading");
    }

    PrimeField field_;
    std::vector<std::string> vars_;
    std::vector<Polynomial> relations_;
    std::vector<exp_t> weights_;
};

} // namespace socle
