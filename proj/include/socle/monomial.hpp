#pragma once

// Monomials (exponent vectors with cached degree) and monomial orders:
// grevlex, lex, and block elimination orders.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "field.hpp"

namespace socle {

using exp_t = std::uint32_t;

class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t nvars) : exps_(nvars, 0), deg_(0) {}

    explicit Monomial(std::vector<exp_t> exps)
        : exps_(std::move(exps)),
          deg_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

    std::size_t nvars() const { return exps_.size(); }
    exp_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const { return deg_; }
    const std::vector<exp_t>& exponents() const { return exps_; }

    bool is_one() const { return deg_ == 0; }

    std::uint64_t weighted_degree(const std::vector<exp_t>& w) const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            d += static_cast<std::uint64_t>(exps_[i]) * w[i];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // quotient o / this; requires divides(o)
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = o.exps_[i] - exps_[i];
        r.deg_ = o.deg_ - deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(exps_.size());
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            r.exps_[i] = std::max(exps_[i], o.exps_[i]);
            d += r.exps_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    std::vector<exp_t> exps_;
    std::uint64_t deg_ = 0;
};

class MonomialOrder {
public:
    enum class Kind { grevlex, lex, elim };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    // eliminates the first k variables
    static MonomialOrder elim(std::size_t k) { return MonomialOrder(Kind::elim, k); }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }

    // > 0 if a > b, < 0 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::grevlex:
                return cmp_grevlex(a, b, 0, a.nvars());
            case Kind::lex:
                for (std::size_t i = 0; i < a.nvars(); ++i) {
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                }
                return 0;
            case Kind::elim: {
                int c = cmp_grevlex(a, b, 0, block_);
                if (c != 0) return c;
                return cmp_grevlex(a, b, block_, a.nvars());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && block_ == o.block_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

private:
    MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

    static int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                           std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::size_t block_;
};

} // namespace socle
