#pragma once

// Arithmetic in the prime field F_p for a runtime modulus p < 2^31.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace socle {

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation exceeded a configured resource cap (pair count, table cap).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematically meaningful failure (e.g. a fit that never stabilizes).
class math_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using fp_t = std::uint32_t;

class PrimeField {
public:
    explicit PrimeField(fp_t p = 32003) : p_(p) {
        if (p < 2 || !is_prime(p) || p >= (1u << 31))
            throw input_error("characteristic must be a prime below 2^31, got " +
                              std::to_string(p));
    }

    fp_t modulus() const { return p_; }

    fp_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<fp_t>(r);
    }

    fp_t add(fp_t a, fp_t b) const {
        fp_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }

    fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }

    fp_t mul(fp_t a, fp_t b) const {
        return static_cast<fp_t>(static_cast<std::uint64_t>(a) * b % p_);
    }

    fp_t pow(fp_t a, std::uint64_t e) const {
        fp_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    fp_t inv(fp_t a) const {
        if (a == 0) throw input_error("division by zero in F_p");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    static bool is_prime(fp_t n) {
        if (n < 4) return n > 1;
        if (n % 2 == 0) return false;
        for (fp_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    fp_t p_;
};

} // namespace socle
