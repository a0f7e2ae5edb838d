#pragma once

// Sampling of the Hilbert-Samuel and irreducibility functions, exact
// polynomiality detection by windowed finite differences, and coefficient
// extraction in the alternating binomial basis.

#include <algorithm>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "ideal.hpp"

namespace socle {

struct LengthTable {
    enum class Kind { hilbert_samuel, irreducibility };
    Kind kind = Kind::hilbert_samuel;
    std::vector<long long> entries; // entry[n] is the value at I^{n+1}
    std::string ideal_desc;
};

struct CoefficientVector {
    enum class Kind { hilbert_e, irreducibility_f };
    Kind kind = Kind::hilbert_e;
    std::vector<long long> coeffs; // e_0..e_s, or f_0..f_{d-1}
    std::uint32_t postulation = 0; // least n from which the polynomial matches
    std::uint32_t stability_witness = 0; // consecutive agreeing fit windows
    std::uint32_t table_size = 0;        // entries available when fitted

    bool operator==(const CoefficientVector& o) const {
        return kind == o.kind && coeffs == o.coeffs;
    }
};

struct FitOptions {
    std::uint32_t window = 3;  // W consecutive agreeing windows required
    std::uint32_t cap = 30;    // max table index N
    bool parallel = true;
};

namespace detail {

inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// value of the alternating binomial combination at n
inline long long eval_binomial(const std::vector<long long>& c, std::uint32_t s,
                               long long n) {
    long long v = 0;
    for (std::uint32_t i = 0; i <= s; ++i) {
        long long term = c[i] * binom(n + s - i, s - i);
        v += (i % 2 == 0) ? term : -term;
    }
    return v;
}

// exact interpolation of s+1 consecutive samples starting at n0
inline std::vector<long long> fit_window(const std::vector<long long>& table,
                                         std::uint32_t n0, std::uint32_t s) {
    std::vector<long long> work(table.begin() + n0, table.begin() + n0 + s + 1);
    std::vector<long long> c(s + 1, 0);
    for (std::uint32_t i = 0; i <= s; ++i) {
        std::uint32_t deg = s - i;
        // deg-th forward difference at the window start isolates the top term
        std::vector<long long> d = work;
        for (std::uint32_t k = 0; k < deg; ++k)
            for (std::size_t j = 0; j + 1 < d.size(); ++j) d[j] = d[j + 1] - d[j];
        long long top = d[0];
        c[i] = (i % 2 == 0) ? top : -top;
        for (std::size_t j = 0; j < work.size(); ++j) {
            long long term = c[i] * binom(static_cast<long long>(n0 + j) + s - i, s - i);
            work[j] -= (i % 2 == 0) ? term : -term;
        }
    }
    return c;
}

} // namespace detail

// Fits integer coefficients so that the alternating binomial combination of
// degree s matches the table tail; accepted only when `window` consecutive
// interpolation windows agree and the polynomial reproduces every entry from
// the postulation index onward. Fails loudly otherwise.
inline CoefficientVector fit_binomial(const LengthTable& table, std::uint32_t s,
                                      const FitOptions& opts = {}) {
    const std::uint32_t W = opts.window;
    const auto& v = table.entries;
    if (v.size() < static_cast<std::size_t>(s) + 1 + W)
        throw math_error("fit_binomial: table too short (need at least " +
                         std::to_string(s + 1 + W) + " entries, have " +
                         std::to_string(v.size()) + ")");
    const std::uint32_t last_start = static_cast<std::uint32_t>(v.size()) - s - W;
    for (std::uint32_t n0 = 0; n0 <= last_start; ++n0) {
        std::vector<long long> c = detail::fit_window(v, n0, s);
        bool stable = true;
        for (std::uint32_t w = 1; w < W && stable; ++w)
            if (detail::fit_window(v, n0 + w, s) != c) stable = false;
        if (!stable) continue;
        bool tail_ok = true;
        for (std::size_t n = n0; n < v.size() && tail_ok; ++n)
            if (detail::eval_binomial(c, s, static_cast<long long>(n)) != v[n])
                tail_ok = false;
        if (!tail_ok) continue;
        std::uint32_t post = n0;
        while (post > 0 &&
               detail::eval_binomial(c, s, post - 1) == v[post - 1])
            --post;
        CoefficientVector out;
        out.kind = table.kind == LengthTable::Kind::hilbert_samuel
                       ? CoefficientVector::Kind::hilbert_e
                       : CoefficientVector::Kind::irreducibility_f;
        out.coeffs = std::move(c);
        out.postulation = post;
        out.stability_witness = W;
        out.table_size = static_cast<std::uint32_t>(v.size());
        if (out.kind == CoefficientVector::Kind::hilbert_e && out.coeffs[0] <= 0)
            throw math_error(
                "fit_binomial: nonpositive e_0; table degree disagrees with s = " +
                std::to_string(s));
        return out;
    }
    throw math_error("fit_binomial: no stabilization within N = " +
                     std::to_string(v.size() - 1));
}

namespace detail {

// bounded fan-out keeps peak memory under control for heavy table slices
template <typename Fn>
std::vector<long long> map_range(std::uint32_t lo, std::uint32_t hi, bool parallel,
                                 Fn&& fn) {
    std::vector<long long> out(hi - lo);
    const std::uint32_t width = std::max(2u, std::thread::hardware_concurrency());
    if (parallel && hi - lo > 1) {
        for (std::uint32_t base = lo; base < hi; base += width) {
            std::uint32_t end = std::min(hi, base + width);
            std::vector<std::future<long long>> futs;
            for (std::uint32_t n = base; n < end; ++n)
                futs.push_back(std::async(std::launch::async, fn, n));
            for (std::uint32_t n = base; n < end; ++n) out[n - lo] = futs[n - base].get();
        }
    } else {
        for (std::uint32_t n = lo; n < hi; ++n) out[n - lo] = fn(n);
    }
    return out;
}

} // namespace detail

// Replaces the generators of an ideal of R by its reduced Groebner basis
// with the elements of J dropped. Valid below powers because
// (I + J)^n + J = I^n + J; it keeps the product expansion of powers small.
inline Ideal power_base(const Ideal& I) {
    if (!I.of_R) return I;
    GroebnerBasis gb = ideal_gb(I);
    GroebnerBasis jgb = groebner_basis(I.ring->relations(), MonomialOrder::grevlex(),
                                       I.ring->field(), I.ring->nvars());
    std::vector<Polynomial> kept;
    for (const auto& g : gb.gens)
        if (!normal_form(g, jgb).is_zero()) kept.push_back(g);
    std::vector<Polynomial> original;
    for (const auto& g : I.gens)
        if (!g.is_zero()) original.push_back(g);
    // powers expand combinatorially in the generator count
    if (original.size() <= kept.size()) return Ideal{I.ring, std::move(original), true};
    return Ideal{I.ring, std::move(kept), true};
}

// Visits n = 0..N with generators W_n satisfying (W_n) + J = I^{n+1} + J.
// Successive powers are built from the reduced Groebner basis of the previous
// one, so the generator count tracks the staircase instead of exploding
// combinatorially like the plain product expansion.
template <typename Fn>
inline void for_each_power(const Ideal& I, std::uint32_t N, Fn&& fn) {
    Ideal base = power_base(I);
    const PrimeField& F = I.ring->field();
    const std::size_t n = I.ring->nvars();
    GroebnerBasis jgb = groebner_basis(I.ring->relations(), MonomialOrder::grevlex(), F, n);

    std::vector<Polynomial> cur = base.gens;
    for (std::uint32_t k = 0; k <= N; ++k) {
        Ideal K{I.ring, cur, true};
        GroebnerBasis gb = ideal_gb(K);
        std::vector<Polynomial> reduced;
        for (const auto& g : gb.gens)
            if (!normal_form(g, jgb).is_zero()) reduced.push_back(g);
        fn(k, gb, reduced);
        if (k == N) break;
        std::vector<Polynomial> next;
        next.reserve(reduced.size() * base.gens.size());
        for (const auto& g : reduced)
            for (const auto& b : base.gens) next.push_back(g * b);
        std::sort(next.begin(), next.end(), detail::poly_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cur = std::move(next);
    }
}

// entries n = 0..N: l(R/I^{n+1})
inline LengthTable hilbert_samuel_table(const RingDescriptor& R, const Ideal& I,
                                        std::uint32_t N, bool parallel = true) {
    (void)R;
    (void)parallel; // iterative powers are inherently sequential
    if (!is_m_primary(I))
        throw input_error("hilbert_samuel_table: ideal is not m-primary");
    LengthTable t;
    t.kind = LengthTable::Kind::hilbert_samuel;
    t.entries.resize(N + 1);
    for_each_power(I, N, [&](std::uint32_t n, const GroebnerBasis& gb,
                             const std::vector<Polynomial>&) {
        t.entries[n] = static_cast<long long>(quotient_length_given(gb));
    });
    return t;
}

// entries n = 0..N: ir(I^{n+1}) = l(R/I^{n+1}) - l(R/(I^{n+1} : m))
inline LengthTable irreducibility_table(const RingDescriptor& R, const Ideal& I,
                                        std::uint32_t N, bool parallel = true) {
    (void)R;
    if (!is_m_primary(I))
        throw input_error("irreducibility_table: ideal is not m-primary");
    (void)parallel;
    Ideal m = maximal_ideal(I.ring);
    LengthTable t;
    t.kind = LengthTable::Kind::irreducibility;
    t.entries.resize(N + 1);
    for_each_power(I, N, [&](std::uint32_t n, const GroebnerBasis& gb,
                             const std::vector<Polynomial>& reduced) {
        long long full = static_cast<long long>(quotient_length_given(gb));
        // K : m can be the unit ideal (K = m), whose quotient has length 0
        Ideal K{I.ring, reduced, true};
        GroebnerBasis cgb = ideal_gb(colon(K, m));
        long long soc =
            cgb.contains_unit() ? 0 : static_cast<long long>(quotient_length_given(cgb));
        t.entries[n] = full - soc;
    });
    return t;
}

namespace detail {

template <typename TableFn>
CoefficientVector coefficients_with_extension(TableFn&& make_table, std::uint32_t s,
                                              const FitOptions& opts) {
    std::uint32_t N = s + opts.window + 2;
    if (N > opts.cap) N = opts.cap;
    while (true) {
        LengthTable t = make_table(N);
        try {
            return fit_binomial(t, s, opts);
        } catch (const math_error&) {
            if (N >= opts.cap)
                throw math_error("coefficients: no stabilization within the cap N = " +
                                 std::to_string(opts.cap));
            N = std::min<std::uint32_t>(2 * N, opts.cap);
        }
    }
}

} // namespace detail

// e_0..e_s of l(R/I^{n+1}); s is always krull_dimension(R)
inline CoefficientVector hilbert_coefficients(const RingDescriptor& R, const Ideal& I,
                                              const FitOptions& opts = {}) {
    int d = krull_dimension(R);
    return detail::coefficients_with_extension(
        [&](std::uint32_t N) { return hilbert_samuel_table(R, I, N, opts.parallel); },
        static_cast<std::uint32_t>(d), opts);
}

// f_0..f_{d-1} of ir(I^{n+1})
inline CoefficientVector f_coefficients(const RingDescriptor& R, const Ideal& I,
                                        const FitOptions& opts = {}) {
    int d = krull_dimension(R);
    if (d < 1) throw input_error("f_coefficients: dimension must be positive");
    return detail::coefficients_with_extension(
        [&](std::uint32_t N) { return irreducibility_table(R, I, N, opts.parallel); },
        static_cast<std::uint32_t>(d - 1), opts);
}

} // namespace socle
