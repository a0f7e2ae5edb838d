#pragma once

// Ideal algebra over S and R = S/J: powers, intersection (tag-variable
// elimination), colon, saturation, elimination, m-primariness, Krull
// dimension, and lengths of Artinian quotients by staircase counting.

#include <memory>
#include <optional>
#include <vector>

#include "groebner.hpp"
#include "ring.hpp"

namespace socle {

struct Ideal {
    std::shared_ptr<const RingDescriptor> ring;
    std::vector<Polynomial> gens; // polynomials in S
    bool of_R = true;             // adjoin J's generators before any GB

    // generators with J adjoined when the ideal lives in R
    std::vector<Polynomial> lifted() const {
        std::vector<Polynomial> out;
        for (const auto& g : gens)
            if (!g.is_zero()) out.push_back(g);
        if (of_R)
            for (const auto& r : ring->relations()) out.push_back(r);
        return out;
    }
};

inline Ideal make_ideal(std::shared_ptr<const RingDescriptor> ring,
                        std::vector<Polynomial> gens, bool of_R = true) {
    for (const auto& g : gens)
        if (!g.is_zero() && g.nvars() != ring->nvars())
            throw input_error("ideal generator from a different ring");
    return Ideal{std::move(ring), std::move(gens), of_R};
}

inline Ideal maximal_ideal(std::shared_ptr<const RingDescriptor> ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Polynomial::variable(ring->field(), ring->nvars(), i));
    return make_ideal(std::move(ring), std::move(gens));
}

inline GroebnerBasis ideal_gb(const Ideal& I,
                              const MonomialOrder& order = MonomialOrder::grevlex()) {
    return groebner_basis(I.lifted(), order, I.ring->field(), I.ring->nvars());
}

inline bool ideal_equal(const Ideal& I, const Ideal& J2) {
    if (!I.ring->same_ring(*J2.ring)) throw input_error("ideal comparison across rings");
    return ideal_gb(I).gens == ideal_gb(J2).gens;
}

// ---- powers -----------------------------------------------------------

namespace detail {

inline bool poly_less(const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    MonomialOrder g = MonomialOrder::grevlex();
    for (std::size_t i = 0; i < ta.size(); ++i) {
        int c = g.compare(ta[i].mono, tb[i].mono);
        if (c != 0) return c < 0;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return false;
}

} // namespace detail

inline Ideal ideal_power(const Ideal& I, std::uint32_t n) {
    if (n == 0) throw input_error("ideal_power: n = 0 rejected (use the unit ideal)");
    std::vector<Polynomial> base;
    for (const auto& g : I.gens)
        if (!g.is_zero()) base.push_back(g);
    std::vector<Polynomial> out;
    // products over multisets of size n (combinations with repetition)
    std::vector<std::uint32_t> idx(n, 0);
    if (!base.empty()) {
        while (true) {
            Polynomial p = base[idx[0]];
            for (std::uint32_t k = 1; k < n; ++k) p = p * base[idx[k]];
            if (!p.is_zero()) out.push_back(std::move(p));
            std::uint32_t k = n;
            while (k > 0 && idx[k - 1] == base.size() - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::uint32_t j = k; j < n; ++j) idx[j] = idx[k - 1];
        }
    }
    std::sort(out.begin(), out.end(), detail::poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Ideal{I.ring, std::move(out), I.of_R};
}

// ---- variable plumbing for elimination --------------------------------

namespace detail {

// inserts `extra` zero-exponent slots at the front of every monomial
inline Polynomial shift_vars(const Polynomial& p, std::size_t extra) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<exp_t> e(t.mono.nvars() + extra, 0);
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) e[i + extra] = t.mono[i];
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_sorted_terms(p.field(), p.nvars() + extra, std::move(out));
}

inline Polynomial unshift_vars(const Polynomial& p, std::size_t extra) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<exp_t> e(t.mono.nvars() - extra);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i + extra];
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_sorted_terms(p.field(), p.nvars() - extra, std::move(out));
}

// perm[new_index] = old_index; grevlex order of terms must be restored
inline Polynomial permute_vars(const Polynomial& p, const std::vector<std::size_t>& perm) {
    std::vector<Term> tmp;
    tmp.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<exp_t> e(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) e[i] = t.mono[perm[i]];
        tmp.push_back({Monomial(std::move(e)), t.coeff});
    }
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(tmp.begin(), tmp.end(),
              [&](const Term& a, const Term& b) { return g.compare(a.mono, b.mono) > 0; });
    return Polynomial::from_sorted_terms(p.field(), perm.size(), std::move(tmp));
}

} // namespace detail

// I ∩ k[kept variables]; drop[i] marks variables to eliminate
inline Ideal eliminate(const Ideal& I, const std::vector<bool>& drop) {
    const std::size_t n = I.ring->nvars();
    if (drop.size() != n) throw input_error("eliminate: mask size mismatch");
    std::vector<std::size_t> perm; // new -> old, eliminated block first
    for (std::size_t i = 0; i < n; ++i)
        if (drop[i]) perm.push_back(i);
    const std::size_t k = perm.size();
    if (k == 0) return I;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) perm.push_back(i);

    std::vector<Polynomial> permuted;
    for (const auto& g : I.lifted()) permuted.push_back(detail::permute_vars(g, perm));
    GroebnerBasis gb = groebner_basis(permuted, MonomialOrder::elim(k), I.ring->field(), n);

    std::vector<std::size_t> inv(n); // old -> new
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<Polynomial> kept;
    for (const auto& g : gb.gens) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < k && pure; ++i)
                if (t.mono[i] != 0) pure = false;
        if (pure) kept.push_back(detail::permute_vars(g, inv));
    }
    return Ideal{I.ring, std::move(kept), false};
}

inline Ideal intersect(const Ideal& I, const Ideal& J2) {
    if (!I.ring->same_ring(*J2.ring)) throw input_error("intersect across rings");
    const std::size_t n = I.ring->nvars();
    const PrimeField& F = I.ring->field();
    // tag variable t at position 0: (t*I + (1-t)*J2) ∩ S
    std::vector<Polynomial> gens;
    Polynomial t = Polynomial::variable(F, n + 1, 0);
    Polynomial one_minus_t = Polynomial::constant(F, n + 1, 1) - t;
    for (const auto& g : I.lifted()) gens.push_back(t * detail::shift_vars(g, 1));
    for (const auto& g : J2.lifted()) gens.push_back(one_minus_t * detail::shift_vars(g, 1));

    GroebnerBasis gb = groebner_basis(gens, MonomialOrder::elim(1), F, n + 1);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.gens) {
        bool tag_free = true;
        for (const auto& term : g.terms())
            if (term.mono[0] != 0) tag_free = false;
        if (tag_free) kept.push_back(detail::unshift_vars(g, 1));
    }
    return Ideal{I.ring, std::move(kept), I.of_R || J2.of_R};
}

namespace detail {

// exact division h / g (h must lie in (g)); grevlex long division
inline Polynomial divide_exact(Polynomial h, const Polynomial& g) {
    const PrimeField& F = h.field();
    MonomialOrder grev = MonomialOrder::grevlex();
    const Term& lg = g.leading_term(grev);
    Polynomial q(F, h.nvars());
    while (!h.is_zero()) {
        const Term& lh = h.leading_term(grev);
        if (!lg.mono.divides(lh.mono))
            throw math_error("divide_exact: dividend not in the principal ideal");
        fp_t c = F.mul(lh.coeff, F.inv(lg.coeff));
        Polynomial piece = Polynomial::term(F, lg.mono.quotient_of(lh.mono), c);
        q = q + piece;
        h = h - g * piece;
    }
    return q;
}

} // namespace detail

// I : J2 = ∩_g (1/g)(I ∩ (g)) over the generators g of J2
inline Ideal colon(const Ideal& I, const Ideal& J2) {
    if (!I.ring->same_ring(*J2.ring)) throw input_error("colon across rings");
    std::vector<Polynomial> divisors;
    for (const auto& g : J2.gens)
        if (!g.is_zero()) divisors.push_back(g);
    if (divisors.empty()) throw input_error("colon: J2 = 0 rejected");

    std::optional<Ideal> acc;
    for (const auto& g : divisors) {
        Ideal piece{I.ring, {}, I.of_R};
        if (g.is_constant()) {
            piece = I; // colon by a unit
        } else {
            Ideal principal{I.ring, {g}, false};
            Ideal meet = intersect(I, principal);
            for (const auto& h : meet.gens)
                piece.gens.push_back(detail::divide_exact(h, g));
        }
        acc = acc ? intersect(*acc, piece) : std::move(piece);
    }
    return *acc;
}

inline Ideal saturate(const Ideal& I, const Ideal& J2) {
    Ideal cur = I;
    GroebnerBasis cur_gb = ideal_gb(cur);
    for (int step = 0; step < 256; ++step) {
        Ideal next = colon(cur, J2);
        GroebnerBasis next_gb = ideal_gb(next);
        if (next_gb.gens == cur_gb.gens) return cur;
        cur = std::move(next);
        cur_gb = std::move(next_gb);
    }
    throw resource_error("saturate: chain did not stabilize within 256 steps");
}

// ---- staircase counting ------------------------------------------------

namespace detail {

inline std::optional<std::uint64_t> count_standard_rec(const std::vector<std::vector<exp_t>>& lts,
                                                       std::size_t n) {
    for (const auto& m : lts) {
        bool one = true;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) one = false;
        if (one) return 0;
    }
    if (n == 0) return 1;
    // bound in the last variable from a pure power
    std::optional<exp_t> bound;
    for (const auto& m : lts) {
        bool pure = m[n - 1] > 0;
        for (std::size_t i = 0; i + 1 < n && pure; ++i)
            if (m[i] != 0) pure = false;
        if (pure && (!bound || m[n - 1] < *bound)) bound = m[n - 1];
    }
    if (!bound) return std::nullopt;
    std::uint64_t total = 0;
    for (exp_t e = 0; e < *bound; ++e) {
        std::vector<std::vector<exp_t>> slice;
        for (const auto& m : lts) {
            if (m[n - 1] > e) continue;
            slice.emplace_back(m.begin(), m.end() - 1);
        }
        auto sub = count_standard_rec(slice, n - 1);
        if (!sub) return std::nullopt;
        total += *sub;
    }
    return total;
}

} // namespace detail

// monomials outside the monomial ideal generated by lts; nullopt = infinite
inline std::optional<std::uint64_t> count_standard_monomials(const std::vector<Monomial>& lts,
                                                             std::size_t nvars) {
    std::vector<std::vector<exp_t>> rows;
    rows.reserve(lts.size());
    for (const auto& m : lts) rows.push_back(m.exponents());
    return detail::count_standard_rec(rows, nvars);
}

inline std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> out;
    out.reserve(gb.gens.size());
    for (const auto& g : gb.gens) out.push_back(g.leading_term(gb.order).mono);
    return out;
}

// ---- dimension and length ----------------------------------------------

// max size of a variable subset meeting no leading monomial's support;
// -1 for the unit ideal (empty variety)
inline int dimension_from_lt(const std::vector<Monomial>& lts, std::size_t nvars) {
    for (const auto& m : lts)
        if (m.is_one()) return -1;
    if (nvars > 24) throw resource_error("dimension_from_lt: too many variables");
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (std::size_t i = 0; i < nvars && inside; ++i)
                if (m[i] != 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

inline int krull_dimension(const RingDescriptor& R) {
    GroebnerBasis gb = groebner_basis(R.relations(), MonomialOrder::grevlex(), R.field(),
                                      R.nvars());
    if (gb.contains_unit()) throw input_error("krull_dimension: J is the unit ideal");
    return dimension_from_lt(leading_monomials(gb), R.nvars());
}

inline bool is_m_primary_given(const GroebnerBasis& gb) {
    if (gb.contains_unit()) return false;
    auto count = count_standard_monomials(leading_monomials(gb), gb.nvars);
    if (!count) return false;
    // nilpotency: x_i^D must vanish in S/(I+J), ruling out support away from m
    for (std::size_t i = 0; i < gb.nvars; ++i) {
        std::vector<exp_t> e(gb.nvars, 0);
        e[i] = static_cast<exp_t>(*count);
        Polynomial xiD = Polynomial::term(gb.field, Monomial(std::move(e)), 1);
        if (*count > 0 && !normal_form(xiD, gb).is_zero()) return false;
    }
    return true;
}

inline bool is_m_primary(const Ideal& I) { return is_m_primary_given(ideal_gb(I)); }

inline std::uint64_t quotient_length_given(const GroebnerBasis& gb) {
    if (!is_m_primary_given(gb)) throw input_error("quotient_length: ideal not m-primary");
    return *count_standard_monomials(leading_monomials(gb), gb.nvars);
}

inline std::uint64_t quotient_length(const Ideal& I) {
    return quotient_length_given(ideal_gb(I));
}

} // namespace socle
