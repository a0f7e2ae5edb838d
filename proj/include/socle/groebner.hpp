#pragma once

// Buchberger's algorithm over free modules S^r with Gebauer-Moeller pair
// elimination and normal-strategy selection. One engine serves ideals
// (rank 1), module Groebner bases (position-over-term), and syzygy
// extraction via the graph construction: generators (g_i; e_i) in
// S^r (+) S^k under an order whose top block eliminates and whose bottom
// block is Schreyer-style (compare lt(g_i)*m, ties by index).

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace socle {

using ModuleElement = std::vector<Polynomial>; // element of S^r, fixed rank

struct ModTerm {
    std::uint32_t comp;
    Monomial mono;
    fp_t coeff;
};

// Term order on S^split (+) S^bottom. Components below `split` dominate all
// others and compare position-over-term (smaller index wins, then the
// monomial order). Components >= split compare by the Schreyer rule through
// `schreyer` when present, else position-over-term.
struct ModuleTermOrder {
    MonomialOrder mono = MonomialOrder::grevlex();
    std::uint32_t split = 0;
    std::vector<std::pair<std::uint32_t, Monomial>> schreyer; // lt(g_i) per bottom comp

    int compare(const ModTerm& a, const ModTerm& b) const {
        bool atop = a.comp < split, btop = b.comp < split;
        if (atop != btop) return atop ? 1 : -1;
        if (atop || schreyer.empty()) {
            if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
            return mono.compare(a.mono, b.mono);
        }
        const auto& sa = schreyer[a.comp - split];
        const auto& sb = schreyer[b.comp - split];
        if (sa.first != sb.first) return sa.first < sb.first ? 1 : -1;
        int c = mono.compare(sa.second * a.mono, sb.second * b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
};

namespace detail {

// terms sorted strictly descending under the active ModuleTermOrder
using ModPoly = std::vector<ModTerm>;

class GBEngine {
public:
    GBEngine(PrimeField field, std::size_t nvars, ModuleTermOrder order,
             std::size_t pair_cap = 2'000'000)
        : F_(field), nvars_(nvars), ord_(std::move(order)), pair_cap_(pair_cap) {}

    const std::vector<ModPoly>& basis() const { return basis_; }
    const ModuleTermOrder& order() const { return ord_; }

    // caller promises `basis` is already a reduced Groebner basis
    void seed_reduced(std::vector<ModPoly> basis) { basis_ = std::move(basis); }

    ModPoly normalize(ModPoly f) const {
        std::sort(f.begin(), f.end(), [this](const ModTerm& a, const ModTerm& b) {
            return ord_.compare(a, b) > 0;
        });
        ModPoly out;
        out.reserve(f.size());
        for (auto& t : f) {
            if (t.coeff == 0) continue;
            if (!out.empty() && ord_.compare(out.back(), t) == 0) {
                out.back().coeff = F_.add(out.back().coeff, t.coeff);
                if (out.back().coeff == 0) out.pop_back();
            } else {
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    void compute(const std::vector<ModPoly>& gens) {
        // incremental pre-reduction of the inputs prunes redundant
        // generators (ideal powers arrive heavily redundant)
        std::vector<ModPoly> inputs;
        inputs.reserve(gens.size());
        for (const auto& g : gens) {
            ModPoly n = normalize(g);
            if (!n.empty()) inputs.push_back(std::move(n));
        }
        std::sort(inputs.begin(), inputs.end(), [this](const ModPoly& a, const ModPoly& b) {
            return ord_.compare(a.front(), b.front()) < 0;
        });
        for (auto& g : inputs) {
            ModPoly r = normal_form(std::move(g));
            if (!r.empty()) add_element(make_monic(std::move(r)));
        }

        std::size_t processed = 0;
        while (!pairs_.empty()) {
            if (++processed > pair_cap_)
                throw resource_error("Groebner pair cap exceeded (" +
                                     std::to_string(pair_cap_) + ")");
            std::size_t best = select_pair();
            Pair p = pairs_[best];
            pairs_[best] = std::move(pairs_.back());
            pairs_.pop_back();
            ModPoly r = normal_form(spoly(p));
            if (!r.empty()) add_element(make_monic(std::move(r)));
        }
        interreduce();
    }

    // full normal form; deterministic reducer choice (first divisor)
    ModPoly normal_form(ModPoly f) const {
        ModPoly out;
        std::size_t pos = 0;
        while (pos < f.size()) {
            const ModTerm& lt = f[pos];
            const ModPoly* red = find_reducer(lt);
            if (red == nullptr) {
                out.push_back(lt);
                ++pos;
                continue;
            }
            const ModTerm& rl = red->front();
            Monomial q = rl.mono.quotient_of(lt.mono);
            f = axpy(f, pos, F_.neg(F_.mul(lt.coeff, F_.inv(rl.coeff))), q, *red);
            pos = 0;
        }
        return out;
    }

private:
    struct Pair {
        std::uint32_t i, j;
        Monomial lcm;
    };

    const ModPoly* find_reducer(const ModTerm& t) const {
        for (const auto& b : basis_) {
            const ModTerm& l = b.front();
            if (l.comp == t.comp && l.mono.divides(t.mono)) return &b;
        }
        return nullptr;
    }

    // f[pos..] + c * q * g, inputs sorted; result sorted (lead cancellation expected)
    ModPoly axpy(const ModPoly& f, std::size_t pos, fp_t c, const Monomial& q,
                 const ModPoly& g) const {
        ModPoly out;
        out.reserve(f.size() - pos + g.size());
        std::size_t i = pos, j = 0;
        ModTerm gt;
        auto load = [&]() {
            gt.comp = g[j].comp;
            gt.mono = g[j].mono * q;
            gt.coeff = F_.mul(g[j].coeff, c);
        };
        if (j < g.size()) load();
        while (i < f.size() && j < g.size()) {
            int cmp = ord_.compare(f[i], gt);
            if (cmp > 0) {
                out.push_back(f[i++]);
            } else if (cmp < 0) {
                out.push_back(gt);
                if (++j < g.size()) load();
            } else {
                fp_t s = F_.add(f[i].coeff, gt.coeff);
                if (s != 0) out.push_back({f[i].comp, f[i].mono, s});
                ++i;
                if (++j < g.size()) load();
            }
        }
        for (; i < f.size(); ++i) out.push_back(f[i]);
        for (; j < g.size(); ++j)
            out.push_back({g[j].comp, g[j].mono * q, F_.mul(g[j].coeff, c)});
        return out;
    }

    ModPoly make_monic(ModPoly f) const {
        fp_t inv = F_.inv(f.front().coeff);
        if (inv != 1)
            for (auto& t : f) t.coeff = F_.mul(t.coeff, inv);
        return f;
    }

    ModPoly spoly(const Pair& p) const {
        const ModPoly& f = basis_[p.i];
        const ModPoly& g = basis_[p.j];
        Monomial qf = f.front().mono.quotient_of(p.lcm);
        Monomial qg = g.front().mono.quotient_of(p.lcm);
        ModPoly lhs;
        lhs.reserve(f.size());
        for (const auto& t : f) lhs.push_back({t.comp, t.mono * qf, t.coeff});
        return axpy(lhs, 0, F_.neg(1), qg, g);
    }

    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            if (a.lcm.degree() != b.lcm.degree()) {
                if (a.lcm.degree() < b.lcm.degree()) best = k;
                continue;
            }
            int c = ord_.mono.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = k;
        }
        return best;
    }

    void add_element(ModPoly h) {
        const std::uint32_t t = static_cast<std::uint32_t>(basis_.size());
        const ModTerm& lt = h.front();

        // Gebauer-Moeller: drop old pairs whose lcm the new lead strictly refines
        std::vector<Pair> survivors;
        survivors.reserve(pairs_.size());
        for (auto& p : pairs_) {
            const ModTerm& li = basis_[p.i].front();
            if (li.comp == lt.comp && lt.mono.divides(p.lcm) &&
                lt.mono.lcm(basis_[p.i].front().mono) != p.lcm &&
                lt.mono.lcm(basis_[p.j].front().mono) != p.lcm)
                continue;
            survivors.push_back(std::move(p));
        }
        pairs_ = std::move(survivors);

        // new pairs (i, t), filtered by the M/F criteria, then the product
        // criterion (only valid for rank-1 data)
        std::vector<Pair> fresh;
        for (std::uint32_t i = 0; i < t; ++i) {
            const ModTerm& li = basis_[i].front();
            if (li.comp != lt.comp) continue;
            fresh.push_back({i, t, li.mono.lcm(lt.mono)});
        }
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm == fresh[a].lcm) {
                    if (b < a) {
                        drop[a] = true;
                        break;
                    }
                } else if (fresh[b].lcm.divides(fresh[a].lcm)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        const bool rank1 = ord_.split <= 1 && ord_.schreyer.empty();
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            if (rank1 && basis_[fresh[a].i].front().mono.coprime_with(lt.mono)) continue;
            pairs_.push_back(std::move(fresh[a]));
        }
        basis_.push_back(std::move(h));
    }

    void interreduce() {
        std::sort(basis_.begin(), basis_.end(), [this](const ModPoly& a, const ModPoly& b) {
            return ord_.compare(a.front(), b.front()) < 0;
        });
        std::vector<ModPoly> kept;
        for (auto& e : basis_) {
            bool redundant = false;
            for (const auto& k : kept) {
                if (k.front().comp == e.front().comp &&
                    k.front().mono.divides(e.front().mono)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(std::move(e));
        }
        basis_ = std::move(kept);
        // an element's own lead never divides its (strictly smaller) tail
        // terms under a global order, so tails may be reduced in place
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            ModPoly tail(basis_[i].begin() + 1, basis_[i].end());
            ModTerm lead = basis_[i].front();
            tail = normal_form(std::move(tail));
            ModPoly full;
            full.reserve(tail.size() + 1);
            full.push_back(std::move(lead));
            for (auto& t : tail) full.push_back(std::move(t));
            basis_[i] = make_monic(std::move(full));
        }
        std::sort(basis_.begin(), basis_.end(), [this](const ModPoly& a, const ModPoly& b) {
            return ord_.compare(a.front(), b.front()) > 0;
        });
    }

    PrimeField F_;
    std::size_t nvars_;
    ModuleTermOrder ord_;
    std::size_t pair_cap_;
    std::vector<ModPoly> basis_;
    std::vector<Pair> pairs_;
};

inline ModPoly to_modpoly(const ModuleElement& e) {
    ModPoly out;
    for (std::uint32_t c = 0; c < e.size(); ++c)
        for (const auto& t : e[c].terms()) out.push_back({c, t.mono, t.coeff});
    return out;
}

inline ModuleElement from_modpoly(const ModPoly& f, PrimeField field, std::size_t nvars,
                                  std::size_t rank) {
    ModuleElement out(rank, Polynomial(field, nvars));
    for (const auto& t : f)
        out[t.comp] = out[t.comp] + Polynomial::term(field, t.mono, t.coeff);
    return out;
}

} // namespace detail

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> gens; // reduced; sorted by descending leading term
    PrimeField field;
    std::size_t nvars = 0;

    bool contains_unit() const {
        return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
    }

    bool operator==(const GroebnerBasis& o) const {
        return order == o.order && gens == o.gens;
    }
    bool operator!=(const GroebnerBasis& o) const { return !(*this == o); }
};

struct ModuleGroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex();
    std::size_t rank = 0;
    std::vector<ModuleElement> gens; // reduced, position-over-term
    PrimeField field;
    std::size_t nvars = 0;
};

namespace detail {

inline GBEngine engine_for(const GroebnerBasis& gb) {
    ModuleTermOrder ord;
    ord.mono = gb.order;
    ord.split = 1;
    GBEngine eng(gb.field, gb.nvars, ord);
    std::vector<ModPoly> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(to_modpoly(ModuleElement{g}));
    eng.seed_reduced(std::move(basis));
    return eng;
}

inline GBEngine engine_for(const ModuleGroebnerBasis& gb) {
    ModuleTermOrder ord;
    ord.mono = gb.order;
    ord.split = static_cast<std::uint32_t>(gb.rank);
    GBEngine eng(gb.field, gb.nvars, ord);
    std::vector<ModPoly> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(to_modpoly(g));
    eng.seed_reduced(std::move(basis));
    return eng;
}

} // namespace detail

inline GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens,
                                    const MonomialOrder& order, PrimeField field,
                                    std::size_t nvars,
                                    std::size_t pair_cap = 2'000'000) {
    ModuleTermOrder ord;
    ord.mono = order;
    ord.split = 1;
    detail::GBEngine eng(field, nvars, ord, pair_cap);
    std::vector<detail::ModPoly> in;
    in.reserve(gens.size());
    for (const auto& g : gens) {
        if (!g.is_zero() && g.nvars() != nvars)
            throw input_error("groebner_basis: variable count mismatch");
        in.push_back(detail::to_modpoly(ModuleElement{g}));
    }
    eng.compute(in);
    GroebnerBasis out{order, {}, field, nvars};
    for (const auto& b : eng.basis())
        out.gens.push_back(detail::from_modpoly(b, field, nvars, 1)[0]);
    return out;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.nvars() != gb.nvars) throw input_error("normal form: variable count mismatch");
    detail::GBEngine eng = detail::engine_for(gb);
    return detail::from_modpoly(eng.normal_form(detail::to_modpoly(ModuleElement{f})),
                                gb.field, gb.nvars, 1)[0];
}

inline ModuleGroebnerBasis module_groebner_basis(const std::vector<ModuleElement>& gens,
                                                 std::size_t rank, const MonomialOrder& order,
                                                 PrimeField field, std::size_t nvars,
                                                 std::size_t pair_cap = 2'000'000) {
    ModuleTermOrder ord;
    ord.mono = order;
    ord.split = static_cast<std::uint32_t>(rank);
    detail::GBEngine eng(field, nvars, ord, pair_cap);
    std::vector<detail::ModPoly> in;
    in.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.size() != rank) throw input_error("module element rank mismatch");
        in.push_back(detail::to_modpoly(g));
    }
    eng.compute(in);
    ModuleGroebnerBasis out{order, rank, {}, field, nvars};
    for (const auto& b : eng.basis())
        out.gens.push_back(detail::from_modpoly(b, field, nvars, rank));
    return out;
}

inline ModuleElement normal_form(const ModuleElement& f, const ModuleGroebnerBasis& gb) {
    if (f.size() != gb.rank) throw input_error("normal form: module rank mismatch");
    detail::GBEngine eng = detail::engine_for(gb);
    return detail::from_modpoly(eng.normal_form(detail::to_modpoly(f)), gb.field, gb.nvars,
                                gb.rank);
}

// First syzygies of the given generators of a submodule of S^rank.
// Each returned element a (of rank = gens.size()) satisfies sum a_i gens_i = 0.
inline std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens,
                                           std::size_t rank, const MonomialOrder& order,
                                           PrimeField field, std::size_t nvars,
                                           std::size_t pair_cap = 2'000'000) {
    const std::size_t k = gens.size();
    ModuleTermOrder ord;
    ord.mono = order;
    ord.split = static_cast<std::uint32_t>(rank);

    ModuleTermOrder top = ord; // order on the top block alone
    std::vector<detail::ModPoly> in;
    std::vector<ModuleElement> unit_syz; // zero generators contribute unit syzygies
    std::vector<std::uint32_t> live;     // original index per bottom slot
    detail::GBEngine top_eng(field, nvars, top);
    for (std::uint32_t i = 0; i < k; ++i) {
        if (gens[i].size() != rank) throw input_error("module element rank mismatch");
        detail::ModPoly g = top_eng.normalize(detail::to_modpoly(gens[i]));
        if (g.empty()) {
            ModuleElement e(k, Polynomial(field, nvars));
            e[i] = Polynomial::constant(field, nvars, 1);
            unit_syz.push_back(std::move(e));
            continue;
        }
        ord.schreyer.push_back({g.front().comp, g.front().mono});
        g.push_back({static_cast<std::uint32_t>(rank + live.size()), Monomial(nvars), 1});
        in.push_back(std::move(g));
        live.push_back(i);
    }

    detail::GBEngine eng(field, nvars, ord, pair_cap);
    eng.compute(in);

    std::vector<ModuleElement> out = std::move(unit_syz);
    for (const auto& b : eng.basis()) {
        if (b.front().comp < rank) continue; // has a top part, not a syzygy
        ModuleElement e(k, Polynomial(field, nvars));
        for (const auto& t : b) {
            std::uint32_t slot = live[t.comp - rank];
            e[slot] = e[slot] + Polynomial::term(field, t.mono, t.coeff);
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& order, PrimeField field,
                                           std::size_t nvars,
                                           std::size_t pair_cap = 2'000'000) {
    std::vector<ModuleElement> lifted;
    lifted.reserve(gens.size());
    for (const auto& g : gens) lifted.push_back(ModuleElement{g});
    return syzygies(lifted, 1, order, field, nvars, pair_cap);
}

} // namespace socle
