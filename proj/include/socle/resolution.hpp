#pragma once

// Finite free resolutions over S, Ext^i_S(R, S) as cokernel presentations,
// and the duality-derived invariants: h_i(R) = l(Ext^{n-i}), r_i(R) =
// mu(Ext^{n-i}), the unmixed component u = ann(Ext^c) / J, and the
// generalized Cohen-Macaulay test.

#include <optional>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace socle {

using RingPtr = std::shared_ptr<const RingDescriptor>;

// ---- module utilities ---------------------------------------------------

// drops generators lying in the span of the others (graded Nakayama makes
// any maximal irredundant homogeneous subset a minimal generating set)
inline std::vector<ModuleElement> minimal_generators(std::vector<ModuleElement> gens,
                                                     std::size_t rank, PrimeField field,
                                                     std::size_t nvars) {
    std::vector<ModuleElement> kept;
    for (const auto& g : gens) {
        bool zero = true;
        for (const auto& c : g)
            if (!c.is_zero()) zero = false;
        if (!zero) kept.push_back(g);
    }
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<ModuleElement> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (!others.empty()) {
            auto gb = module_groebner_basis(others, rank, MonomialOrder::grevlex(), field,
                                            nvars);
            ModuleElement nf = normal_form(kept[i], gb);
            bool member = true;
            for (const auto& c : nf)
                if (!c.is_zero()) member = false;
            if (member) {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
        }
        ++i;
    }
    return kept;
}

// length of S^rank / <rels>; nullopt when infinite
inline std::optional<std::uint64_t> module_length(const std::vector<ModuleElement>& rels,
                                                  std::size_t rank, PrimeField field,
                                                  std::size_t nvars) {
    if (rank == 0) return 0;
    auto gb = module_groebner_basis(rels, rank, MonomialOrder::grevlex(), field, nvars);
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < rank; ++c) {
        std::vector<Monomial> lts;
        for (const auto& g : gb.gens) {
            // leading component under position-over-term: first nonzero slot
            std::size_t lead = 0;
            while (lead < rank && g[lead].is_zero()) ++lead;
            if (lead == c) lts.push_back(g[lead].leading_term(gb.order).mono);
        }
        auto cnt = count_standard_monomials(lts, nvars);
        if (!cnt) return std::nullopt;
        total += *cnt;
    }
    return total;
}

// length of (U + J)/J as an S-module, via the presentation S^k -> (U+J)/J
// with kernel the projected syzygies of [u_1..u_k, j_1..j_s]
inline std::optional<std::uint64_t> subquotient_length(const std::vector<Polynomial>& ugens,
                                                       const std::vector<Polynomial>& jgens,
                                                       PrimeField field, std::size_t nvars) {
    std::vector<Polynomial> u;
    for (const auto& g : ugens)
        if (!g.is_zero()) u.push_back(g);
    const std::size_t k = u.size();
    if (k == 0) return 0;
    std::vector<Polynomial> combined = u;
    for (const auto& g : jgens)
        if (!g.is_zero()) combined.push_back(g);
    auto syz = syzygies(combined, MonomialOrder::grevlex(), field, nvars);
    std::vector<ModuleElement> rels;
    rels.reserve(syz.size());
    for (const auto& s : syz) rels.push_back(ModuleElement(s.begin(), s.begin() + k));
    return module_length(rels, k, field, nvars);
}

// ---- free resolutions ---------------------------------------------------

struct FreeResolution {
    // maps[i] holds the columns of d_{i+1} : F_{i+1} -> F_i as elements of
    // S^{rank F_i}; F_0 = S and coker(d_1) = R = S/J
    std::vector<std::vector<ModuleElement>> maps;
    bool minimal = false;

    std::vector<std::size_t> betti() const {
        std::vector<std::size_t> b{1};
        for (const auto& m : maps) b.push_back(m.size());
        return b;
    }
    std::size_t length() const { return maps.size(); }
    std::size_t rank(std::size_t i) const {
        return i == 0 ? 1 : maps[i - 1].size();
    }
};

inline FreeResolution free_resolution(const RingPtr& R, bool minimal = true) {
    const PrimeField F = R->field();
    const std::size_t n = R->nvars();
    FreeResolution res;
    res.minimal = minimal;

    std::vector<ModuleElement> cols;
    for (const auto& g : R->relations()) cols.push_back(ModuleElement{g});
    if (minimal) cols = minimal_generators(cols, 1, F, n);
    if (cols.empty()) return res; // R regular: 0 <- S <- 0

    std::size_t rank = 1;
    while (true) {
        res.maps.push_back(cols);
        if (res.maps.size() > 2 * n + 4)
            throw resource_error("free_resolution: length exceeded the syzygy bound");
        std::size_t next_rank = cols.size();
        std::vector<ModuleElement> syz =
            syzygies(cols, rank, MonomialOrder::grevlex(), F, n);
        if (minimal) syz = minimal_generators(std::move(syz), next_rank, F, n);
        if (syz.empty()) break;
        cols = std::move(syz);
        rank = next_rank;
    }
    return res;
}

// ---- Ext modules ----------------------------------------------------------

struct ModulePresentation {
    std::size_t rank = 0;                  // generators
    std::vector<ModuleElement> relations;  // elements of S^rank
};

struct ExtEntry {
    std::size_t i = 0;             // cohomological degree of Ext^i_S(R, S)
    ModulePresentation presentation; // already minimalized
    std::size_t mu = 0;            // minimal generator count
    std::optional<std::uint64_t> length; // nullopt = infinite
    int dim = -1;                  // Krull dimension; -1 for the zero module
    std::vector<Polynomial> annihilator; // generators of ann_S(Ext^i)
};

namespace detail {

// rows of the matrix whose columns are `cols` (elements of S^nrows)
inline std::vector<ModuleElement> transpose_columns(const std::vector<ModuleElement>& cols,
                                                    std::size_t nrows, PrimeField field,
                                                    std::size_t nvars) {
    std::vector<ModuleElement> rows(nrows,
                                    ModuleElement(cols.size(), Polynomial(field, nvars)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < nrows; ++r) rows[r][j] = cols[j][r];
    return rows;
}

inline bool has_nonzero_constant_term(const Polynomial& p) {
    for (const auto& t : p.terms())
        if (t.mono.is_one()) return t.coeff != 0;
    return false;
}

// repeatedly pivot on unit entries; valid for graded presentations where a
// unit entry is a nonzero constant
inline void minimalize_presentation(ModulePresentation& P, PrimeField field,
                                    std::size_t nvars) {
    while (true) {
        std::size_t pr = P.relations.size(), pj = P.rank;
        for (std::size_t r = 0; r < P.relations.size() && pr == P.relations.size(); ++r)
            for (std::size_t j = 0; j < P.rank; ++j)
                if (has_nonzero_constant_term(P.relations[r][j])) {
                    if (!P.relations[r][j].is_constant())
                        throw math_error(
                            "minimalize_presentation: non-graded unit entry");
                    pr = r;
                    pj = j;
                    break;
                }
        if (pr == P.relations.size()) break;
        const Polynomial pivot = P.relations[pr][pj];
        const fp_t inv = field.inv(pivot.terms()[0].coeff);
        ModulePresentation next;
        next.rank = P.rank - 1;
        for (std::size_t r = 0; r < P.relations.size(); ++r) {
            if (r == pr) continue;
            ModuleElement row(next.rank, Polynomial(field, nvars));
            const Polynomial factor = P.relations[r][pj].scaled(inv);
            std::size_t out = 0;
            bool zero = true;
            for (std::size_t j = 0; j < P.rank; ++j) {
                if (j == pj) continue;
                row[out] = P.relations[r][j] - factor * P.relations[pr][j];
                if (!row[out].is_zero()) zero = false;
                ++out;
            }
            if (!zero) next.relations.push_back(std::move(row));
        }
        P = std::move(next);
    }
}

// { f in S : f * e_j in <rels> }, via syzygies of [e_j, rels...]
inline std::vector<Polynomial> colon_by_unit_vector(const std::vector<ModuleElement>& rels,
                                                    std::size_t rank, std::size_t j,
                                                    PrimeField field, std::size_t nvars) {
    std::vector<ModuleElement> list;
    ModuleElement ej(rank, Polynomial(field, nvars));
    ej[j] = Polynomial::constant(field, nvars, 1);
    list.push_back(std::move(ej));
    for (const auto& r : rels) list.push_back(r);
    auto syz = syzygies(list, rank, MonomialOrder::grevlex(), field, nvars);
    std::vector<Polynomial> out;
    for (const auto& s : syz)
        if (!s[0].is_zero()) out.push_back(s[0]);
    return out;
}

} // namespace detail

struct ExtReport {
    RingPtr ring;
    FreeResolution resolution;
    std::vector<ExtEntry> entries; // i = 0..n
    int d = 0;                     // krull dimension of R

    // local cohomology data via graded local duality
    std::optional<std::uint64_t> h(std::size_t i) const {
        return entries[ring->nvars() - i].length;
    }
    std::size_t r(std::size_t i) const { return entries[ring->nvars() - i].mu; }
};

inline ExtReport ext_report(const RingPtr& R) {
    const PrimeField F = R->field();
    const std::size_t n = R->nvars();
    ExtReport rep;
    rep.ring = R;
    rep.resolution = free_resolution(R, true);
    rep.d = krull_dimension(*R);
    const auto& maps = rep.resolution.maps;
    const std::size_t len = maps.size();

    for (std::size_t i = 0; i <= n; ++i) {
        ExtEntry e;
        e.i = i;
        if (i > len) {
            e.length = 0;
            e.annihilator = {Polynomial::constant(F, n, 1)};
            rep.entries.push_back(std::move(e));
            continue;
        }
        const std::size_t ri = rep.resolution.rank(i);

        // kernel of d_{i+1}^T inside S^{ri}
        std::vector<ModuleElement> kernel;
        if (i == len) {
            for (std::size_t j = 0; j < ri; ++j) {
                ModuleElement ej(ri, Polynomial(F, n));
                ej[j] = Polynomial::constant(F, n, 1);
                kernel.push_back(std::move(ej));
            }
        } else {
            auto rows = detail::transpose_columns(maps[i], ri, F, n);
            std::size_t next_rank = maps[i].size();
            // a in S^{ri} with sum a_r * row_r = 0 in S^{next_rank}
            std::vector<ModuleElement> as_elements;
            for (std::size_t r = 0; r < ri; ++r) as_elements.push_back(rows[r]);
            kernel = syzygies(as_elements, next_rank, MonomialOrder::grevlex(), F, n);
        }

        // image of d_i^T: rows of the i-th matrix
        std::vector<ModuleElement> image;
        if (i >= 1) {
            std::size_t prev_rank = rep.resolution.rank(i - 1);
            auto m = detail::transpose_columns(maps[i - 1], prev_rank, F, n);
            image = std::move(m);
        }

        kernel = minimal_generators(std::move(kernel), ri, F, n);
        const std::size_t t = kernel.size();
        ModulePresentation P;
        P.rank = t;
        if (t > 0) {
            std::vector<ModuleElement> combined = kernel;
            for (const auto& im : image) combined.push_back(im);
            auto syz = syzygies(combined, ri, MonomialOrder::grevlex(), F, n);
            for (const auto& s : syz) {
                ModuleElement head(s.begin(), s.begin() + t);
                bool zero = true;
                for (const auto& c : head)
                    if (!c.is_zero()) zero = false;
                if (!zero) P.relations.push_back(std::move(head));
            }
        }
        detail::minimalize_presentation(P, F, n);
        e.presentation = P;
        e.mu = P.rank;
        if (P.rank == 0) {
            e.length = 0;
            e.dim = -1;
            e.annihilator = {Polynomial::constant(F, n, 1)};
        } else {
            e.length = module_length(P.relations, P.rank, F, n);
            // ann = intersection over j of (relations : e_j)
            std::optional<Ideal> ann;
            for (std::size_t j = 0; j < P.rank; ++j) {
                Ideal piece =
                    make_ideal(R, detail::colon_by_unit_vector(P.relations, P.rank, j, F, n),
                               false);
                ann = ann ? intersect(*ann, piece) : std::move(piece);
            }
            GroebnerBasis agb = groebner_basis(ann->gens, MonomialOrder::grevlex(), F, n);
            e.annihilator = agb.gens;
            e.dim = dimension_from_lt(leading_monomials(agb), n);
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// l(H^0_m(R)) computed directly as l((J : m^inf)/J)
inline std::uint64_t h0_direct(const RingPtr& R) {
    Ideal J = make_ideal(R, {}, true);
    Ideal sat = saturate(J, maximal_ideal(R));
    std::vector<Polynomial> ugens = ideal_gb(sat).gens;
    auto len = subquotient_length(ugens, J.lifted(), R->field(), R->nvars());
    if (!len) throw math_error("h0_direct: H^0 came out infinite");
    return *len;
}

struct UnmixedComponent {
    Ideal u;      // ideal of R (zero when R is unmixed in the graded model)
    int dim = -1; // Krull dimension of u as an S-module; -1 when u = 0
    bool is_zero = true;
};

inline UnmixedComponent unmixed_component(const RingPtr& R, const ExtReport& rep) {
    const std::size_t n = R->nvars();
    const int d = rep.d;
    const std::size_t c = n - static_cast<std::size_t>(d);
    UnmixedComponent out;
    const ExtEntry& ext_c = rep.entries[c];
    std::vector<Polynomial> ugens;
    if (ext_c.mu != 0)
        ugens = ext_c.annihilator;
    out.u = make_ideal(R, ugens, true);

    // u = 0 iff ann(Ext^c) lies inside J
    GroebnerBasis jgb = groebner_basis(R->relations(), MonomialOrder::grevlex(), R->field(),
                                       n);
    out.is_zero = true;
    for (const auto& g : ugens)
        if (!normal_form(g, jgb).is_zero()) out.is_zero = false;
    if (!out.is_zero) {
        // ann_S(U/J) = J : U, whose leading terms give dim u
        Ideal J = make_ideal(R, {}, true);
        Ideal annu = colon(J, make_ideal(R, ugens, false));
        out.dim = dimension_from_lt(leading_monomials(ideal_gb(annu)), n);
    }
    return out;
}

inline UnmixedComponent unmixed_component(const RingPtr& R) {
    return unmixed_component(R, ext_report(R));
}

struct GcmVerdict {
    bool is_gcm = false;
    std::vector<std::optional<std::uint64_t>> h; // h_0..h_{d-1} (nullopt = infinite)
    std::vector<std::size_t> r;                  // r_0..r_d
};

inline GcmVerdict is_generalized_cm(const ExtReport& rep) {
    const std::size_t n = rep.ring->nvars();
    const int d = rep.d;
    GcmVerdict v;
    v.is_gcm = true;
    for (int i = 0; i < d; ++i) {
        const ExtEntry& e = rep.entries[n - static_cast<std::size_t>(i)];
        if (e.dim > 0) v.is_gcm = false;
        v.h.push_back(e.length);
    }
    for (int i = 0; i <= d; ++i)
        v.r.push_back(rep.entries[n - static_cast<std::size_t>(i)].mu);
    return v;
}

inline GcmVerdict is_generalized_cm(const RingPtr& R) {
    return is_generalized_cm(ext_report(R));
}

} // namespace socle
