// Acceptance gate: one criterion per invocation, one PASS/FAIL line at the end.
//
// Usage: acceptance CRITERION CORPUS_DIR
//
// Every asserted value is an externally fixed reference. Sub-checks that the
// exact computation contradicts are still asserted as given and reported as
// failures, with the computed value printed next to the expected one; nothing
// is weakened to force a green run.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <socle/report.hpp>
#include <socle/ringfile.hpp>

using namespace socle;

namespace {

struct Criterion {
    bool pass = true;
    void check(const std::string& name, bool ok, const std::string& detail) {
        std::cout << "  [" << (ok ? "ok" : "X ") << "] " << name << ": " << detail << "\n";
        if (!ok) pass = false;
    }
    template <typename T>
    void eq(const std::string& name, const T& got, const T& want) {
        std::ostringstream os;
        os << "expected " << want << ", computed " << got;
        check(name, got == want, os.str());
    }
};

std::ostream& operator<<(std::ostream& os, const std::vector<long long>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os << ")";
}

std::string corpus_dir; // set from argv

RingFile load(const std::string& name) {
    return parse_ring_file(corpus_dir + "/" + name + ".ring");
}

Ideal named_q(const RingFile& rf, const std::shared_ptr<const RingDescriptor>& R) {
    const auto* gens = rf.find_ideal("q");
    if (!gens) throw input_error(rf.source_path + ": fixture needs an ideal named 'q'");
    std::vector<Polynomial> ps;
    for (const auto& s : *gens) ps.push_back(R->parse_poly(s));
    return make_ideal(R, std::move(ps), true);
}

// ---- criterion 1: the mixed-dimension example ring ------------------------

void criterion_1(Criterion& c) {
    RingFile rf = load("paper-example");
    auto R = rf.ring();
    Ideal q = named_q(rf, R);

    LengthTable lt = hilbert_samuel_table(*R, q, 6);
    c.eq("lengths l(R/q^{n+1}), n = 0..6", lt.entries,
         std::vector<long long>{2, 6, 13, 24, 40, 62, 91});

    LengthTable it = irreducibility_table(*R, q, 6);
    c.eq("ir(q^{n+1}), n = 0..6", it.entries,
         std::vector<long long>{1, 2, 4, 7, 11, 16, 22});

    CoefficientVector e = hilbert_coefficients(*R, q);
    c.eq("e_1(q)", e.coeffs[1], 0LL);
    CoefficientVector ec = hilbert_coefficients(*R, colon(q, maximal_ideal(R)));
    c.eq("e_1(q:m)", ec.coeffs[1], 1LL);

    CoefficientVector f = f_coefficients(*R, q);
    c.eq("f_0(q)", f.coeffs[0], 1LL);

    ExtReport rep = ext_report(R);
    c.eq("r_3(R)", static_cast<long long>(rep.r(3)), 1LL);

    ClassificationReport cls = classify_ring(R);
    c.check("classify: not CM", !cls.cm, cls.cm ? "computed CM" : "computed not CM");
    c.check("classify: not gCM", !cls.gcm, cls.gcm ? "computed gCM" : "computed not gCM");

    XiSample xs = xi_sample(R, 1, 4, 1, 3); // 12 trials over depths 1..3
    std::ostringstream os;
    os << "expected 1, computed " << xs.distinct << " over " << xs.values.size()
       << " trials; values per depth:";
    for (std::size_t k = 0; k < xs.values.size(); ++k)
        os << " " << xs.values[k] << "(t=" << xs.depths[k] << ")";
    c.check("|Xi_1 sample| over depths 1..3", xs.distinct == 1 && xs.values.size() >= 10,
            os.str());
}

// ---- criterion 2: unmixed component of the example ring -------------------

void criterion_2(Criterion& c) {
    RingFile rf = load("paper-example");
    auto R = rf.ring();
    UnmixedComponent u = unmixed_component(R);
    c.check("u is nonzero", !u.is_zero, u.is_zero ? "computed u = 0" : "computed u != 0");
    Ideal w = make_ideal(R, {R->parse_poly("w")}, true);
    c.check("u = (w)R", ideal_equal(u.u, w),
            "computed " + std::to_string(u.u.gens.size()) + " generators");
    c.eq("dim u", static_cast<long long>(u.dim), 1LL);
    int d = krull_dimension(*R);
    c.check("dim u <= d - 2", u.dim <= d - 2,
            "dim u = " + std::to_string(u.dim) + ", d = " + std::to_string(d));
}

// ---- criterion 3: the Buchsbaum two-planes fixture ------------------------

void criterion_3(Criterion& c) {
    RingFile rf = load("two-planes");
    auto R = rf.ring();
    Ideal q = named_q(rf, R);

    ExtReport rep = ext_report(R);
    GcmVerdict v = is_generalized_cm(rep);
    c.check("h_1 = 1", v.h[1].has_value() && *v.h[1] == 1,
            v.h[1] ? "computed " + std::to_string(*v.h[1]) : "computed infinite");
    c.eq("r_1", static_cast<long long>(v.r[1]), 1LL);
    c.eq("r_2", static_cast<long long>(v.r[2]), 2LL);

    CoefficientVector e = hilbert_coefficients(*R, q);
    c.eq("e_1(q)", e.coeffs[1], -1LL);
    CoefficientVector ec = hilbert_coefficients(*R, colon(q, maximal_ideal(R)));
    c.eq("e_1(q:m)", ec.coeffs[1], 2LL);

    auto gcm = verify_gcm_formulas(R);
    for (const auto& entry : gcm) {
        if (entry.id == "fact2c-i")
            c.check("N = 4 (identity fact2c-i)", entry.holds && entry.lhs == 4,
                    "computed N = " + std::to_string(entry.lhs) + " vs " +
                        std::to_string(entry.rhs));
        if (entry.id == "fact2c-ii")
            c.check("f_0 = 3 (identity fact2c-ii)", entry.holds && entry.lhs == 3,
                    "computed f_0 = " + std::to_string(entry.lhs) + " vs " +
                        std::to_string(entry.rhs));
    }

    ParameterIdeal deep = deep_parameter_ideal(R, 2, kDefaultSeed + 5);
    auto chain = verify_inequality_chain(R, deep.ideal);
    long long left = 0, f0 = 0, gap = 0, rd = 0;
    for (const auto& entry : chain) {
        if (entry.id == "cor2-left") { left = entry.lhs; f0 = entry.rhs; }
        if (entry.id == "cor2-mid") gap = entry.rhs;
        if (entry.id == "cor2-right") rd = entry.rhs;
    }
    std::ostringstream os;
    os << "computed " << left << " >= " << f0 << " >= " << gap << " >= " << rd;
    c.check("chain 4 >= 3 >= 3 >= 2",
            left == 4 && f0 == 3 && gap == 3 && rd == 2 && left > f0, os.str());
    c.check("strict left inequality (non-CM)", left > f0, os.str());
}

// ---- criterion 4: Gorenstein detection ------------------------------------

void criterion_4(Criterion& c) {
    auto H = load("hypersurface").ring();
    c.check("hypersurface is Gorenstein", gorenstein_test(H),
            "gorenstein_test on the quadric cone");
    StableValue sh = stable_value_estimate(H);
    c.eq("hypersurface stable value", sh.value, 1LL);
    ParameterIdeal qh = deep_parameter_ideal(H, 2, kDefaultSeed);
    c.eq("hypersurface ir(q)", index_of_reducibility(qh.ideal), 1LL);

    auto C = load("monomial-curve").ring();
    c.check("curve is CM", cm_test(C), "cm_test on the monomial curve");
    c.check("curve is not Gorenstein", !gorenstein_test(C),
            "gorenstein_test on the monomial curve");
    ParameterIdeal qc = deep_parameter_ideal(C, 2, kDefaultSeed);
    c.eq("curve ir(q)", index_of_reducibility(qc.ideal), 2LL);
}

// ---- criterion 5: property suites ----------------------------------------

void criterion_5(Criterion& c) {
    struct Fixture {
        std::string name;
        bool unmixed; // u = 0 and H^0 = 0
    };
    std::vector<Fixture> fixtures{{"paper-example", false}, {"two-planes", true},
                                  {"hypersurface", true},   {"monomial-curve", true},
                                  {"nonsat", false},        {"regular", true}};
    const std::uint32_t kIdeals = 20;

    for (const auto& fx : fixtures) {
        auto R = load(fx.name).ring();
        const int d = krull_dimension(*R);
        long long stable = stable_value_estimate(R).value;
        bool ok_e0 = true, ok_fit = true, ok_ir = true, ok_e1 = true, ok_cor7 = true;
        long long bad_e1 = 0, bad_cor7 = 0;
        for (std::uint32_t k = 0; k < kIdeals; ++k) {
            std::uint32_t t = 1 + k % 2;
            ParameterIdeal q = deep_parameter_ideal(R, t, kDefaultSeed + 7000 + k);
            CoefficientVector e = hilbert_coefficients(*R, q.ideal);
            if (e.coeffs[0] <= 0) ok_e0 = false;
            // fit faithfulness: the polynomial reproduces a fresh table tail
            LengthTable tbl = hilbert_samuel_table(*R, q.ideal,
                                                   static_cast<std::uint32_t>(d) + 4);
            for (std::size_t n = e.postulation; n < tbl.entries.size(); ++n)
                if (detail::eval_binomial(e.coeffs, static_cast<std::uint32_t>(d),
                                          static_cast<long long>(n)) != tbl.entries[n])
                    ok_fit = false;
            if (index_of_reducibility(q.ideal) < 1) ok_ir = false;
            if (fx.unmixed && e.coeffs[1] > 0) { ok_e1 = false; bad_e1 = e.coeffs[1]; }
            if (fx.unmixed && t >= 2) {
                CoefficientVector ec =
                    hilbert_coefficients(*R, colon(q.ideal, maximal_ideal(R)));
                if (ec.coeffs[1] > stable) { ok_cor7 = false; bad_cor7 = ec.coeffs[1]; }
            }
        }
        c.check(fx.name + ": e_0 > 0 on " + std::to_string(kIdeals) + " ideals", ok_e0,
                ok_e0 ? "all positive" : "found nonpositive e_0");
        c.check(fx.name + ": fit faithfulness", ok_fit,
                ok_fit ? "polynomial matches every tail entry" : "tail mismatch");
        c.check(fx.name + ": ir >= 1", ok_ir, ok_ir ? "all >= 1" : "found ir < 1");
        if (fx.unmixed) {
            c.check(fx.name + ": e_1(q) <= 0", ok_e1,
                    ok_e1 ? "all nonpositive"
                          : "found e_1 = " + std::to_string(bad_e1));
            c.check(fx.name + ": e_1(q:m) <= N = " + std::to_string(stable), ok_cor7,
                    ok_cor7 ? "all within the stable value"
                            : "found e_1(q:m) = " + std::to_string(bad_cor7));
        }
        // reduction identities, three seeded ideals per eligible ring
        if (d >= 2) {
            bool ok_red = true;
            std::string first_bad;
            for (std::uint32_t k = 0; k < 3; ++k) {
                ParameterIdeal q = deep_parameter_ideal(R, 2, kDefaultSeed + 8000 + k);
                for (const auto& entry : verify_reduction_lemmas(R, q.ideal))
                    if (!entry.holds) {
                        ok_red = false;
                        if (first_bad.empty()) first_bad = entry.id;
                    }
            }
            c.check(fx.name + ": reduction identities exact", ok_red,
                    ok_red ? "all ledger entries hold" : "failed at " + first_bad);
        }
    }

    // N(R) = N(R/H^0) + r_0 on the non-saturated fixture
    auto N = load("nonsat").ring();
    std::vector<Polynomial> rels = N->relations();
    rels.push_back(N->parse_poly("x")); // H^0 = (x)
    auto sat = std::make_shared<RingDescriptor>(N->field(), N->vars(), std::move(rels));
    long long n_full = stable_value_estimate(N).value;
    long long n_sat = stable_value_estimate(sat).value;
    long long r0 = static_cast<long long>(ext_report(N).r(0));
    std::ostringstream os;
    os << "computed " << n_full << " = " << n_sat << " + " << r0;
    c.check("nonsat: N(R) = N(R/H^0) + r_0", n_full == n_sat + r0, os.str());
}

// ---- criterion 6: Xi_2 blow-up on the example ring ------------------------

void criterion_6(Criterion& c) {
    auto R = load("paper-example").ring();
    XiSample xs = xi_sample(R, 2, 2, 1, 3);
    c.check("all trials succeeded", xs.failures.empty(),
            std::to_string(xs.failures.size()) + " failures");
    long long prev_max = 0;
    bool increasing = true;
    std::ostringstream os;
    for (std::uint32_t t = 1; t <= 3; ++t) {
        long long lo = 0, hi = 0;
        bool seen = false;
        for (std::size_t k = 0; k < xs.values.size(); ++k) {
            if (xs.depths[k] != t) continue;
            lo = seen ? std::min(lo, xs.values[k]) : xs.values[k];
            hi = seen ? std::max(hi, xs.values[k]) : xs.values[k];
            seen = true;
        }
        os << (t > 1 ? "; " : "") << "t=" << t << ": [" << lo << ", " << hi << "]";
        if (!seen || (t > 1 && lo <= prev_max)) increasing = false;
        prev_max = hi;
    }
    c.check("e_2(q:m) strictly increases across depths 1, 2, 3", increasing, os.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance CRITERION CORPUS_DIR\n";
        return 2;
    }
    int which = std::atoi(argv[1]);
    corpus_dir = argv[2];
    Criterion c;
    try {
        switch (which) {
        case 1: criterion_1(c); break;
        case 2: criterion_2(c); break;
        case 3: criterion_3(c); break;
        case 4: criterion_4(c); break;
        case 5: criterion_5(c); break;
        case 6: criterion_6(c); break;
        default: std::cerr << "unknown criterion " << which << "\n"; return 2;
        }
    } catch (const std::exception& e) {
        std::cout << "  [X ] criterion aborted: " << e.what() << "\n";
        c.pass = false;
    }
    std::cout << "criterion " << which << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
    return c.pass ? 0 : 1;
}
