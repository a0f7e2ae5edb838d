// socle: exact invariants of graded quotient rings from the command line.
//
// Commands: hilbert, ir, coeffs, classify, xi-sample, verify, resolve,
// corpus-check. Exit codes: 0 success, 1 mathematical failure (e.g. a fit or
// stabilization that does not settle), 2 input error.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <socle/report.hpp>

using namespace socle;
using nlohmann::ordered_json;

namespace {

struct CommonFlags {
    std::string ring_path;
    std::string ideal_name;
    std::string json_path;
    std::string depth_range;
    std::optional<std::uint32_t> max_n;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> trials;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool needs_ideal) {
    cmd->add_option("ring", f.ring_path, "ring description file")->required();
    if (needs_ideal) cmd->add_option("--ideal", f.ideal_name, "named ideal from the file");
    cmd->add_option("--json", f.json_path, "write a JSON report to this path");
    cmd->add_option(
        "--max-n", [&f](const CLI::results_t& r) { f.max_n = std::stoul(r[0]); return true; },
        "largest power index in tables");
    cmd->add_option(
        "--seed", [&f](const CLI::results_t& r) { f.seed = std::stoull(r[0]); return true; },
        "seed for generated parameter ideals");
    cmd->add_option(
        "--trials", [&f](const CLI::results_t& r) { f.trials = std::stoul(r[0]); return true; },
        "trials per depth for sampling");
    cmd->add_option("--depth", f.depth_range, "depth or depth range, e.g. 2 or 1..3");
}

struct RunContext {
    RingFile rf;
    std::shared_ptr<const RingDescriptor> R;
    std::uint32_t max_n = 6;
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t trials = 4;
    std::uint32_t depth_lo = 1, depth_hi = 3;
};

RunContext make_context(const CommonFlags& f) {
    RunContext ctx;
    ctx.rf = parse_ring_file(f.ring_path);
    ctx.R = ctx.rf.ring();
    if (ctx.rf.options.max_n) ctx.max_n = *ctx.rf.options.max_n;
    if (ctx.rf.options.seed) ctx.seed = *ctx.rf.options.seed;
    if (ctx.rf.options.trials) ctx.trials = *ctx.rf.options.trials;
    if (ctx.rf.options.depth_lo) ctx.depth_lo = *ctx.rf.options.depth_lo;
    if (ctx.rf.options.depth_hi) ctx.depth_hi = *ctx.rf.options.depth_hi;
    if (f.max_n) ctx.max_n = *f.max_n;
    if (f.seed) ctx.seed = *f.seed;
    if (f.trials) ctx.trials = *f.trials;
    if (!f.depth_range.empty()) {
        auto dots = f.depth_range.find("..");
        try {
            if (dots == std::string::npos) {
                ctx.depth_lo = ctx.depth_hi =
                    static_cast<std::uint32_t>(std::stoul(f.depth_range));
            } else {
                ctx.depth_lo =
                    static_cast<std::uint32_t>(std::stoul(f.depth_range.substr(0, dots)));
                ctx.depth_hi =
                    static_cast<std::uint32_t>(std::stoul(f.depth_range.substr(dots + 2)));
            }
        } catch (const std::exception&) {
            throw input_error("--depth expects INT or INT..INT, got '" + f.depth_range + "'");
        }
    }
    return ctx;
}

Ideal named_ideal(const RunContext& ctx, const std::string& name) {
    if (name.empty()) throw input_error("this command needs --ideal NAME");
    const auto* gens = ctx.rf.find_ideal(name);
    if (!gens)
        throw input_error("ring file has no ideal named '" + name + "'");
    std::vector<Polynomial> ps;
    for (const auto& s : *gens) ps.push_back(ctx.R->parse_poly(s));
    return make_ideal(ctx.R, std::move(ps), true);
}

ordered_json base_config(const RunContext& ctx, const CommonFlags& f) {
    ordered_json cfg;
    cfg["ring_file"] = f.ring_path;
    if (!f.ideal_name.empty()) cfg["ideal"] = f.ideal_name;
    cfg["max_n"] = ctx.max_n;
    cfg["trials"] = ctx.trials;
    cfg["depth"] = std::to_string(ctx.depth_lo) + ".." + std::to_string(ctx.depth_hi);
    return cfg;
}

void emit(ReportDocument& doc, const std::string& json_path) {
    if (!json_path.empty()) doc.write(json_path);
}

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
}

// ---- commands -------------------------------------------------------------

int cmd_table(const CommonFlags& f, bool irreducibility) {
    RunContext ctx = make_context(f);
    Ideal I = named_ideal(ctx, f.ideal_name);
    LengthTable t = irreducibility
                        ? irreducibility_table(*ctx.R, I, ctx.max_n)
                        : hilbert_samuel_table(*ctx.R, I, ctx.max_n);
    const char* label = irreducibility ? "ir(I^{n+1})" : "l(R/I^{n+1})";
    std::cout << "n : " << label << "\n";
    for (std::size_t n = 0; n < t.entries.size(); ++n)
        std::cout << n << " : " << t.entries[n] << "\n";
    ReportDocument doc(ctx.rf, irreducibility ? "ir" : "hilbert", base_config(ctx, f),
                       ctx.seed);
    doc.add_value(irreducibility ? "ir_series" : "lengths",
                  irreducibility ? "irreducibility_table" : "hilbert_samuel_table",
                  t.entries);
    emit(doc, f.json_path);
    return 0;
}

int cmd_coeffs(const CommonFlags& f, bool colon_socle) {
    RunContext ctx = make_context(f);
    Ideal I = named_ideal(ctx, f.ideal_name);
    if (colon_socle) I = colon(I, maximal_ideal(ctx.R));
    CoefficientVector e = hilbert_coefficients(*ctx.R, I);
    std::cout << "e = (" << join(e.coeffs) << ")\n";
    std::cout << "postulation index: " << e.postulation << "\n";
    ordered_json cfg = base_config(ctx, f);
    cfg["colon_socle"] = colon_socle;
    ReportDocument doc(ctx.rf, "coeffs", std::move(cfg), ctx.seed);
    doc.add_value("e", "hilbert_coefficients", e.coeffs);
    doc.add_value("postulation", "hilbert_coefficients", e.postulation);
    emit(doc, f.json_path);
    return 0;
}

ordered_json h_to_json(const std::vector<std::optional<std::uint64_t>>& h) {
    ordered_json out = ordered_json::array();
    for (const auto& v : h)
        out.push_back(v ? ordered_json(*v) : ordered_json(nullptr));
    return out;
}

int cmd_classify(const CommonFlags& f) {
    RunContext ctx = make_context(f);
    ClassificationReport rep = classify_ring(ctx.R, ctx.seed, ctx.trials);
    std::cout << "dim = " << rep.d << "\n"
              << "e_0(q) = " << rep.e0 << ", e_1(q) = " << rep.e1
              << ", ir(q) = " << rep.ir_q << "\n";
    if (rep.stable)
        std::cout << "stable value N = " << rep.stable->value << " (depth "
                  << rep.stable->depth << ")\n";
    std::cout << "CM: " << (rep.cm ? "yes" : "no")
              << ", Gorenstein: " << (rep.gorenstein ? "yes" : "no")
              << ", generalized CM: " << (rep.gcm ? "yes" : "no") << "\n";
    if (rep.u_zero) {
        std::cout << "unmixed component u = 0\n";
    } else {
        std::cout << "unmixed component u = (";
        for (std::size_t i = 0; i < rep.u_gens.size(); ++i)
            std::cout << (i ? ", " : "") << rep.u_gens[i];
        std::cout << "), dim u = " << rep.dim_u << "\n";
    }
    std::cout << "|Xi_1 sample| = " << rep.xi1_distinct << "\n";
    for (const auto& e : rep.ledger)
        std::cout << "  [" << (e.holds ? "ok" : "FAIL") << "] " << e.id << ": " << e.lhs
                  << (e.holds ? " vs " : " != ") << e.rhs << "\n";
    for (const auto& fl : rep.failures) std::cout << "  [stage failed] " << fl << "\n";

    ReportDocument doc(ctx.rf, "classify", base_config(ctx, f), ctx.seed);
    doc.add_value("dim", "krull_dimension", rep.d);
    doc.add_value("e0", "hilbert_coefficients", rep.e0);
    doc.add_value("e1", "hilbert_coefficients", rep.e1);
    doc.add_value("ir_q", "index_of_reducibility", rep.ir_q);
    if (rep.stable)
        doc.add_value("stable_value", "stable_value_estimate",
                      ordered_json{{"value", rep.stable->value},
                                   {"depth", rep.stable->depth}});
    doc.add_value("cm", "cm_test", rep.cm);
    doc.add_value("gorenstein", "gorenstein_test", rep.gorenstein);
    doc.add_value("gcm", "is_generalized_cm", rep.gcm);
    doc.add_value("u_gens", "unmixed_component", rep.u_gens);
    doc.add_value("dim_u", "unmixed_component", rep.u_zero ? -1 : rep.dim_u);
    doc.add_value("h", "ext_report", h_to_json(rep.h));
    doc.add_value("r", "ext_report", rep.r);
    doc.add_value("xi1_distinct", "xi_sample", rep.xi1_distinct);
    doc.add_value("stage_failures", "classify_ring", rep.failures);
    doc.add_ledger(rep.ledger);
    emit(doc, f.json_path);
    return 0;
}

int cmd_xi(const CommonFlags& f, std::size_t index) {
    RunContext ctx = make_context(f);
    XiSample xs = xi_sample(ctx.R, index, ctx.trials, ctx.depth_lo, ctx.depth_hi, ctx.seed);
    std::cout << "xi_" << index << " samples:";
    for (std::size_t k = 0; k < xs.values.size(); ++k)
        std::cout << " " << xs.values[k] << "(t=" << xs.depths[k] << ")";
    std::cout << "\ndistinct values: " << xs.distinct << "\n";
    for (const auto& fl : xs.failures) std::cout << "trial failed: " << fl << "\n";
    ordered_json cfg = base_config(ctx, f);
    cfg["index"] = index;
    ReportDocument doc(ctx.rf, "xi-sample", std::move(cfg), ctx.seed);
    doc.add_value("values", "xi_sample", xs.values);
    doc.add_value("depths", "xi_sample", xs.depths);
    doc.add_value("distinct", "xi_sample", xs.distinct);
    doc.add_value("trial_failures", "xi_sample", xs.failures);
    emit(doc, f.json_path);
    // a sample with no successful trial is a mathematical failure
    return xs.values.empty() ? 1 : 0;
}

int cmd_verify(const CommonFlags& f) {
    RunContext ctx = make_context(f);
    Ideal q = named_ideal(ctx, f.ideal_name);
    std::vector<LedgerEntry> ledger;
    int d = krull_dimension(*ctx.R);
    if (d >= 2)
        for (auto& e : verify_reduction_lemmas(ctx.R, q)) ledger.push_back(std::move(e));
    ExtReport rep = ext_report(ctx.R);
    if (is_generalized_cm(rep).is_gcm)
        for (auto& e : verify_gcm_formulas(ctx.R, ctx.seed)) ledger.push_back(std::move(e));
    if (d >= 2)
        for (auto& e : verify_inequality_chain(ctx.R, q, ctx.seed))
            ledger.push_back(std::move(e));
    for (const auto& e : ledger)
        std::cout << "[" << (e.holds ? "ok" : "FAIL") << "] " << e.id << ": lhs=" << e.lhs
                  << " rhs=" << e.rhs << (e.note.empty() ? "" : "  (" + e.note + ")")
                  << "\n";
    ReportDocument doc(ctx.rf, "verify", base_config(ctx, f), ctx.seed);
    doc.add_ledger(ledger);
    emit(doc, f.json_path);
    return 0;
}

int cmd_resolve(const CommonFlags& f) {
    RunContext ctx = make_context(f);
    FreeResolution res = free_resolution(ctx.R);
    std::cout << "betti numbers:";
    for (auto b : res.betti()) std::cout << " " << b;
    std::cout << "\n";
    ExtReport rep = ext_report(ctx.R);
    GcmVerdict v = is_generalized_cm(rep);
    std::cout << "dim = " << rep.d << ", generalized CM: " << (v.is_gcm ? "yes" : "no")
              << "\n";
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const ExtEntry& e = rep.entries[i];
        if (e.mu == 0) continue;
        std::cout << "Ext^" << i << ": mu = " << e.mu << ", dim = " << e.dim
                  << ", length = " << (e.length ? std::to_string(*e.length) : "infinite")
                  << "\n";
    }
    ReportDocument doc(ctx.rf, "resolve", base_config(ctx, f), ctx.seed);
    doc.add_value("betti", "free_resolution", res.betti());
    doc.add_value("gcm", "is_generalized_cm", v.is_gcm);
    doc.add_value("h", "ext_report", h_to_json(v.h));
    doc.add_value("r", "ext_report", v.r);
    emit(doc, f.json_path);
    return 0;
}

// ---- corpus checking ------------------------------------------------------

std::vector<long long> parse_series(const std::string& s) {
    std::vector<long long> out;
    for (const auto& item : detail::split_list(s, ',')) out.push_back(std::stoll(item));
    return out;
}

bool parse_bool(const std::string& key, const std::string& s) {
    if (s == "true" || s == "yes") return true;
    if (s == "false" || s == "no") return false;
    throw input_error("expectation '" + key + "' must be true/false, got '" + s + "'");
}

int check_fixture(const RingFile& rf, std::vector<std::string>& diffs) {
    auto R = rf.ring();
    std::uint64_t seed = rf.options.seed.value_or(kDefaultSeed);
    auto mismatch = [&](const std::string& key, const std::string& want,
                        const std::string& got) {
        diffs.push_back(rf.source_path + ": " + key + ": expected " + want + ", got " + got);
    };
    auto q_ideal = [&]() {
        const auto* gens = rf.find_ideal("q");
        if (!gens)
            throw input_error(rf.source_path + ": expectation needs an ideal named 'q'");
        std::vector<Polynomial> ps;
        for (const auto& s : *gens) ps.push_back(R->parse_poly(s));
        return make_ideal(R, std::move(ps), true);
    };
    for (const auto& [key, raw] : rf.expect) {
        if (key == "dim") {
            long long got = krull_dimension(*R);
            if (got != std::stoll(raw)) mismatch(key, raw, std::to_string(got));
        } else if (key == "lengths" || key == "ir-series") {
            std::vector<long long> want = parse_series(raw);
            std::uint32_t N = static_cast<std::uint32_t>(want.size()) - 1;
            LengthTable t = key == "lengths"
                                ? hilbert_samuel_table(*R, q_ideal(), N)
                                : irreducibility_table(*R, q_ideal(), N);
            if (t.entries != want) mismatch(key, raw, join(t.entries));
        } else if (key == "e" || key == "e-colon") {
            Ideal I = q_ideal();
            if (key == "e-colon") I = colon(I, maximal_ideal(R));
            CoefficientVector e = hilbert_coefficients(*R, I);
            if (e.coeffs != parse_series(raw)) mismatch(key, raw, join(e.coeffs));
        } else if (key == "f") {
            CoefficientVector fe = f_coefficients(*R, q_ideal());
            if (fe.coeffs != parse_series(raw)) mismatch(key, raw, join(fe.coeffs));
        } else if (key == "stable") {
            long long got = stable_value_estimate(R, 4, seed).value;
            if (got != std::stoll(raw)) mismatch(key, raw, std::to_string(got));
        } else if (key == "cm") {
            bool got = cm_test(R, seed);
            if (got != parse_bool(key, raw)) mismatch(key, raw, got ? "true" : "false");
        } else if (key == "gorenstein") {
            bool got = gorenstein_test(R, seed);
            if (got != parse_bool(key, raw)) mismatch(key, raw, got ? "true" : "false");
        } else if (key == "gcm") {
            bool got = is_generalized_cm(ext_report(R)).is_gcm;
            if (got != parse_bool(key, raw)) mismatch(key, raw, got ? "true" : "false");
        } else if (key == "betti") {
            auto betti = free_resolution(R).betti();
            std::vector<long long> got(betti.begin(), betti.end());
            if (got != parse_series(raw)) mismatch(key, raw, join(got));
        } else if (key == "h0") {
            long long got = static_cast<long long>(h0_direct(R));
            if (got != std::stoll(raw)) mismatch(key, raw, std::to_string(got));
        } else {
            throw input_error(rf.source_path + ": unknown expectation '" + key + "'");
        }
    }
    return 0;
}

int cmd_corpus_check(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw input_error("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".ring") files.push_back(entry.path());
    if (files.empty()) throw input_error("no .ring files in " + dir);
    std::sort(files.begin(), files.end());
    std::vector<std::string> diffs;
    for (const auto& p : files) {
        RingFile rf = parse_ring_file(p.string());
        std::size_t before = diffs.size();
        check_fixture(rf, diffs);
        std::cout << p.filename().string() << ": "
                  << (diffs.size() == before ? "ok" : "MISMATCH") << " ("
                  << rf.expect.size() << " expectations)\n";
    }
    for (const auto& d : diffs) std::cout << "  " << d << "\n";
    std::cout << (diffs.empty() ? "corpus check passed" : "corpus check FAILED") << " ("
              << files.size() << " fixtures)\n";
    return diffs.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert coefficients, socles, and classification of graded "
                 "quotient rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("socle ") + kToolVersion);

    CommonFlags fh, fi, fc, fcl, fx, fv, fr;
    bool colon_socle = false;
    std::size_t xi_index = 1;
    std::string corpus_dir;

    add_common(app.add_subcommand("hilbert", "Hilbert-Samuel length table"), fh, true);
    add_common(app.add_subcommand("ir", "index-of-reducibility table"), fi, true);
    auto* coeffs = app.add_subcommand("coeffs", "fitted Hilbert coefficients");
    add_common(coeffs, fc, true);
    coeffs->add_flag("--colon-socle", colon_socle, "fit the socle colon ideal q:m instead");
    add_common(app.add_subcommand("classify", "full classification report"), fcl, false);
    auto* xi = app.add_subcommand("xi-sample", "sample Xi_i over deep parameter ideals");
    add_common(xi, fx, false);
    xi->add_option("--index", xi_index, "coefficient index i (default 1)");
    add_common(app.add_subcommand("verify", "verification ledgers for a parameter ideal"),
               fv, true);
    add_common(app.add_subcommand("resolve", "minimal free resolution and Ext summary"),
               fr, false);
    app.add_subcommand("corpus-check", "check every fixture's expectations")
        ->add_option("dir", corpus_dir, "directory of .ring files")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("hilbert")) return cmd_table(fh, false);
        if (app.got_subcommand("ir")) return cmd_table(fi, true);
        if (app.got_subcommand("coeffs")) return cmd_coeffs(fc, colon_socle);
        if (app.got_subcommand("classify")) return cmd_classify(fcl);
        if (app.got_subcommand("xi-sample")) return cmd_xi(fx, xi_index);
        if (app.got_subcommand("verify")) return cmd_verify(fv);
        if (app.got_subcommand("resolve")) return cmd_resolve(fr);
        if (app.got_subcommand("corpus-check")) return cmd_corpus_check(corpus_dir);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        std::cerr << "mathematical failure: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
