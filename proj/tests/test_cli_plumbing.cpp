#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include <socle/report.hpp>
#include <socle/ringfile.hpp>

#include "helpers.hpp"

using namespace socle;

namespace {

RingFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_ring_file_text(in, "<test>");
}

const std::string kExample = R"(# example file
char = 32003
vars = x, y, z, w
relations = x*w; y*w; z*w

[ideal q]
gens = x - w; y - w; z - w

[options]
max-n = 6
seed = 42
depth = 1..3
trials = 8

[expect]
dim = 3
lengths = 2, 6, 13
)";

} // namespace

TEST_CASE("ring file round trip") {
    RingFile rf = parse_text(kExample);
    REQUIRE(rf.characteristic == 32003);
    REQUIRE(rf.vars == std::vector<std::string>{"x", "y", "z", "w"});
    REQUIRE(rf.relations == std::vector<std::string>{"x*w", "y*w", "z*w"});
    REQUIRE(rf.ideals.size() == 1);
    REQUIRE(rf.ideals[0].first == "q");
    REQUIRE(rf.ideals[0].second ==
            std::vector<std::string>{"x - w", "y - w", "z - w"});
    REQUIRE(rf.options.max_n == 6);
    REQUIRE(rf.options.seed == 42);
    REQUIRE(rf.options.depth_lo == 1);
    REQUIRE(rf.options.depth_hi == 3);
    REQUIRE(rf.options.trials == 8);
    REQUIRE(rf.expect.at("dim") == "3");
    REQUIRE(rf.expect.at("lengths") == "2, 6, 13");

    auto R = rf.ring();
    REQUIRE(R->nvars() == 4);
    REQUIRE(R->relations().size() == 3);
    // the parsed ring matches the fixture built in code
    auto P = fixtures::paper_ring();
    REQUIRE(krull_dimension(*R) == krull_dimension(*P));
}

TEST_CASE("ring file rejects unknown keys and malformed input") {
    REQUIRE_THROWS_AS(parse_text("char = 32003\nvars = x\nbogus = 1\n"), input_error);
    REQUIRE_THROWS_AS(parse_text("char = 32003\nvars = x\n[ideal q]\nfoo = 1\n"),
                      input_error);
    REQUIRE_THROWS_AS(parse_text("char = 32003\nvars = x\n[options]\nspeed = 9\n"),
                      input_error);
    REQUIRE_THROWS_AS(parse_text("char = 32003\nvars = x\n[weird]\n"), input_error);
    REQUIRE_THROWS_AS(parse_text("vars = x\n"), input_error);          // missing char
    REQUIRE_THROWS_AS(parse_text("char = 32003\n"), input_error);      // missing vars
    REQUIRE_THROWS_AS(parse_text("char = two\nvars = x\n"), input_error);
    REQUIRE_THROWS_AS(parse_text("char = 32003\nvars = x\nnoequals\n"), input_error);
    REQUIRE_THROWS_AS(parse_text("char = 32003\nvars = x\n[ideal ]\n"), input_error);
    REQUIRE_THROWS_AS(parse_ring_file("/nonexistent/path.ring"), input_error);
}

TEST_CASE("ring file comments, blank lines, and single-depth option") {
    RingFile rf = parse_text("char = 5 # small field\n\nvars = x\n[options]\ndepth = 2\n");
    REQUIRE(rf.characteristic == 5);
    REQUIRE(rf.options.depth_lo == 2);
    REQUIRE(rf.options.depth_hi == 2);
}

TEST_CASE("report document schema and provenance") {
    RingFile rf = parse_text(kExample);
    ReportDocument doc(rf, "coeffs", {{"ideal", "q"}}, 42);
    doc.add_value("e", "hilbert_coefficients", std::vector<long long>{1, 0, 1, 0});
    doc.add_ledger({{"fact2c-i", true, 2, 2, "note"}, {"fact2c-ii", false, 2, 1, ""}});
    auto j = doc.finish();

    REQUIRE(j["ring"]["char"] == 32003);
    REQUIRE(j["ring"]["vars"].size() == 4);
    REQUIRE(j["command"] == "coeffs");
    REQUIRE(j["config"]["ideal"] == "q");
    REQUIRE(j["values"].size() == 1);
    REQUIRE(j["values"][0]["name"] == "e");
    REQUIRE(j["values"][0]["operation"] == "hilbert_coefficients");
    REQUIRE(j["values"][0]["value"] == nlohmann::ordered_json({1, 0, 1, 0}));
    REQUIRE(j["ledger"].size() == 2);
    REQUIRE(j["ledger"][0]["statement"] == "fact2c-i");
    REQUIRE(j["ledger"][0]["holds"] == true);
    REQUIRE(j["ledger"][1]["holds"] == false);
    REQUIRE(j["ledger"][1]["lhs"] == 2);
    REQUIRE(j["ledger"][1]["rhs"] == 1);
    REQUIRE(j["provenance"]["tool_version"] == kToolVersion);
    REQUIRE(j["provenance"]["seed"] == 42);

    // same command/config/seed, same hash; different seed, different hash
    ReportDocument again(rf, "coeffs", {{"ideal", "q"}}, 42);
    REQUIRE(again.finish()["provenance"]["config_hash"] ==
            j["provenance"]["config_hash"]);
    ReportDocument other(rf, "coeffs", {{"ideal", "q"}}, 43);
    REQUIRE(other.finish()["provenance"]["config_hash"] !=
            j["provenance"]["config_hash"]);
}

TEST_CASE("corpus fixtures on disk parse cleanly") {
    const char* names[] = {"paper-example", "two-planes", "hypersurface",
                           "monomial-curve", "nonsat", "regular"};
    for (const char* n : names) {
        std::string path = std::string(SOCLE_CORPUS_DIR) + "/" + n + ".ring";
        RingFile rf = parse_ring_file(path);
        auto R = rf.ring();
        REQUIRE(R->nvars() >= 2);
        REQUIRE(!rf.expect.empty());
        for (const auto& [name, gens] : rf.ideals) {
            for (const auto& g : gens) REQUIRE(!R->parse_poly(g).is_zero());
        }
    }
}
