#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <socle/groebner.hpp>
#include <socle/parser.hpp>

#include "helpers.hpp"

using namespace socle;

namespace {

const PrimeField F(32003);

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts,
                                  const std::vector<std::string>& names) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, F, names));
    return out;
}

bool contains_poly(const std::vector<Polynomial>& v, const Polynomial& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

} // namespace

TEST_CASE("reduced basis of monomial and principal ideals") {
    std::vector<std::string> n2{"x", "y"};
    auto gb = groebner_basis(parse_all({"x", "y"}, n2), MonomialOrder::grevlex(), F, 2);
    REQUIRE(gb.gens.size() == 2);
    REQUIRE(contains_poly(gb.gens, parse_polynomial("x", F, n2)));
    REQUIRE(contains_poly(gb.gens, parse_polynomial("y", F, n2)));

    std::vector<std::string> n3{"x", "y", "z"};
    auto pr = groebner_basis(parse_all({"y^2 - x*z"}, n3), MonomialOrder::grevlex(), F, 3);
    REQUIRE(pr.gens.size() == 1);
    REQUIRE(pr.gens[0] == parse_polynomial("y^2 - x*z", F, n3));
}

TEST_CASE("paper-ring basis contains w^2 and decides membership") {
    std::vector<std::string> n4{"x", "y", "z", "w"};
    auto gens = parse_all({"x*w", "y*w", "z*w", "x - w", "y - w", "z - w"}, n4);
    auto gb = groebner_basis(gens, MonomialOrder::grevlex(), F, 4);
    Polynomial w2 = parse_polynomial("w^2", F, n4);
    REQUIRE(contains_poly(gb.gens, w2));
    REQUIRE(normal_form(w2, gb).is_zero());
    REQUIRE(normal_form(parse_polynomial("1", F, n4), gb) ==
            parse_polynomial("1", F, n4));
}

TEST_CASE("normal form basics") {
    std::vector<std::string> n2{"x", "y"};
    auto gb = groebner_basis(parse_all({"x"}, n2), MonomialOrder::grevlex(), F, 2);
    REQUIRE(normal_form(parse_polynomial("x^2", F, n2), gb).is_zero());
    auto gbxy = groebner_basis(parse_all({"x", "y"}, n2), MonomialOrder::grevlex(), F, 2);
    Polynomial one = parse_polynomial("1", F, n2);
    REQUIRE(normal_form(one, gbxy) == one);
    // idempotence
    Polynomial f = parse_polynomial("x^3*y + x + y^2 + 5", F, n2);
    Polynomial r = normal_form(f, gbxy);
    REQUIRE(normal_form(r, gbxy) == r);
}

TEST_CASE("reduced basis is invariant under generator reordering") {
    std::vector<std::string> n4{"x", "y", "z", "w"};
    std::vector<std::string> texts{"x*w", "y*w", "z*w", "x - w", "y - w", "z - w"};
    auto ref = groebner_basis(parse_all(texts, n4), MonomialOrder::grevlex(), F, 4);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 10; ++it) {
        std::shuffle(texts.begin(), texts.end(), rng);
        auto gb = groebner_basis(parse_all(texts, n4), MonomialOrder::grevlex(), F, 4);
        REQUIRE(gb.gens == ref.gens);
    }
}

TEST_CASE("ideal absorbs products: NF(f*g) = 0 when NF(f) = 0") {
    std::vector<std::string> n3{"x", "y", "z"};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 2), expd(0, 2);
    std::uniform_int_distribution<fp_t> coeff(0, 32002);
    auto gens = parse_all({"x*y - z^2", "y^2 - x*z"}, n3);
    auto gb = groebner_basis(gens, MonomialOrder::grevlex(), F, 3);
    for (int it = 0; it < 50; ++it) {
        // random element of the ideal
        Polynomial f(F, 3);
        for (const auto& g : gens) {
            std::vector<exp_t> e{static_cast<exp_t>(expd(rng)),
                                 static_cast<exp_t>(expd(rng)),
                                 static_cast<exp_t>(expd(rng))};
            f = f + g * Polynomial::term(F, Monomial(std::move(e)), coeff(rng));
        }
        REQUIRE(normal_form(f, gb).is_zero());
        std::vector<exp_t> e{static_cast<exp_t>(expd(rng)), 0,
                             static_cast<exp_t>(expd(rng))};
        Polynomial g = Polynomial::term(F, Monomial(std::move(e)), 1 + coeff(rng) % 32002);
        REQUIRE(normal_form(f * g, gb).is_zero());
    }
}

TEST_CASE("syzygies: Koszul relations and regular elements") {
    std::vector<std::string> n2{"x", "y"};
    auto koszul = syzygies(parse_all({"x", "y"}, n2), MonomialOrder::grevlex(), F, 2);
    REQUIRE(koszul.size() == 1);
    Polynomial x = parse_polynomial("x", F, n2);
    Polynomial y = parse_polynomial("y", F, n2);
    REQUIRE((koszul[0] == ModuleElement{y, -x} || koszul[0] == ModuleElement{-y, x}));

    auto none = syzygies(parse_all({"x^2 + y^2"}, n2), MonomialOrder::grevlex(), F, 2);
    REQUIRE(none.empty());

    std::vector<std::string> n4{"x", "y", "z", "w"};
    auto mono = syzygies(parse_all({"x*w", "y*w"}, n4), MonomialOrder::grevlex(), F, 4);
    REQUIRE(mono.size() == 1);
    Polynomial xp = parse_polynomial("x", F, n4);
    Polynomial yp = parse_polynomial("y", F, n4);
    REQUIRE((mono[0] == ModuleElement{yp, -xp} || mono[0] == ModuleElement{-yp, xp}));
}

TEST_CASE("syzygy soundness and Koszul rank counts") {
    std::vector<std::string> n3{"x", "y", "z"};
    // regular sequence: first syzygy module of (x, y, z) is generated by the
    // C(3,2) = 3 Koszul relations
    auto gens = parse_all({"x", "y", "z"}, n3);
    auto syz = syzygies(gens, MonomialOrder::grevlex(), F, 3);
    REQUIRE(syz.size() == 3);
    for (const auto& s : syz) {
        Polynomial acc(F, 3);
        for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + s[i] * gens[i];
        REQUIRE(acc.is_zero());
    }

    // random inhomogeneous generators: soundness only
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<fp_t> coeff(1, 32002);
    for (int it = 0; it < 10; ++it) {
        std::vector<Polynomial> g;
        for (int k = 0; k < 3; ++k) {
            Polynomial p(F, 3);
            for (int t = 0; t < 3; ++t) {
                std::vector<exp_t> e{static_cast<exp_t>(rng() % 3),
                                     static_cast<exp_t>(rng() % 3),
                                     static_cast<exp_t>(rng() % 3)};
                p = p + Polynomial::term(F, Monomial(std::move(e)), coeff(rng));
            }
            g.push_back(p);
        }
        auto s = syzygies(g, MonomialOrder::grevlex(), F, 3);
        for (const auto& rel : s) {
            Polynomial acc(F, 3);
            for (std::size_t i = 0; i < g.size(); ++i) acc = acc + rel[i] * g[i];
            REQUIRE(acc.is_zero());
        }
    }
}

TEST_CASE("module groebner bases and membership in S^2") {
    std::vector<std::string> n2{"x", "y"};
    Polynomial x = parse_polynomial("x", F, n2);
    Polynomial y = parse_polynomial("y", F, n2);
    Polynomial zero(F, 2);
    std::vector<ModuleElement> gens{{x, y}, {y, x}};
    auto gb = module_groebner_basis(gens, 2, MonomialOrder::grevlex(), F, 2);
    // x*(x,y) - y*(y,x) = (x^2 - y^2, 0) is in the module
    ModuleElement member{x * x - y * y, zero};
    auto nf = normal_form(member, gb);
    REQUIRE(nf[0].is_zero());
    REQUIRE(nf[1].is_zero());
    ModuleElement non_member{x, zero};
    auto nf2 = normal_form(non_member, gb);
    REQUIRE(!(nf2[0].is_zero() && nf2[1].is_zero()));
}

TEST_CASE("zero generators yield unit syzygies") {
    std::vector<std::string> n2{"x", "y"};
    Polynomial x = parse_polynomial("x", F, n2);
    Polynomial zero(F, 2);
    auto syz = syzygies(std::vector<Polynomial>{x, zero}, MonomialOrder::grevlex(), F, 2);
    REQUIRE(syz.size() == 1);
    REQUIRE(syz[0][0].is_zero());
    REQUIRE(syz[0][1] == parse_polynomial("1", F, n2));
}
