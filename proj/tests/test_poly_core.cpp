#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <socle/parser.hpp>
#include <socle/ring.hpp>

#include "helpers.hpp"

using namespace socle;

namespace {

Polynomial random_poly(std::mt19937_64& rng, const PrimeField& F, std::size_t nvars) {
    std::uniform_int_distribution<int> nterms(0, 6), expd(0, 4);
    std::uniform_int_distribution<fp_t> coeff(0, F.modulus() - 1);
    Polynomial p(F, nvars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<exp_t> e(nvars);
        for (auto& x : e) x = static_cast<exp_t>(expd(rng));
        p = p + Polynomial::term(F, Monomial(std::move(e)), coeff(rng));
    }
    return p;
}

Monomial random_mono(std::mt19937_64& rng, std::size_t nvars) {
    std::uniform_int_distribution<int> expd(0, 5);
    std::vector<exp_t> e(nvars);
    for (auto& x : e) x = static_cast<exp_t>(expd(rng));
    return Monomial(std::move(e));
}

} // namespace

TEST_CASE("field axioms on random samples") {
    PrimeField F(32003);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<fp_t> d(1, F.modulus() - 1);
    for (int i = 0; i < 500; ++i) {
        fp_t a = d(rng), b = d(rng);
        REQUIRE(F.mul(a, F.inv(a)) == 1);
        REQUIRE(F.add(a, F.neg(a)) == 0);
        REQUIRE(F.mul(a, b) == F.mul(b, a));
        REQUIRE(F.sub(a, b) == F.neg(F.sub(b, a)));
    }
    REQUIRE_THROWS_AS(PrimeField(32004), input_error);
    REQUIRE_THROWS_AS(F.inv(0), input_error);
}

TEST_CASE("frobenius additivity in small characteristic") {
    PrimeField F(5);
    std::vector<std::string> names{"x", "y"};
    Polynomial x = Polynomial::variable(F, 2, 0);
    Polynomial y = Polynomial::variable(F, 2, 1);
    Polynomial lhs = (x + y).pow(5);
    Polynomial rhs = x.pow(5) + y.pow(5);
    REQUIRE(lhs == rhs);
}

TEST_CASE("parser examples") {
    auto R = fixtures::paper_ring();
    REQUIRE(R->parse_poly("0").is_zero());
    REQUIRE(R->parse_poly("x - x").is_zero());
    Polynomial f = R->parse_poly("x^2*w + 3");
    REQUIRE(f.term_count() == 2);
    auto lt = f.leading_term(MonomialOrder::grevlex());
    REQUIRE(lt.mono == R->parse_poly("x^2*w").leading_term(MonomialOrder::grevlex()).mono);

    REQUIRE_THROWS_AS(R->parse_poly("q + 1"), input_error);
    REQUIRE_THROWS_AS(R->parse_poly("x +"), input_error);
    REQUIRE_THROWS_AS(R->parse_poly("x^9999999999"), input_error);
}

TEST_CASE("arithmetic identities") {
    PrimeField F(32003);
    std::vector<std::string> names{"x", "y"};
    Polynomial x = Polynomial::variable(F, 2, 0);
    Polynomial y = Polynomial::variable(F, 2, 1);
    REQUIRE((x + y) * (x - y) == x * x - y * y);
    Polynomial a = parse_polynomial("3*x^2 + 2*x*y - 7", F, names);
    REQUIRE(a * Polynomial::constant(F, 2, 1) == a);
    REQUIRE((a - a).is_zero());
}

TEST_CASE("leading terms under different orders") {
    PrimeField F(32003);
    std::vector<std::string> names{"x", "y", "z"};
    Polynomial f = parse_polynomial("x^2*y + x*y^2", F, names);
    REQUIRE(f.leading_term(MonomialOrder::lex()).mono ==
            parse_polynomial("x^2*y", F, names).terms()[0].mono);
    REQUIRE(f.leading_term(MonomialOrder::grevlex()).mono ==
            parse_polynomial("x^2*y", F, names).terms()[0].mono);
    Polynomial g = parse_polynomial("x^3 + y^3 + z^3", F, names);
    REQUIRE(g.leading_term(MonomialOrder::grevlex()).mono ==
            parse_polynomial("x^3", F, names).terms()[0].mono);
    REQUIRE_THROWS_AS(Polynomial(F, 3).leading_term(MonomialOrder::grevlex()), input_error);
}

TEST_CASE("order laws on random monomial triples") {
    std::mt19937_64 rng(7);
    for (MonomialOrder ord :
         {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elim(2)}) {
        for (int it = 0; it < 300; ++it) {
            Monomial a = random_mono(rng, 4), b = random_mono(rng, 4),
                     c = random_mono(rng, 4);
            // totality and antisymmetry
            REQUIRE(ord.compare(a, b) == -ord.compare(b, a));
            REQUIRE((ord.compare(a, b) == 0) == (a == b));
            // transitivity
            if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0)
                REQUIRE(ord.compare(a, c) <= 0);
            // multiplicativity
            if (ord.compare(a, b) < 0) REQUIRE(ord.compare(a * c, b * c) < 0);
            // global: 1 is minimal
            REQUIRE(ord.compare(a, Monomial(4)) >= 0);
        }
    }
}

TEST_CASE("parser round trip on random polynomials") {
    PrimeField F(32003);
    std::vector<std::string> names{"x", "y", "z", "w"};
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
        Polynomial f = random_poly(rng, F, 4);
        REQUIRE(parse_polynomial(print_polynomial(f, names), F, names) == f);
    }
}

TEST_CASE("ring descriptor validation and weight detection") {
    REQUIRE(fixtures::paper_ring()->standard_graded());
    auto curve = fixtures::monomial_curve();
    REQUIRE(curve->weights() == std::vector<exp_t>{3, 4, 5});
    REQUIRE_THROWS_AS(fixtures::make_ring({"x", "x"}, {}), input_error);
    // inhomogeneous J for every positive weighting
    REQUIRE_THROWS_AS(fixtures::make_ring({"x", "y"}, {"x + x*y"}), input_error);
    REQUIRE_THROWS_AS(fixtures::make_ring({"x"}, {"x + 1"}), input_error);
}
