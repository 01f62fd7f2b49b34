#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hsmf/parser.hpp"
#include "hsmf/polynomial.hpp"

using namespace hsmf;

namespace {

const VarSystem kQds{{"x1", "x2", "x3", "x4", "x5"}, {1, 1, 1, 1, 2}, 4};

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

Polynomial random_poly(std::mt19937& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Polynomial p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(5);
        for (auto& e : m) e = expo(rng);
        int c = num(rng);
        if (c == 0) continue;
        p.add_term(m, make_rat(c, den(rng)));
    }
    return p;
}

Polynomial random_quasi_homogeneous(std::mt19937& rng, int degree) {
    auto monos = monomials_of_weighted_degree(kQds, degree);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Polynomial p;
    for (int t = 0; t < 4; ++t) {
        int c = num(rng);
        if (c != 0) p.add_term(monos[pick(rng)], c);
    }
    if (p.is_zero()) p.add_term(monos[pick(rng)], 1);
    return p;
}

}  // namespace

TEST_CASE("parse reads back plain sums") {
    Polynomial p = parse_poly("x1^4 + x2^4 + x3^4 + x4^4 + x5^2", kQds);
    CHECK(p.term_count() == 5);
    for (const auto& [m, c] : p.terms()) CHECK(c == 1);
    CHECK(p.terms().at(mono({0, 0, 0, 0, 2})) == 1);
}

TEST_CASE("parse handles coefficients and signs") {
    Polynomial p = parse_poly("2*x1^2*x2^2 - 1/3*x5^2", kQds);
    CHECK(p.term_count() == 2);
    CHECK(p.terms().at(mono({2, 2, 0, 0, 0})) == 2);
    CHECK(p.terms().at(mono({0, 0, 0, 0, 2})) == make_rat(-1, 3));
}

TEST_CASE("parse reports positions on malformed input") {
    try {
        parse_poly("x1^", kQds);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_poly("", kQds), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 + + x2", kQds), ParseError);
    CHECK_THROWS_AS(parse_poly("2 x1", kQds), ParseError);
}

TEST_CASE("parse rejects unknown variables and zero denominators") {
    CHECK_THROWS_WITH_AS(parse_poly("x1 + y^2", kQds),
                         doctest::Contains("unknown variable"), ParseError);
    CHECK_THROWS_WITH_AS(parse_poly("1/0*x1", kQds),
                         doctest::Contains("zero denominator"), ParseError);
}

TEST_CASE("parse combines terms and drops zeros") {
    Polynomial p = parse_poly("x1^2 + x1^2 - 2*x1^2 + x2", kQds);
    CHECK(p.term_count() == 1);
    CHECK(p.terms().at(mono({0, 1, 0, 0, 0})) == 1);
    CHECK(parse_poly("x1 - x1", kQds).is_zero());
    CHECK(parse_poly("0", kQds).is_zero());
}

TEST_CASE("weighted degree of the quartic double solid polynomial") {
    Polynomial omega = parse_poly("x1^4 + x2^4 + x3^4 + x4^4 + x5^2", kQds);
    CHECK(weighted_degree(omega, kQds) == 4);
    CHECK(weighted_degree(parse_poly("x1*x5", kQds), kQds) == 3);
}

TEST_CASE("weighted degree failures") {
    CHECK_THROWS_AS(weighted_degree(parse_poly("x1 + x5", kQds), kQds), NotQuasiHomogeneous);
    CHECK_THROWS_AS(weighted_degree(Polynomial(), kQds), ZeroPolynomial);
    try {
        weighted_degree(parse_poly("x1 + x5", kQds), kQds);
    } catch (const NotQuasiHomogeneous& e) {
        CHECK(e.term_a() == "x1");
        CHECK(e.term_b() == "x5");
    }
}

TEST_CASE("restriction to the fixed locus") {
    Polynomial omega = parse_poly("x1^4 + x2^4 + x3^4 + x4^4 + x5^2", kQds);
    CHECK(restrict_to(omega, {4}) == parse_poly("x5^2", kQds));
    CHECK(restrict_to(omega, {0, 1, 2, 3, 4}) == omega);
    CHECK(restrict_to(omega, {}).is_zero());
}

TEST_CASE("projection to a subsystem") {
    Polynomial omega = parse_poly("x1^4 + x2^4 + x3^4 + x4^4 + x5^2", kQds);
    VarSystem sub = kQds.subsystem({4});
    Polynomial p = project(restrict_to(omega, {4}), {4});
    CHECK(p == parse_poly("x5^2", sub));
    CHECK(weighted_degree(p, sub) == 4);
}

TEST_CASE("products") {
    CHECK(parse_poly("x1^2", kQds) * parse_poly("x2^2", kQds) ==
          parse_poly("x1^2*x2^2", kQds));
    CHECK((parse_poly("x1 + x2", kQds) * Polynomial()).is_zero());
    CHECK(parse_poly("x1 + x2", kQds) * parse_poly("x1 - 1*x2", kQds) ==
          parse_poly("x1^2 - x2^2", kQds));
}

TEST_CASE("derivatives") {
    Polynomial omega = parse_poly("x1^4 + x2^4 + x3^4 + x4^4 + x5^2", kQds);
    CHECK(derivative(omega, 0) == parse_poly("4*x1^3", kQds));
    CHECK(derivative(omega, 4) == parse_poly("2*x5", kQds));
    CHECK(derivative(parse_poly("x5^2", kQds), 0).is_zero());
}

TEST_CASE("render parses back to the same polynomial") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = random_poly(rng);
        CHECK(parse_poly(render(p, kQds), kQds) == p);
    }
    CHECK(render(Polynomial(), kQds) == "0");
    // leading negative unit coefficients must stay inside the grammar
    Polynomial q = parse_poly("x1^2", kQds) * Rat(-1);
    CHECK(render(q, kQds) == "-1*x1^2");
    CHECK(parse_poly(render(q, kQds), kQds) == q);
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(777);
    for (int i = 0; i < 50; ++i) {
        Polynomial a = random_poly(rng, 4);
        Polynomial b = random_poly(rng, 4);
        Polynomial c = random_poly(rng, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("weighted degree is additive on quasi-homogeneous factors") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> deg(1, 5);
    for (int i = 0; i < 60; ++i) {
        int da = deg(rng), db = deg(rng);
        Polynomial a = random_quasi_homogeneous(rng, da);
        Polynomial b = random_quasi_homogeneous(rng, db);
        CHECK(weighted_degree(a * b, kQds) == da + db);
    }
}

TEST_CASE("iterated restriction intersects the kept sets") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = random_poly(rng);
        std::vector<int> a, b, both;
        for (int v = 0; v < 5; ++v) {
            bool in_a = coin(rng), in_b = coin(rng);
            if (in_a) a.push_back(v);
            if (in_b) b.push_back(v);
            if (in_a && in_b) both.push_back(v);
        }
        CHECK(restrict_to(restrict_to(p, a), b) == restrict_to(p, both));
    }
}

TEST_CASE("monomial enumeration respects weights") {
    auto degree2 = monomials_of_weighted_degree(kQds, 2);
    CHECK(degree2.size() == 11);  // 10 quadratic in x1..x4 plus x5
    auto degree0 = monomials_of_weighted_degree(kQds, 0);
    REQUIRE(degree0.size() == 1);
    CHECK(degree0[0] == mono({0, 0, 0, 0, 0}));
    CHECK(monomials_of_weighted_degree(kQds, -1).empty());
    for (const Monomial& m : monomials_of_weighted_degree(kQds, 7))
        CHECK(weighted_degree(m, kQds) == 7);
}

TEST_CASE("variable system validation") {
    VarSystem ok = kQds;
    CHECK_NOTHROW(ok.validate());
    VarSystem bad_gcd{{"x", "y"}, {2, 2}, 4};
    CHECK_THROWS_AS(bad_gcd.validate(), Error);
    VarSystem bad_len{{"x", "y"}, {1}, 2};
    CHECK_THROWS_AS(bad_len.validate(), Error);
    VarSystem bad_deg{{"x"}, {1}, 1};
    CHECK_THROWS_AS(bad_deg.validate(), Error);
    VarSystem dup{{"x", "x"}, {1, 1}, 2};
    CHECK_THROWS_AS(dup.validate(), Error);
}
