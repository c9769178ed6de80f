#include "doctest.h"

#include <string>
#include <vector>

#include "coneinf/errors.hpp"
#include "coneinf/monomial.hpp"
#include "coneinf/order.hpp"
#include "coneinf/parser.hpp"
#include "coneinf/polynomial.hpp"
#include "coneinf/rng.hpp"

using namespace coneinf;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Monomial random_mono(Rng& rng, std::size_t nvars, std::uint32_t max_exp) {
    Monomial m(nvars);
    for (auto& e : m.exps) e = static_cast<std::uint32_t>(rng.uniform_int(0, max_exp));
    return m;
}

Polynomial random_poly(const ContextPtr& ctx, Rng& rng) {
    std::vector<Term> terms;
    int nt = static_cast<int>(rng.uniform_int(1, 5));
    for (int t = 0; t < nt; ++t) {
        Rat c = Rat(rng.uniform_int(-9, 9)) / Rat(rng.uniform_int(1, 5));
        terms.push_back({c, random_mono(rng, ctx->size(), 3)});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = mono({2, 1, 0});
    Monomial b = mono({1, 0, 3});
    CHECK(mono_mul(a, b) == mono({3, 1, 3}));
    CHECK(mono_lcm(a, b) == mono({2, 1, 3}));
    CHECK(mono_gcd(a, b) == mono({1, 0, 0}));
    CHECK_FALSE(mono_coprime(a, b));
    CHECK(mono_coprime(mono({2, 0, 0}), mono({0, 0, 3})));
    CHECK(mono_divides(mono({1, 0, 0}), a));
    CHECK_FALSE(mono_divides(b, a));
    CHECK(mono_div(a, mono({1, 1, 0})) == mono({1, 0, 0}));
    CHECK(a.degree() == 3);
    CHECK(mono({0, 0, 0}).is_one());
}

TEST_CASE("grevlex order on two variables") {
    // x > y, so x^2 > x*y in grevlex.
    auto ord = MonomialOrder::grevlex();
    CHECK(ord.compare(mono({2, 0}), mono({1, 1})) > 0);
    CHECK(ord.compare(mono({1, 1}), mono({0, 2})) > 0);
    CHECK(ord.compare(mono({1, 0}), mono({0, 1})) > 0);
    // Degree dominates: y^3 > x^2.
    CHECK(ord.compare(mono({0, 3}), mono({2, 0})) > 0);
}

TEST_CASE("lex order ignores degree") {
    auto ord = MonomialOrder::lex();
    CHECK(ord.compare(mono({1, 0}), mono({0, 5})) > 0);
    CHECK(ord.compare(mono({1, 1}), mono({1, 0})) > 0);
}

TEST_CASE("grlex and grevlex differ in three variables") {
    // Same degree: x^2*z vs x*y^2.
    Monomial a = mono({2, 0, 1});
    Monomial b = mono({1, 2, 0});
    CHECK(MonomialOrder::grlex().compare(a, b) > 0);
    CHECK(MonomialOrder::grevlex().compare(a, b) < 0);
}

TEST_CASE("block order eliminates leading variables") {
    // Any monomial containing x beats any monomial in the rest.
    auto ord = MonomialOrder::block(1);
    CHECK(ord.compare(mono({1, 0}), mono({0, 9})) > 0);
    CHECK(ord.compare(mono({1, 0, 0}), mono({0, 4, 4})) > 0);
    auto ord2 = MonomialOrder::block(2);
    CHECK(ord2.compare(mono({0, 1, 0}), mono({0, 0, 7})) > 0);
}

TEST_CASE("order axioms hold on random monomials") {
    std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(), MonomialOrder::grlex(),
                                         MonomialOrder::lex(), MonomialOrder::block(1),
                                         MonomialOrder::block(2)};
    Rng rng(42, 7);
    Monomial one(3);
    for (const auto& ord : orders) {
        for (int trial = 0; trial < 200; ++trial) {
            Monomial a = random_mono(rng, 3, 6);
            Monomial b = random_mono(rng, 3, 6);
            Monomial c = random_mono(rng, 3, 6);
            INFO("order ", ord.name());
            // Antisymmetry and totality.
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            CHECK(ord.compare(a, a) == 0);
            CHECK((ord.compare(a, b) != 0 || a == b));
            // 1 is least.
            if (!a.is_one()) CHECK(ord.compare(a, one) > 0);
            // Multiplicativity: a < b implies ac < bc.
            int ab = ord.compare(a, b);
            CHECK(ord.compare(mono_mul(a, c), mono_mul(b, c)) == ab);
            // Transitivity.
            if (ab <= 0 && ord.compare(b, c) <= 0) CHECK(ord.compare(a, c) <= 0);
            // Graded orders refine total degree.
            if (ord.is_graded() && a.degree() != b.degree())
                CHECK((ord.compare(a, b) > 0) == (a.degree() > b.degree()));
        }
    }
}

TEST_CASE("context validation") {
    CHECK_THROWS(make_context({"x", "x"}));
    CHECK_THROWS(make_context({"x", ""}));
    auto a = make_context({"x", "y"});
    auto b = make_context({"x", "y"});
    // Contexts are compared by content, not identity.
    CHECK(same_context(a, b));
    CHECK(Polynomial::variable(a, 0) + Polynomial::variable(b, 0) ==
          Polynomial::variable(a, 0).scaled(2));
    auto c = make_context({"u", "v"});
    Polynomial pa = Polynomial::variable(a, 0);
    Polynomial pc = Polynomial::variable(c, 1);
    CHECK_THROWS_AS((void)(pa + pc), context_error);
}

TEST_CASE("polynomial arithmetic") {
    auto ctx = make_context({"x", "y"});
    Polynomial x = Polynomial::variable(ctx, 0);
    Polynomial y = Polynomial::variable(ctx, 1);
    Polynomial one = Polynomial::constant(ctx, 1);

    CHECK((x + y) - y == x);
    CHECK((x + one) * (x - one) == x * x - one);
    CHECK((x + y).pow(2) == x * x + x * y.scaled(2) + y * y);
    CHECK((x - x).is_zero());
    CHECK((x - x).degree() == -1);
    CHECK((x * y + one).degree() == 2);
    CHECK((x * y + one).degree_in(0) == 1);
    CHECK((x * x + x * y).is_homogeneous());
    CHECK_FALSE((x * x + y).is_homogeneous());
    // Terms are stored in strictly descending grevlex order.
    Polynomial p = x + y * y;
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms()[0].mono == mono({0, 2}));
    CHECK(p.leading_term(MonomialOrder::grevlex()).mono == mono({0, 2}));
    CHECK(p.monic(MonomialOrder::grevlex()) == p);
    CHECK((y * y).scaled(Rat(-3)).monic(MonomialOrder::grevlex()) == y * y);
}

TEST_CASE("highest form") {
    auto ctx = make_context({"x", "y"});
    Polynomial f = parse_polynomial("y - x^2", ctx);
    CHECK(f.highest_form() == parse_polynomial("-x^2", ctx));
    CHECK(parse_polynomial("x*y - 1", ctx).highest_form() == parse_polynomial("x*y", ctx));
    CHECK(Polynomial::zero(ctx).highest_form().is_zero());
    // Homogeneous polynomials are their own highest form.
    Polynomial g = parse_polynomial("x^2 + x*y", ctx);
    CHECK(g.highest_form() == g);
}

TEST_CASE("highest form is multiplicative") {
    auto ctx = make_context({"x", "y", "z"});
    Rng rng(2024, 1);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = random_poly(ctx, rng);
        Polynomial g = random_poly(ctx, rng);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).highest_form() == f.highest_form() * g.highest_form());
    }
}

TEST_CASE("homogenize and dehomogenize") {
    auto ctx = make_context({"x", "y"});
    auto ctx_h = make_context({"x", "y", "h"});
    Polynomial f = parse_polynomial("y - x^2", ctx);
    CHECK(f.homogenize("h") == parse_polynomial("y*h - x^2", ctx_h));
    CHECK(parse_polynomial("x*y - 1", ctx).homogenize("h") ==
          parse_polynomial("x*y - h^2", ctx_h));
    CHECK_THROWS(f.homogenize("x"));

    // Setting the new variable to 1 restores the input.
    CHECK(f.homogenize("h").dehomogenize(2) == f);
    // Setting it to 0 leaves the highest form.
    std::vector<Polynomial> images = {Polynomial::variable(ctx, 0), Polynomial::variable(ctx, 1),
                                      Polynomial::zero(ctx)};
    CHECK(f.homogenize("h").substitute(images, ctx) == f.highest_form());

    Rng rng(99, 3);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_poly(ctx, rng);
        if (p.is_zero()) continue;
        Polynomial ph = p.homogenize("h");
        CHECK(ph.is_homogeneous());
        CHECK(ph.degree() == p.degree());
        CHECK(ph.dehomogenize(2) == p);
        CHECK(ph.substitute(images, ctx) == p.highest_form());
    }
}

TEST_CASE("substitution and evaluation") {
    auto ctx = make_context({"x", "y"});
    Polynomial f = parse_polynomial("y - x^2", ctx);
    auto val = f.eval({{3.0, 0.0}, {9.0, 0.0}});
    CHECK(std::abs(val) < 1e-12);
    // Substituting x -> x, y -> x^2 kills the parabola equation.
    std::vector<Polynomial> images = {Polynomial::variable(ctx, 0),
                                      parse_polynomial("x^2", ctx)};
    CHECK(f.substitute(images, ctx).is_zero());
}

TEST_CASE("parser accepts the documented grammar") {
    auto ctx = make_context({"x", "y"});
    Polynomial expect = Polynomial::term(ctx, Rat(3) / Rat(2), mono({1, 1})) +
                        Polynomial::constant(ctx, 1);
    CHECK(parse_polynomial("3/2*x*y + 1", ctx) == expect);
    CHECK(parse_polynomial("(x + y)^2", ctx) ==
          parse_polynomial("x^2 + 2*x*y + y^2", ctx));
    CHECK(parse_polynomial("-x + y", ctx) == parse_polynomial("y - x", ctx));
    CHECK(parse_polynomial("x - 2/4", ctx) == parse_polynomial("x - 1/2", ctx));
    CHECK(parse_polynomial("0", ctx).is_zero());
}

TEST_CASE("parser rejects malformed input with positions") {
    auto ctx = make_context({"x", "y"});
    try {
        parse_polynomial("x + ", ctx);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_polynomial("2x", ctx), parse_error);
    CHECK_THROWS_AS(parse_polynomial("z + 1", ctx), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x ^", ctx), parse_error);
    CHECK_THROWS_AS(parse_polynomial("(x + y", ctx), parse_error);
    CHECK_THROWS_AS(parse_polynomial("", ctx), parse_error);
    CHECK_THROWS_AS(parse_polynomial("1/0", ctx), parse_error);
}

TEST_CASE("format and parse are mutually inverse") {
    auto ctx = make_context({"x", "y"});
    CHECK(format_polynomial(parse_polynomial("x^2 - y", ctx)) == "x^2 - y");
    CHECK(format_polynomial(parse_polynomial("x*y", ctx)) == "x*y");
    CHECK(format_polynomial(parse_polynomial("3/2*x*y + 1", ctx)) == "3/2*x*y + 1");
    CHECK(format_polynomial(Polynomial::zero(ctx)) == "0");

    auto ctx3 = make_context({"x", "y", "z"});
    Rng rng(7, 11);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(ctx3, rng);
        CHECK(parse_polynomial(format_polynomial(p), ctx3) == p);
    }
}

TEST_CASE("splittable rng is reproducible") {
    Rng a = derive_rng(5, "tag", 0);
    Rng b = derive_rng(5, "tag", 0);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
    CHECK(derive_rng(5, "tag", 0).next_u64() != derive_rng(5, "tag", 1).next_u64());
    CHECK(derive_rng(5, "tag", 0).next_u64() != derive_rng(5, "other", 0).next_u64());
    CHECK(derive_rng(5, "tag", 0).next_u64() != derive_rng(6, "tag", 0).next_u64());
    // Outputs are pure functions of the counter.
    Rng c = derive_rng(5, "tag", 0);
    std::uint64_t third = c.value_at(2);
    c.next_u64();
    c.next_u64();
    CHECK(c.next_u64() == third);
    Rng d = derive_rng(123, "range", 0);
    for (int i = 0; i < 1000; ++i) {
        double u = d.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        auto v = d.uniform_int(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}
