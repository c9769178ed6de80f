#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "battery.hpp"
#include "coneinf/errors.hpp"
#include "coneinf/groebner.hpp"
#include "coneinf/ideal.hpp"
#include "coneinf/parser.hpp"
#include "coneinf/rng.hpp"

using namespace coneinf;
using battery::make_ideal;

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

std::vector<Polynomial> parse_all(const ContextPtr& ctx, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ctx));
    return out;
}

} // namespace

TEST_CASE("reduce computes full normal forms") {
    auto ctx = make_context({"x", "y"});
    Polynomial x2 = parse_polynomial("x^2", ctx);
    CHECK(reduce(x2, parse_all(ctx, {"x"}), kGrevlex).is_zero());
    // LT(y - x^2) under grevlex is -x^2, so x^2*y reduces to y^2.
    CHECK(reduce(parse_polynomial("x^2*y", ctx), parse_all(ctx, {"y - x^2"}), kGrevlex) ==
          parse_polynomial("y^2", ctx));
    Polynomial untouched = parse_polynomial("x + 1", ctx);
    CHECK(reduce(untouched, parse_all(ctx, {"y"}), kGrevlex) == untouched);
    CHECK(reduce(Polynomial::zero(ctx), parse_all(ctx, {"x"}), kGrevlex).is_zero());
    // No term of a normal form is divisible by a leading monomial.
    Polynomial r = reduce(parse_polynomial("x^3 + x*y + y^3 + 1", ctx),
                          parse_all(ctx, {"y - x^2"}), kGrevlex);
    Monomial lm = parse_polynomial("y - x^2", ctx).leading_term(kGrevlex).mono;
    for (const auto& t : r.terms()) CHECK_FALSE(mono_divides(lm, t.mono));
}

TEST_CASE("s-polynomials") {
    auto ctx = make_context({"x", "y", "z"});
    Polynomial x = parse_polynomial("x", ctx);
    Polynomial y = parse_polynomial("y", ctx);
    CHECK(s_polynomial(x, y, kGrevlex).is_zero());
    CHECK(s_polynomial(parse_polynomial("x^2 - y", ctx), parse_polynomial("x*y - z", ctx),
                       kGrevlex) == parse_polynomial("-y^2 + x*z", ctx));
    Polynomial f = parse_polynomial("x^2 + y*z - 1", ctx);
    CHECK(s_polynomial(f, f, kGrevlex).is_zero());
}

TEST_CASE("buchberger matches hand-computed bases") {
    auto ctx = make_context({"x", "y"});
    CHECK(buchberger(parse_all(ctx, {"y - x^2"}), kGrevlex) == parse_all(ctx, {"x^2 - y"}));
    CHECK(buchberger(parse_all(ctx, {"x", "y"}), kGrevlex) == parse_all(ctx, {"x", "y"}));
    CHECK(buchberger({}, kGrevlex).empty());
    CHECK(buchberger(parse_all(ctx, {"0"}), kGrevlex).empty());
    // Constants collapse to the unit basis.
    CHECK(buchberger(parse_all(ctx, {"x", "x + 1"}), kGrevlex) == parse_all(ctx, {"1"}));

    auto ctx3 = make_context({"x", "y", "z"});
    CHECK(buchberger(parse_all(ctx3, {"y - x^2", "z - x^3"}), kGrevlex) ==
          parse_all(ctx3, {"x^2 - y", "x*y - z", "y^2 - x*z"}));
}

TEST_CASE("reduced bases are unique and idempotent across the battery") {
    Rng rng(314, 1);
    for (const auto& entry : battery::entries()) {
        const auto& base = entry.ideal.groebner_basis(kGrevlex);
        INFO("ideal ", entry.name);

        // Reduced property: monic, and no term divisible by another leading monomial.
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(base[i].leading_term(kGrevlex).coeff == Rat(1));
            for (std::size_t j = 0; j < base.size(); ++j) {
                if (i == j) continue;
                Monomial lm = base[j].leading_term(kGrevlex).mono;
                for (const auto& t : base[i].terms()) CHECK_FALSE(mono_divides(lm, t.mono));
            }
        }

        // Every S-polynomial of the basis reduces to zero.
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                CHECK(reduce(s_polynomial(base[i], base[j], kGrevlex), base, kGrevlex).is_zero());

        CHECK(buchberger(base, kGrevlex) == base);

        // Shuffling and rescaling the generators cannot change the output.
        for (int shuffle = 0; shuffle < 10; ++shuffle) {
            std::vector<Polynomial> gens = entry.ideal.generators();
            for (std::size_t i = gens.size(); i > 1; --i)
                std::swap(gens[i - 1], gens[rng.uniform_int(0, static_cast<std::int64_t>(i) - 1)]);
            for (auto& g : gens) {
                Rat c = Rat(rng.uniform_int(1, 7)) / Rat(rng.uniform_int(1, 7));
                if (rng.uniform_int(0, 1)) c = -c;
                g = g.scaled(c);
            }
            CHECK(buchberger(gens, kGrevlex) == base);
        }
    }
}

TEST_CASE("groebner bases under non-graded orders") {
    auto ctx = make_context({"x", "y"});
    // Under lex with x > y the parabola basis solves for x^2.
    auto lex = buchberger(parse_all(ctx, {"y - x^2"}), MonomialOrder::lex());
    CHECK(lex == parse_all(ctx, {"x^2 - y"}));
    auto ctx3 = make_context({"x", "y", "z"});
    auto blex = buchberger(parse_all(ctx3, {"y - x^2", "z - x^3"}), MonomialOrder::lex());
    // A lex basis of the twisted cubic contains the eliminant y^3 - z^2.
    Ideal blex_ideal(ctx3, blex);
    CHECK(ideal_member(parse_polynomial("y^3 - z^2", ctx3), blex_ideal));
}

TEST_CASE("ideal membership") {
    auto ctx = make_context({"x", "y"});
    Ideal hyper = make_ideal({"x", "y"}, {"x*y - 1"});
    CHECK(ideal_member(parse_polynomial("x^2*y^2 - 1", ctx), hyper));
    CHECK_FALSE(ideal_member(parse_polynomial("x", ctx), hyper));
    Ideal axes = make_ideal({"x", "y"}, {"x", "y"});
    CHECK_FALSE(ideal_member(Polynomial::constant(ctx, 1), axes));
    CHECK(ideal_member(Polynomial::zero(ctx), axes));
    Ideal zero(ctx, {});
    CHECK(ideal_member(Polynomial::zero(ctx), zero));
    CHECK_FALSE(ideal_member(parse_polynomial("x", ctx), zero));
}

TEST_CASE("ideal equality") {
    CHECK(ideal_equal(make_ideal({"x", "y"}, {"y - x^2"}), make_ideal({"x", "y"}, {"x^2 - y"})));
    CHECK(ideal_equal(make_ideal({"x", "y"}, {"x", "y"}),
                      make_ideal({"x", "y"}, {"x + y", "x - y"})));
    CHECK_FALSE(ideal_equal(make_ideal({"x", "y"}, {"x"}), make_ideal({"x", "y"}, {"x", "y"})));
}

TEST_CASE("unit detection") {
    CHECK(make_ideal({"x", "y"}, {"x", "x + 1"}).is_unit());
    CHECK(make_ideal({"x"}, {"2"}).is_unit());
    CHECK_FALSE(make_ideal({"x", "y"}, {"x"}).is_unit());
    CHECK_FALSE(Ideal(make_context({"x"}), {}).is_unit());
}

TEST_CASE("pair budget is enforced") {
    auto gens = parse_all(make_context({"x", "y", "z"}), {"y - x^2", "z - x^3"});
    CHECK_THROWS_AS(buchberger(gens, kGrevlex, 0), resource_limit_error);
    // A generous budget succeeds.
    CHECK(buchberger(gens, kGrevlex, 1000).size() == 3);
}

TEST_CASE("elimination") {
    Ideal I = make_ideal({"x", "y"}, {"y - x^2", "x - 1"});
    Ideal elim = eliminate(I, 1);
    CHECK(ideal_equal(elim, make_ideal({"y"}, {"y - 1"})));
    CHECK(elim.context()->size() == 1);
    CHECK(elim.context()->front() == "y");

    // Nothing of (x) survives in the y-subring.
    CHECK(eliminate(make_ideal({"x", "y"}, {"x"}), 1).is_zero());
    CHECK(eliminate(make_ideal({"x", "y"}, {"x*y - 1"}), 1).is_zero());

    // The twisted cubic projects to the cuspidal-style plane curve y^3 - z^2.
    Ideal tc = make_ideal({"x", "y", "z"}, {"y - x^2", "z - x^3"});
    CHECK(ideal_equal(eliminate(tc, 1), make_ideal({"y", "z"}, {"y^3 - z^2"})));

    // Elimination output is the intersection: every member stays a member.
    Ideal projected = eliminate(tc, 1);
    for (const auto& g : projected.generators()) {
        Polynomial lifted = parse_polynomial(format_polynomial(g), tc.context());
        CHECK(ideal_member(lifted, tc));
    }
}

TEST_CASE("groebner caches are per order") {
    Ideal I = make_ideal({"x", "y", "z"}, {"y - x^2", "z - x^3"});
    const auto& a = I.groebner_basis(kGrevlex);
    const auto& b = I.groebner_basis(kGrevlex);
    CHECK(&a == &b);
    const auto& c = I.groebner_basis(MonomialOrder::lex());
    CHECK(a != c);
}
