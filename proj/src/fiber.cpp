#include "coneinf/fiber.hpp"

#include <algorithm>
#include <stdexcept>

#include "coneinf/cone.hpp"
#include "coneinf/errors.hpp"
#include "coneinf/groebner.hpp"
#include "coneinf/hilbert.hpp"
#include "coneinf/rng.hpp"

namespace coneinf {

Ideal generic_fiber(const Ideal& I, const CoordinateSplit& split, const std::vector<Rat>& point,
                    std::size_t budget) {
    std::size_t n = I.nvars();
    std::size_t k = split.k;
    if (k == 0 || k >= n) throw std::domain_error("fiber requires 0 < k < number of variables");
    if (point.size() != k) throw std::domain_error("fiber point size does not match k");
    Ideal T = apply_linear_change(I, split);
    VarContext names(T.context()->begin() + static_cast<std::ptrdiff_t>(k), T.context()->end());
    ContextPtr out_ctx = make_context(std::move(names));
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < k; ++i) images.push_back(Polynomial::constant(out_ctx, point[i]));
    for (std::size_t i = k; i < n; ++i) images.push_back(Polynomial::variable(out_ctx, i - k));
    std::vector<Polynomial> gens;
    gens.reserve(T.generators().size());
    for (const auto& g : T.generators()) gens.push_back(g.substitute(images, out_ctx));
    Ideal fiber(out_ctx, std::move(gens));
    if (!is_zero_dimensional(fiber, budget))
        throw genericity_error("fiber is not zero dimensional over the sampled point");
    return fiber;
}

bool is_zero_dimensional(const Ideal& I, std::size_t budget) {
    if (I.is_zero()) return I.nvars() == 0;
    const auto& gb = I.groebner_basis(MonomialOrder::grevlex(), budget);
    if (gb.size() == 1 && gb.front().is_constant()) return true;
    std::size_t n = I.nvars();
    std::vector<bool> covered(n, false);
    for (const auto& g : gb) {
        const Monomial& lt = g.leading_term(MonomialOrder::grevlex()).mono;
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (lt.exps[i] > 0) {
                ++support;
                var = i;
            }
        }
        if (support == 1) covered[var] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

long long quotient_dimension(const Ideal& I, std::size_t budget) {
    if (!is_zero_dimensional(I, budget))
        throw std::domain_error("quotient ring is not finite dimensional");
    if (I.is_zero()) return 1;
    const auto& gb = I.groebner_basis(MonomialOrder::grevlex(), budget);
    if (gb.size() == 1 && gb.front().is_constant()) return 0;

    std::size_t n = I.nvars();
    std::vector<Monomial> lts;
    lts.reserve(gb.size());
    for (const auto& g : gb) lts.push_back(g.leading_term(MonomialOrder::grevlex()).mono);

    std::vector<std::uint32_t> caps(n, 0);
    for (const auto& lt : lts) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (lt.exps[i] > 0) {
                ++support;
                var = i;
            }
        }
        if (support == 1 && (caps[var] == 0 || lt.exps[var] < caps[var])) caps[var] = lt.exps[var];
    }
    unsigned long long box = 1;
    for (std::uint32_t c : caps) {
        box *= c;
        if (box > 1000000ull)
            throw resource_limit_error("standard monomial box exceeds 1000000 cells");
    }

    long long count = 0;
    Monomial m(n);
    for (;;) {
        bool standard = true;
        for (const auto& lt : lts) {
            if (mono_divides(lt, m)) {
                standard = false;
                break;
            }
        }
        if (standard) ++count;
        std::size_t i = 0;
        while (i < n) {
            if (++m.exps[i] < caps[i]) break;
            m.exps[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

namespace {

// Dense univariate polynomial over Q, constant coefficient first.
using UniRat = std::vector<Rat>;

void uni_trim(UniRat& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UniRat uni_derivative(const UniRat& a) {
    UniRat d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rat(static_cast<long>(i)));
    uni_trim(d);
    return d;
}

UniRat uni_monic(UniRat a) {
    uni_trim(a);
    if (a.empty()) return a;
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

UniRat uni_mod(UniRat a, const UniRat& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        uni_trim(a);
    }
    return a;
}

UniRat uni_div_exact(UniRat a, const UniRat& b) {
    UniRat q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        q[a.size() - b.size()] = f;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        uni_trim(a);
    }
    if (!a.empty()) throw std::domain_error("univariate division is not exact");
    uni_trim(q);
    return q;
}

UniRat uni_gcd(UniRat a, UniRat b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniRat r = uni_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(std::move(a));
}

UniRat to_uni(const Polynomial& p) {
    UniRat a(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, Rat(0));
    for (const auto& t : p.terms()) a[t.mono.exps[0]] = t.coeff;
    uni_trim(a);
    return a;
}

// The squarefree eliminant of variable `var`, as a polynomial in the full
// context of I. Returns a zero polynomial when the eliminant vanishes, which
// certifies a positive dimensional coordinate image.
Polynomial squarefree_eliminant(const Ideal& I, std::size_t var, std::size_t budget) {
    std::size_t n = I.nvars();
    Polynomial g;
    if (n == 1) {
        const auto& gb = I.groebner_basis(MonomialOrder::grevlex(), budget);
        if (gb.empty()) return Polynomial::zero(I.context());
        g = gb.front();
    } else {
        RatMatrix a(n, std::vector<Rat>(n, Rat(0)));
        a[var][n - 1] = 1;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == var) continue;
            a[i][pos++] = 1;
        }
        Ideal permuted = apply_linear_change(I, CoordinateSplit::from_matrix(1, std::move(a)));
        Ideal elim = eliminate(permuted, n - 1, budget);
        if (elim.is_zero()) return Polynomial::zero(I.context());
        g = elim.groebner_basis(MonomialOrder::grevlex(), budget).front();
    }
    UniRat u = to_uni(g);
    UniRat d = uni_derivative(u);
    UniRat s = d.empty() ? uni_monic(u) : uni_div_exact(u, uni_gcd(u, d));
    std::vector<Term> terms;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        Monomial m(n);
        m.exps[var] = static_cast<std::uint32_t>(i);
        terms.push_back({s[i], std::move(m)});
    }
    return Polynomial::from_terms(I.context(), std::move(terms));
}

} // namespace

long long distinct_point_count(const Ideal& I, std::size_t budget) {
    if (I.is_unit(budget)) return 0;
    std::size_t n = I.nvars();
    std::vector<Polynomial> gens = I.generators();
    for (std::size_t v = 0; v < n; ++v) {
        Polynomial s = squarefree_eliminant(I, v, budget);
        if (s.is_zero())
            throw std::domain_error("ideal is not zero dimensional: empty eliminant for " +
                                    (*I.context())[v]);
        gens.push_back(std::move(s));
    }
    return quotient_dimension(Ideal(I.context(), std::move(gens)), budget);
}

long long reduced_degree(const Ideal& I, std::uint64_t seed, std::size_t budget) {
    if (I.is_unit(budget)) return 0;
    std::size_t n = I.nvars();
    HilbertData hd = dim_degree(I, budget);
    if (hd.dim_projective == 0) return distinct_point_count(I, budget);
    if (hd.dim_projective == static_cast<int>(n)) return 1;

    std::size_t k = static_cast<std::size_t>(hd.dim_projective);
    LinearChangeResult lc = random_linear_change(I, k, seed, 32, budget);

    constexpr int kWantedTrials = 5;
    constexpr int kMaxAttempts = 12;
    long long best = -1;
    int good = 0;
    for (int attempt = 0; attempt < kMaxAttempts && good < kWantedTrials; ++attempt) {
        Rng rng = derive_rng(seed, "fiber-point", static_cast<std::uint64_t>(attempt));
        std::vector<Rat> point;
        point.reserve(k);
        for (std::size_t i = 0; i < k; ++i) point.emplace_back(rng.uniform_int(-10000, 10000));
        try {
            Ideal fiber = generic_fiber(I, lc.split, point, budget);
            best = std::max(best, distinct_point_count(fiber, budget));
            ++good;
        } catch (const genericity_error&) {
            continue;
        }
    }
    if (good == 0)
        throw genericity_error("no sampled fiber was finite; the split looks degenerate");
    return best;
}

} // namespace coneinf
