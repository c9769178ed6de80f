#include "coneinf/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

#include "coneinf/errors.hpp"

namespace coneinf {

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord) {
    Polynomial h = f;
    Polynomial r = Polynomial::zero(f.context());
    while (!h.is_zero()) {
        Term lt = h.leading_term(ord);
        const Polynomial* divisor = nullptr;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (mono_divides(g.leading_term(ord).mono, lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Term dlt = divisor->leading_term(ord);
            Polynomial q = Polynomial::term(f.context(), lt.coeff / dlt.coeff,
                                            mono_div(lt.mono, dlt.mono));
            h -= q * *divisor;
        } else {
            Polynomial t = Polynomial::term(f.context(), lt.coeff, lt.mono);
            r += t;
            h -= t;
        }
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    assert(!f.is_zero() && !g.is_zero());
    require_same_context(f, g);
    Term ltf = f.leading_term(ord);
    Term ltg = g.leading_term(ord);
    Monomial l = mono_lcm(ltf.mono, ltg.mono);
    Polynomial a = Polynomial::term(f.context(), Rat(1) / ltf.coeff, mono_div(l, ltf.mono));
    Polynomial b = Polynomial::term(f.context(), Rat(1) / ltg.coeff, mono_div(l, ltg.mono));
    return a * f - b * g;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
};

struct PairOrder {
    // Normal strategy: smallest lcm degree first; deterministic tie-break.
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.degree != b.degree) return a.degree > b.degree;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> G, const MonomialOrder& ord) {
    // Minimal basis: drop any element whose leading monomial another one divides.
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mi = G[i].leading_term(ord).mono;
            const Monomial& mj = G[j].leading_term(ord).mono;
            if (mono_divides(mj, mi) && (mi != mj || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(G[i]);

    // Tail reduction: every element fully reduced against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_term(ord).mono, b.leading_term(ord).mono) > 0;
    });
    return reduced;
}

} // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   std::size_t budget) {
    std::vector<Polynomial> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic(ord));
    if (G.empty()) return G;

    std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = mono_lcm(G[i].leading_term(ord).mono, G[j].leading_term(ord).mono);
        int d = l.degree();
        queue.push({i, j, std::move(l), d});
    };
    for (std::size_t j = 1; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    std::size_t taken = 0;
    while (!queue.empty()) {
        if (++taken > budget)
            throw resource_limit_error("groebner pair budget exceeded (" +
                                       std::to_string(budget) + " pairs)");
        Pair p = queue.top();
        queue.pop();
        handled.insert({p.i, p.j});

        const Monomial& mi = G[p.i].leading_term(ord).mono;
        const Monomial& mj = G[p.j].leading_term(ord).mono;
        if (mono_coprime(mi, mj)) continue;

        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(G[k].leading_term(ord).mono, p.lcm)) continue;
            auto ik = std::minmax(p.i, k);
            auto jk = std::minmax(p.j, k);
            if (handled.count({ik.first, ik.second}) && handled.count({jk.first, jk.second}))
                chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(G[p.i], G[p.j], ord);
        Polynomial r = reduce(s, G, ord);
        if (r.is_zero()) continue;
        G.push_back(r.monic(ord));
        std::size_t idx = G.size() - 1;
        for (std::size_t i = 0; i < idx; ++i) push_pair(i, idx);
    }
    return interreduce(std::move(G), ord);
}

bool ideal_member(const Polynomial& f, const Ideal& I, std::size_t budget) {
    if (f.is_zero()) return true;
    if (I.is_zero()) return false;
    if (!same_context(f.context(), I.context()))
        throw context_error("membership query in wrong context");
    const auto& gb = I.groebner_basis(MonomialOrder::grevlex(), budget);
    return reduce(f, gb, MonomialOrder::grevlex()).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, std::size_t budget) {
    for (const auto& g : a.generators())
        if (!ideal_member(g, b, budget)) return false;
    for (const auto& g : b.generators())
        if (!ideal_member(g, a, budget)) return false;
    return true;
}

Ideal eliminate(const Ideal& I, std::size_t k, std::size_t budget) {
    std::size_t n = I.nvars();
    if (k == 0 || k >= n)
        throw std::domain_error("eliminate requires 0 < k < number of variables");
    VarContext names(I.context()->begin() + static_cast<std::ptrdiff_t>(k), I.context()->end());
    ContextPtr out = make_context(std::move(names));
    std::vector<Polynomial> kept;
    if (!I.is_zero()) {
        const auto& gb = I.groebner_basis(MonomialOrder::block(k), budget);
        for (const auto& g : gb) {
            bool free_of_front = true;
            for (std::size_t v = 0; v < k && free_of_front; ++v)
                if (g.degree_in(v) > 0) free_of_front = false;
            if (!free_of_front) continue;
            std::vector<Term> ts;
            for (const auto& t : g.terms()) {
                Monomial m(n - k);
                std::copy(t.mono.exps.begin() + static_cast<std::ptrdiff_t>(k),
                          t.mono.exps.end(), m.exps.begin());
                ts.push_back({t.coeff, std::move(m)});
            }
            kept.push_back(Polynomial::from_terms(out, std::move(ts)));
        }
    }
    return Ideal(out, std::move(kept));
}

} // namespace coneinf
