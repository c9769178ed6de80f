#include "coneinf/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coneinf/cone.hpp"

namespace coneinf {

int UniPoly::degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != 0) return static_cast<int>(i);
    return -1;
}

void UniPoly::trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

bool UniPoly::operator==(const UniPoly& o) const {
    std::size_t n = std::max(coeffs.size(), o.coeffs.size());
    for (std::size_t i = 0; i < n; ++i)
        if ((*this)[i] != o[i]) return false;
    return true;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a[i] + b[i];
    r.trim();
    return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a[i] - b[i];
    r.trim();
    return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.trim();
    return r;
}

UniPoly uni_shift(const UniPoly& a, std::size_t by) {
    UniPoly r;
    r.coeffs.assign(by, 0);
    r.coeffs.insert(r.coeffs.end(), a.coeffs.begin(), a.coeffs.end());
    r.trim();
    return r;
}

long long uni_eval_one(const UniPoly& a) {
    long long s = 0;
    for (long long c : a.coeffs) s += c;
    return s;
}

UniPoly uni_div_one_minus_t(const UniPoly& a) {
    // a(t) = (1 - t) q(t): q_i = a_i + q_{i-1}.
    UniPoly q;
    q.coeffs.assign(std::max<std::size_t>(a.coeffs.size(), 1), 0);
    long long carry = 0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        carry += a.coeffs[i];
        q.coeffs[i] = carry;
    }
    if (carry != 0) throw std::domain_error("division by 1 - t is not exact");
    if (!q.coeffs.empty()) q.coeffs.pop_back();
    if (q.coeffs.empty()) q.coeffs.push_back(0);
    q.trim();
    return q;
}

int one_minus_t_multiplicity(const UniPoly& a) {
    if (a.degree() < 0) throw std::domain_error("zero polynomial has no finite multiplicity");
    UniPoly cur = a;
    int c = 0;
    while (uni_eval_one(cur) == 0) {
        cur = uni_div_one_minus_t(cur);
        ++c;
    }
    return c;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return mono_canonical_cmp(a, b) < 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (mono_divides(k, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

using MemoKey = std::vector<std::uint32_t>;

MemoKey memo_key(const std::vector<Monomial>& gens) {
    MemoKey key;
    for (const auto& m : gens) key.insert(key.end(), m.exps.begin(), m.exps.end());
    return key;
}

UniPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars,
                      std::map<MemoKey, UniPoly>& memo) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return UniPoly{{1}};
    if (gens.front().is_one()) return UniPoly{{0}};

    std::vector<std::size_t> occurrences(nvars, 0);
    for (const auto& m : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (m.exps[v] > 0) ++occurrences[v];
    std::size_t pivot = 0;
    for (std::size_t v = 1; v < nvars; ++v)
        if (occurrences[v] > occurrences[pivot]) pivot = v;

    if (occurrences[pivot] <= 1) {
        // Supports are pairwise disjoint, so the quotient is a complete
        // intersection of monomials.
        UniPoly r{{1}};
        for (const auto& m : gens) {
            UniPoly factor;
            factor.coeffs.assign(m.degree() + 1, 0);
            factor.coeffs.front() = 1;
            factor.coeffs.back() -= 1;
            r = uni_mul(r, factor);
        }
        return r;
    }

    MemoKey key = memo_key(gens);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<Monomial> quotient;
    quotient.reserve(gens.size());
    for (auto m : gens) {
        if (m.exps[pivot] > 0) --m.exps[pivot];
        quotient.push_back(std::move(m));
    }
    std::vector<Monomial> sum;
    Monomial pv;
    pv.exps.assign(nvars, 0);
    pv.exps[pivot] = 1;
    sum.push_back(std::move(pv));
    for (const auto& m : gens)
        if (m.exps[pivot] == 0) sum.push_back(m);

    UniPoly r = uni_add(uni_shift(numerator_rec(std::move(quotient), nvars, memo), 1),
                        numerator_rec(std::move(sum), nvars, memo));
    memo.emplace(std::move(key), r);
    return r;
}

} // namespace

UniPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    for (const auto& m : gens)
        if (m.exps.size() != nvars)
            throw std::domain_error("monomial arity does not match variable count");
    std::map<MemoKey, UniPoly> memo;
    return numerator_rec(std::move(gens), nvars, memo);
}

UniPoly hilbert_numerator(const Ideal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (!g.is_monomial())
            throw std::domain_error("hilbert numerator needs monomial generators");
        gens.push_back(g.terms().front().mono);
    }
    return hilbert_numerator(std::move(gens), I.nvars());
}

namespace {

long long binomial(long long top, int k) {
    if (top < 0 || k < 0) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

} // namespace

std::vector<long long> hilbert_series_prefix(const UniPoly& num, std::size_t nvars,
                                             std::size_t upto) {
    std::vector<long long> h(upto + 1, 0);
    int n = static_cast<int>(nvars);
    for (std::size_t d = 0; d <= upto; ++d) {
        long long s = 0;
        for (std::size_t i = 0; i < num.coeffs.size() && i <= d; ++i) {
            if (num.coeffs[i] == 0) continue;
            s += num.coeffs[i] * binomial(static_cast<long long>(d - i) + n - 1, n - 1);
        }
        h[d] = s;
    }
    return h;
}

HilbertData dim_degree(const Ideal& I, const MonomialOrder& ord, std::size_t budget) {
    if (I.is_unit(budget)) return {UniPoly{{0}}, -1, 0};
    std::size_t n = I.nvars();
    ProjectiveClosure pc = projective_closure(I, budget);
    std::vector<Monomial> lts;
    if (!pc.ideal.is_zero())
        for (const auto& g : pc.ideal.groebner_basis(ord, budget))
            lts.push_back(g.leading_term(ord).mono);
    UniPoly num = hilbert_numerator(std::move(lts), n + 1);
    int c = one_minus_t_multiplicity(num);
    UniPoly q = num;
    for (int i = 0; i < c; ++i) q = uni_div_one_minus_t(q);
    return {std::move(num), static_cast<int>(n) - c, uni_eval_one(q)};
}

HilbertData dim_degree(const Ideal& I, std::size_t budget) {
    return dim_degree(I, MonomialOrder::grevlex(), budget);
}

} // namespace coneinf
