#include "coneinf/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace coneinf {

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps) d += static_cast<int>(e);
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    assert(mono_divides(b, a));
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = a.exps[i] - b.exps[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

int mono_canonical_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (a.exps < b.exps) return -1;
    if (b.exps < a.exps) return 1;
    return 0;
}

} // namespace coneinf
