#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coneinf {

// Exponent vector over a fixed number of variables.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }
    int degree() const;
    bool is_one() const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Total-order comparison used for canonical storage and hashing, independent
// of any user-selected monomial order: degree, then exponents lexicographic.
int mono_canonical_cmp(const Monomial& a, const Monomial& b);

} // namespace coneinf
