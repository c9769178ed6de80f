#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "coneinf/monomial.hpp"
#include "coneinf/order.hpp"
#include "coneinf/rational.hpp"

namespace coneinf {

// Ordered list of variable names shared by the polynomials of one ring.
using VarContext = std::vector<std::string>;
using ContextPtr = std::shared_ptr<const VarContext>;

// Validates that names are non-empty and pairwise distinct.
ContextPtr make_context(std::vector<std::string> names);

bool same_context(const ContextPtr& a, const ContextPtr& b);

struct Term {
    Rat coeff;
    Monomial mono;

    bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

// Multivariate polynomial with exact rational coefficients. Terms are kept
// strictly descending under grevlex with no zero coefficients, so equal
// polynomials have equal term lists.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(ContextPtr ctx);
    static Polynomial constant(ContextPtr ctx, Rat c);
    static Polynomial variable(ContextPtr ctx, std::size_t index);
    static Polynomial term(ContextPtr ctx, Rat c, Monomial m);
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rat& c) const;
    Polynomial pow(unsigned e) const;

    Term leading_term(const MonomialOrder& ord) const; // requires non-zero
    Polynomial monic(const MonomialOrder& ord) const;

    // Homogeneous component of highest total degree; zero maps to zero.
    Polynomial highest_form() const;

    // Appends `hv` as a new last variable and multiplies each term by the
    // power of hv that lifts it to the top degree. Errors if hv already
    // names a variable.
    Polynomial homogenize(const std::string& hv) const;

    // Substitutes 1 for the variable at `index` and removes it from the
    // context.
    Polynomial dehomogenize(std::size_t index) const;

    // Substitutes images[i] for variable i. All images must live in out_ctx.
    Polynomial substitute(const std::vector<Polynomial>& images, ContextPtr out_ctx) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;
    // Sum of |coeff| * |monomial(point)|, the scale used for relative
    // residual checks.
    double eval_magnitude(const std::vector<std::complex<double>>& point) const;

private:
    Polynomial(ContextPtr ctx, std::vector<Term> terms)
        : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

    void normalize();

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

void require_same_context(const Polynomial& a, const Polynomial& b);

} // namespace coneinf
