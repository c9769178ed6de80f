#include "coneinf/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>

#include "coneinf/errors.hpp"

namespace coneinf {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return kCanonical.compare(a, b) < 0;
    }
};

} // namespace

ContextPtr make_context(std::vector<std::string> names) {
    if (names.empty()) throw context_error("variable context must not be empty");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw context_error("empty variable name");
        if (!seen.insert(n).second) throw context_error("duplicate variable name: " + n);
    }
    return std::make_shared<const VarContext>(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_context(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.context(), b.context()))
        throw context_error("polynomials from different variable contexts");
}

Polynomial Polynomial::zero(ContextPtr ctx) { return Polynomial(std::move(ctx), {}); }

Polynomial Polynomial::constant(ContextPtr ctx, Rat c) {
    std::vector<Term> ts;
    if (c != 0) ts.push_back({std::move(c), Monomial(ctx->size())});
    return Polynomial(std::move(ctx), std::move(ts));
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
    assert(index < ctx->size());
    Monomial m(ctx->size());
    m.exps[index] = 1;
    return Polynomial(std::move(ctx), {{Rat(1), std::move(m)}});
}

Polynomial Polynomial::term(ContextPtr ctx, Rat c, Monomial m) {
    assert(m.nvars() == ctx->size());
    std::vector<Term> ts;
    if (c != 0) ts.push_back({std::move(c), std::move(m)});
    return Polynomial(std::move(ctx), std::move(ts));
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.nvars() != ctx->size())
            throw context_error("term exponent width does not match context");
    Polynomial p(std::move(ctx), std::move(terms));
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return kCanonical.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exps[var]));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.coeff = -t.coeff;
    return Polynomial(ctx_, std::move(ts));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_context(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kCanonical.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) out.push_back({std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_context(*this, o);
    std::map<Monomial, Rat, GrevlexLess> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            auto [it, inserted] = acc.try_emplace(std::move(m), Rat(0));
            it->second += a.coeff * b.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second != 0) out.push_back({std::move(it->second), it->first});
    }
    return Polynomial(ctx_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return zero(ctx_);
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.coeff *= c;
    return Polynomial(ctx_, std::move(ts));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ctx_, 1);
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
    assert(!terms_.empty());
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (ord.compare(t.mono, best->mono) > 0) best = &t;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    Rat lc = leading_term(ord).coeff;
    return scaled(Rat(1) / lc);
}

Polynomial Polynomial::highest_form() const {
    if (terms_.empty()) return *this;
    int d = degree();
    std::vector<Term> ts;
    for (const auto& t : terms_)
        if (t.mono.degree() == d) ts.push_back(t);
    return Polynomial(ctx_, std::move(ts));
}

Polynomial Polynomial::homogenize(const std::string& hv) const {
    for (const auto& n : *ctx_)
        if (n == hv) throw context_error("homogenizing variable already in context: " + hv);
    VarContext names = *ctx_;
    names.push_back(hv);
    ContextPtr out = make_context(std::move(names));
    int d = degree();
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(out->size());
        std::copy(t.mono.exps.begin(), t.mono.exps.end(), m.exps.begin());
        m.exps.back() = static_cast<std::uint32_t>(d - t.mono.degree());
        ts.push_back({t.coeff, std::move(m)});
    }
    return from_terms(std::move(out), std::move(ts));
}

Polynomial Polynomial::dehomogenize(std::size_t index) const {
    assert(index < nvars());
    VarContext names;
    for (std::size_t i = 0; i < ctx_->size(); ++i)
        if (i != index) names.push_back((*ctx_)[i]);
    ContextPtr out = make_context(std::move(names));
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(out->size());
        std::size_t j = 0;
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            if (i != index) m.exps[j++] = t.mono.exps[i];
        ts.push_back({t.coeff, std::move(m)});
    }
    return from_terms(std::move(out), std::move(ts));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, ContextPtr out_ctx) const {
    if (images.size() != nvars())
        throw context_error("substitute requires one image per variable");
    for (const auto& im : images)
        if (!same_context(im.context(), out_ctx))
            throw context_error("substitution image in wrong context");
    Polynomial result = Polynomial::zero(out_ctx);
    // Cache successive powers of each image.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(out_ctx, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(out_ctx, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (t.mono.exps[i] > 0) prod = prod * power(i, t.mono.exps[i]);
        }
        result += prod;
    }
    return result;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& point) const {
    assert(point.size() == nvars());
    std::complex<double> acc(0.0, 0.0);
    for (const auto& t : terms_) {
        std::complex<double> v(to_double(t.coeff), 0.0);
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t e = 0; e < t.mono.exps[i]; ++e) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

double Polynomial::eval_magnitude(const std::vector<std::complex<double>>& point) const {
    assert(point.size() == nvars());
    double acc = 0.0;
    for (const auto& t : terms_) {
        double v = std::abs(to_double(t.coeff));
        for (std::size_t i = 0; i < point.size(); ++i) {
            double m = std::abs(point[i]);
            for (std::uint32_t e = 0; e < t.mono.exps[i]; ++e) v *= m;
        }
        acc += v;
    }
    return acc;
}

} // namespace coneinf
