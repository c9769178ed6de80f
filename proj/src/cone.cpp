#include "coneinf/cone.hpp"

#include <algorithm>

#include "coneinf/errors.hpp"
#include "coneinf/rng.hpp"

namespace coneinf {

std::optional<RatMatrix> invert_rat_matrix(const RatMatrix& a) {
    std::size_t n = a.size();
    RatMatrix m = a;
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

bool is_permutation_matrix(const RatMatrix& a) {
    std::size_t n = a.size();
    std::vector<bool> row_used(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t ones = 0, one_row = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i][j] == 1) {
                ++ones;
                one_row = i;
            } else if (a[i][j] != 0) {
                return false;
            }
        }
        if (ones != 1 || row_used[one_row]) return false;
        row_used[one_row] = true;
    }
    return true;
}

ConeResult cone_at_infinity(const Ideal& I, const MonomialOrder& ord, std::size_t budget) {
    if (!ord.is_graded())
        throw std::domain_error("cone at infinity requires a graded monomial order");
    if (I.is_zero()) return {I, true};
    const auto& gb = I.groebner_basis(ord, budget);
    if (gb.size() == 1 && gb.front().is_constant())
        throw std::domain_error("unit ideal: the empty variety has no cone at infinity");
    std::vector<Polynomial> gens;
    gens.reserve(gb.size());
    for (const auto& g : gb) gens.push_back(g.highest_form().monic(ord));
    Ideal cone(I.context(), std::move(gens));
    bool homogeneous = true;
    for (const auto& g : cone.generators()) homogeneous = homogeneous && g.is_homogeneous();
    return {std::move(cone), homogeneous};
}

namespace {

std::string fresh_variable_name(const VarContext& names) {
    auto taken = [&](const std::string& c) {
        return std::find(names.begin(), names.end(), c) != names.end();
    };
    if (!taken("h")) return "h";
    for (int i = 0;; ++i) {
        std::string c = "h" + std::to_string(i);
        if (!taken(c)) return c;
    }
}

} // namespace

ProjectiveClosure projective_closure(const Ideal& I, std::size_t budget) {
    std::string hv = fresh_variable_name(*I.context());
    VarContext names = *I.context();
    names.push_back(hv);
    ContextPtr ctx_h = make_context(std::move(names));
    std::vector<Polynomial> gens;
    if (!I.is_zero()) {
        for (const auto& g : I.groebner_basis(MonomialOrder::grevlex(), budget))
            gens.push_back(g.homogenize(hv));
    }
    return {Ideal(ctx_h, std::move(gens)), hv};
}

Ideal part_at_infinity(const Ideal& I, std::size_t budget) {
    if (I.is_zero()) return I;
    ProjectiveClosure pc = projective_closure(I, budget);
    std::size_t n = I.nvars();
    ContextPtr ctx_h = pc.ideal.context();
    std::vector<Polynomial> gens = pc.ideal.generators();
    gens.push_back(Polynomial::variable(ctx_h, n));
    Ideal with_plane(ctx_h, std::move(gens));
    const auto& gb = with_plane.groebner_basis(MonomialOrder::grevlex(), budget);

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(I.context(), i));
    images.push_back(Polynomial::zero(I.context()));
    std::vector<Polynomial> sliced;
    for (const auto& g : gb) {
        Polynomial s = g.substitute(images, I.context());
        if (!s.is_zero()) sliced.push_back(s.monic(MonomialOrder::grevlex()));
    }
    return Ideal(I.context(), std::move(sliced));
}

CoordinateSplit CoordinateSplit::identity(std::size_t n, std::size_t k) {
    RatMatrix a(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    CoordinateSplit s;
    s.k = k;
    s.matrix = a;
    s.inverse = std::move(a);
    return s;
}

CoordinateSplit CoordinateSplit::from_matrix(std::size_t k, RatMatrix a) {
    auto inv = invert_rat_matrix(a);
    if (!inv) throw std::domain_error("coordinate change matrix is singular");
    CoordinateSplit s;
    s.k = k;
    s.matrix = std::move(a);
    s.inverse = std::move(*inv);
    return s;
}

Ideal apply_linear_change(const Ideal& I, const CoordinateSplit& split) {
    std::size_t n = I.nvars();
    const RatMatrix& a = split.matrix;
    if (a.size() != n) throw std::domain_error("matrix size does not match variable count");

    ContextPtr out_ctx;
    if (is_permutation_matrix(a)) {
        // Column j carries axis sigma(j); let the new coordinate keep that name.
        VarContext names(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (a[i][j] == 1) names[j] = (*I.context())[i];
        out_ctx = make_context(std::move(names));
    } else {
        out_ctx = I.context();
    }

    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial li = Polynomial::zero(out_ctx);
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0) continue;
            li += Polynomial::variable(out_ctx, j).scaled(a[i][j]);
        }
        images.push_back(std::move(li));
    }
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.substitute(images, out_ctx));
    return Ideal(out_ctx, std::move(gens));
}

bool is_admissible_split(const Ideal& I, const CoordinateSplit& split, std::size_t budget) {
    std::size_t n = I.nvars();
    if (split.k == 0 || split.k >= n)
        throw std::domain_error("split requires 0 < k < number of variables");
    Ideal T = apply_linear_change(I, split);
    if (T.is_unit(budget)) return true;
    Ideal cone = cone_at_infinity(T, MonomialOrder::grevlex(), budget).cone_ideal;
    std::vector<Polynomial> gens = cone.generators();
    for (std::size_t i = 0; i < split.k; ++i)
        gens.push_back(Polynomial::variable(T.context(), i));
    Ideal combined(T.context(), std::move(gens));
    const auto& gb = combined.groebner_basis(MonomialOrder::grevlex(), budget);
    if (gb.size() == 1 && gb.front().is_constant()) return true;
    std::vector<bool> covered(n, false);
    for (const auto& g : gb) {
        Monomial lt = g.leading_term(MonomialOrder::grevlex()).mono;
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

LinearChangeResult random_linear_change(const Ideal& I, std::size_t k, std::uint64_t seed,
                                        int retries, std::size_t budget) {
    std::size_t n = I.nvars();
    if (k == 0 || k >= n)
        throw std::domain_error("split requires 0 < k < number of variables");
    for (int attempt = 0; attempt < retries; ++attempt) {
        CoordinateSplit split;
        if (attempt == 0) {
            split = CoordinateSplit::identity(n, k);
        } else {
            Rng rng = derive_rng(seed, "linear-change", static_cast<std::uint64_t>(attempt));
            RatMatrix a(n, std::vector<Rat>(n, Rat(0)));
            for (std::size_t i = 0; i < n; ++i) {
                a[i][i] = 1;
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    a[i][j] += Rat(rng.uniform_int(-3, 3));
                }
            }
            auto inv = invert_rat_matrix(a);
            if (!inv) continue;
            split.k = k;
            split.matrix = std::move(a);
            split.inverse = std::move(*inv);
        }
        if (is_admissible_split(I, split, budget))
            return {apply_linear_change(I, split), std::move(split)};
    }
    throw genericity_error("no admissible coordinate split found after " +
                           std::to_string(retries) + " attempts");
}

} // namespace coneinf
