#include "coneinf/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coneinf/errors.hpp"
#include "coneinf/rng.hpp"

namespace coneinf {

namespace {

using Cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

Cplx horner(const std::vector<Cplx>& coeffs, Cplx x) {
    Cplx v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

} // namespace

std::vector<Cplx> polynomial_roots(std::vector<Cplx> coeffs, int max_iterations) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) return {};
    Cplx lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    std::size_t d = coeffs.size() - 1;

    double bound = 0;
    for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(coeffs[i]));
    bound += 1.0;

    std::vector<Cplx> w(d);
    Cplx rot(0.4, 0.9);
    Cplx cur(1.0, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        cur *= rot;
        w[i] = bound * cur;
    }

    for (int iter = 0; iter < max_iterations; ++iter) {
        double shift = 0, scale = 1;
        for (std::size_t i = 0; i < d; ++i) {
            Cplx den = 1;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) den *= w[i] - w[j];
            if (std::abs(den) < 1e-300) {
                w[i] += Cplx(1e-8 * bound, 1e-8 * bound);
                shift = bound;
                continue;
            }
            Cplx delta = horner(coeffs, w[i]) / den;
            w[i] -= delta;
            shift = std::max(shift, std::abs(delta));
            scale = std::max(scale, std::abs(w[i]));
        }
        if (shift < 1e-14 * scale) break;
    }

    std::vector<Cplx> deriv(d);
    for (std::size_t i = 1; i <= d; ++i)
        deriv[i - 1] = coeffs[i] * static_cast<double>(i);
    for (auto& root : w) {
        for (int step = 0; step < 3; ++step) {
            Cplx dp = horner(deriv, root);
            if (std::abs(dp) < 1e-300) break;
            root -= horner(coeffs, root) / dp;
        }
    }

    std::sort(w.begin(), w.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return w;
}

PointCloud sample_hypersurface(const Polynomial& f, double band_lo, double band_hi,
                               std::size_t count, std::uint64_t seed, double residual_tol) {
    std::size_t n = f.nvars();
    if (n < 1) throw std::domain_error("sampling needs at least one variable");
    int deg_last = f.degree_in(n - 1);
    if (deg_last < 1) throw std::domain_error("polynomial does not depend on its last variable");
    if (count < 1) throw std::domain_error("count must be positive");
    if (!(0 <= band_lo && band_lo < band_hi))
        throw std::domain_error("band bounds must satisfy 0 <= lo < hi");

    PointCloud cloud;
    cloud.complex_dim = n;
    cloud.band_lo = band_lo;
    cloud.band_hi = band_hi;
    cloud.residual_tol = residual_tol;

    // Radial scale of the free coordinates: log-uniform from far below the
    // band floor (surfaces can carry all their size in the solved
    // coordinate) up to the band ceiling.
    double tau_min = std::max(1e-8, band_lo * 1e-6);
    double tau_max = band_hi;

    std::vector<int> max_exp(n, 0);
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < n; ++i)
            max_exp[i] = std::max(max_exp[i], static_cast<int>(t.mono.exps[i]));

    // Plane curves get jittered-stratified phases for the free coordinate:
    // the accepted points then cover the circle without Poisson gaps, which
    // keeps neighbor graphs built on thin shells free of both density holes
    // and cross-sheet shortcuts. When a phase cell stays infeasible for this
    // long (acceptance can depend on the phase), fall back to uniform draws.
    constexpr std::size_t kPhaseStuckLimit = 3000;
    std::size_t attempts_since_accept = 0;

    std::size_t max_attempts = 200 + 2000 * count;
    for (std::size_t attempt = 0; attempt < max_attempts && cloud.size() < count; ++attempt) {
        Rng rng = derive_rng(seed, "band-sample", attempt);
        double tau = std::exp(rng.uniform(std::log(tau_min), std::log(tau_max)));
        CPoint zp(n - 1);
        if (n == 2) {
            double phase;
            if (attempts_since_accept < kPhaseStuckLimit) {
                double cell = static_cast<double>(cloud.size()) + rng.uniform(0.0, 1.0);
                phase = 2.0 * kPi * cell / static_cast<double>(count);
            } else {
                phase = rng.uniform(0.0, 2.0 * kPi);
            }
            zp[0] = tau * Cplx(std::cos(phase), std::sin(phase));
        } else if (n > 2) {
            double norm2 = 0;
            for (auto& z : zp) {
                z = {rng.gaussian(), rng.gaussian()};
                norm2 += std::norm(z);
            }
            if (norm2 == 0) continue;
            double s = tau / std::sqrt(norm2);
            for (auto& z : zp) z *= s;
        }

        std::vector<std::vector<Cplx>> powers(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            powers[i].assign(static_cast<std::size_t>(max_exp[i]) + 1, 1.0);
            for (int e = 1; e <= max_exp[i]; ++e) powers[i][e] = powers[i][e - 1] * zp[i];
        }

        std::vector<Cplx> uni(static_cast<std::size_t>(deg_last) + 1, 0.0);
        for (const auto& t : f.terms()) {
            Cplx c(to_double(t.coeff), 0.0);
            for (std::size_t i = 0; i + 1 < n; ++i) c *= powers[i][t.mono.exps[i]];
            uni[t.mono.exps[n - 1]] += c;
        }
        double max_c = 0;
        for (const auto& c : uni) max_c = std::max(max_c, std::abs(c));
        if (max_c == 0 || std::abs(uni.back()) <= 1e-12 * max_c) continue;

        CPoint p(n);
        std::copy(zp.begin(), zp.end(), p.begin());
        std::size_t before = cloud.size();
        for (const Cplx& root : polynomial_roots(uni)) {
            p[n - 1] = root;
            double norm2 = 0;
            for (const auto& z : p) norm2 += std::norm(z);
            double norm = std::sqrt(norm2);
            if (norm < band_lo || norm > band_hi) continue;
            double residual = std::abs(f.eval(p)) / std::max(1.0, f.eval_magnitude(p));
            if (residual > residual_tol) continue;
            cloud.push(p);
            if (cloud.size() == count) break;
        }
        attempts_since_accept = cloud.size() > before ? 0 : attempts_since_accept + 1;
    }
    if (cloud.size() < count)
        throw sampling_error("collected " + std::to_string(cloud.size()) + " of " +
                             std::to_string(count) + " points before the attempt budget ran out");
    return cloud;
}

} // namespace coneinf
