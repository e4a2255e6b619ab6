#include "fzeta/roots.hpp"

#include "fzeta/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fzeta {

namespace {

using cd = std::complex<double>;

constexpr int kMaxIterations = 500;

struct Dense {
    std::vector<cd> c; // index = degree
    std::vector<cd> dc;

    explicit Dense(const Poly& p)
    {
        for (const auto& x : p.coeffs())
            c.emplace_back(x.get_d(), 0.0);
        for (std::size_t i = 1; i < c.size(); ++i)
            dc.push_back(c[i] * static_cast<double>(i));
    }
    cd eval(cd z) const
    {
        cd acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }
    cd deval(cd z) const
    {
        cd acc = 0;
        for (auto it = dc.rbegin(); it != dc.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }
    double scale(double r) const
    {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * r + std::abs(*it);
        return acc;
    }
};

std::vector<cd> aberth(const Dense& f, double tol, bool& converged)
{
    const int n = static_cast<int>(f.c.size()) - 1;
    std::vector<cd> z(static_cast<std::size_t>(n));
    // Initial points on a circle of radius from the Cauchy-style bound on the
    // geometric mean of root moduli.
    double radius = std::pow(std::abs(f.c.front() / f.c.back()), 1.0 / n);
    if (!(radius > 0) || !std::isfinite(radius))
        radius = 1.0;
    for (int k = 0; k < n; ++k) {
        double theta = 2 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
    }
    converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
        double max_step = 0;
        for (int i = 0; i < n; ++i) {
            cd zi = z[static_cast<std::size_t>(i)];
            cd pv = f.eval(zi);
            if (std::abs(pv) <= tol * 1e-3 * f.scale(std::abs(zi)))
                continue;
            cd ratio = pv / f.deval(zi);
            cd sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            cd step = ratio / (1.0 - ratio * sum);
            z[static_cast<std::size_t>(i)] = zi - step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(zi)));
        }
        if (max_step < 1e-15) {
            converged = true;
            break;
        }
    }
    // Accept a stalled iteration if every residual is already below tolerance.
    if (!converged) {
        converged = std::all_of(z.begin(), z.end(), [&](cd w) {
            return std::abs(f.eval(w)) <= tol * f.scale(std::abs(w));
        });
    }
    return z;
}

void newton_polish(const Dense& f, cd& z)
{
    for (int i = 0; i < 5; ++i) {
        cd d = f.deval(z);
        if (d == cd(0))
            return;
        cd step = f.eval(z) / d;
        cd next = z - step;
        if (std::abs(f.eval(next)) >= std::abs(f.eval(z)))
            return;
        z = next;
    }
}

} // namespace

double relative_residual(const Poly& p, std::complex<double> z)
{
    double scale = 0;
    const double r = std::abs(z);
    for (int i = p.degree(); i >= 0; --i)
        scale = scale * r + std::abs(p[i].get_d());
    if (scale == 0)
        return 0;
    return std::abs(p.eval(z)) / scale;
}

std::vector<Root> poly_complex_roots(const Poly& p, double tol)
{
    if (p.is_zero())
        throw DomainError("poly_complex_roots: zero polynomial");
    if (p.degree() < 1)
        throw DomainError("poly_complex_roots: degree must be at least 1");
    std::vector<Root> out;
    bool all_converged = true;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Poly f = factor.primitive();
        std::vector<cd> zs;
        // Zero roots are exact; strip them before iterating.
        int v = f.valuation();
        for (int i = 0; i < v; ++i)
            zs.emplace_back(0.0, 0.0);
        f = f.shifted(-v);
        if (f.degree() == 1) {
            zs.emplace_back(Rational(-f[0] / f[1]).get_d(), 0.0);
        } else if (f.degree() == 2) {
            // Closed form with the cancellation-free variant.
            double a = f[2].get_d(), b = f[1].get_d(), c = f[0].get_d();
            cd disc = std::sqrt(cd(b * b - 4 * a * c));
            cd qv = -0.5 * (b + (b >= 0 ? disc : -disc));
            zs.push_back(qv / a);
            zs.push_back(c / qv);
        } else if (f.degree() > 2) {
            Dense d(f);
            bool ok = false;
            auto found = aberth(d, tol, ok);
            all_converged = all_converged && ok;
            for (auto& z : found) {
                newton_polish(d, z);
                zs.push_back(z);
            }
        }
        // Real-coefficient input: snap conjugate partners and near-real values.
        for (auto& z : zs) {
            if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z)))
                z = cd(z.real(), 0.0);
            out.push_back(Root{z, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.value.imag() != b.value.imag())
            return a.value.imag() < b.value.imag();
        return a.value.real() < b.value.real();
    });
    if (!all_converged)
        throw RootConvergenceError("poly_complex_roots: iteration cap reached", out);
    for (const auto& r : out)
        if (relative_residual(p, r.value) > tol)
            throw RootConvergenceError("poly_complex_roots: residual above tolerance", out);
    return out;
}

} // namespace fzeta
