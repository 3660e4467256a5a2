#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace tdab {

namespace detail {

template <typename F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol,
                                depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                                depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with a relative error
/// target. The absolute tolerance is seeded from a coarse estimate of the
/// integral's magnitude so a zero integral does not stall the recursion.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double rel_tol,
                        int max_depth = 50) {
    if (!(b > a)) {
        if (a == b) return 0.0;
        throw std::domain_error("adaptive_simpson: b must exceed a");
    }
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double scale = std::abs(whole);
    // Probe a few interior points so an integrand with a vanishing coarse
    // Simpson estimate still gets a sensible magnitude scale.
    for (int k = 1; k <= 7; k += 2) {
        const double t = a + (b - a) * k / 8.0;
        scale = std::max(scale, (b - a) * std::abs(f(t)));
    }
    const double tol = rel_tol * (scale > 0.0 ? scale : 1.0);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol,
                                        max_depth);
}

/// Composite Simpson over tabulated samples (t_i, y_i), pairwise over
/// consecutive interval pairs. Each pair uses the quadratic through its
/// three points, so a shortened final step (non-uniform tail) is handled
/// without losing the overall ~4th-order behaviour of the uniform bulk.
/// Requires an odd sample count (even interval count), at least 3 samples.
inline double simpson_samples(std::span<const double> t,
                              std::span<const double> y) {
    const std::size_t n = t.size();
    if (n < 3) throw std::domain_error("simpson_samples: need >= 3 samples");
    if (n != y.size())
        throw std::domain_error("simpson_samples: size mismatch");
    if (n % 2 == 0)
        throw std::domain_error("simpson_samples: odd sample count required");
    double sum = 0.0;
    for (std::size_t i = 0; i + 2 < n; i += 2) {
        const double h0 = t[i + 1] - t[i];
        const double h1 = t[i + 2] - t[i + 1];
        const double h = h0 + h1;
        sum += h / 6.0 * ((2.0 - h1 / h0) * y[i] +
                          (h * h / (h0 * h1)) * y[i + 1] +
                          (2.0 - h0 / h1) * y[i + 2]);
    }
    return sum;
}

}  // namespace tdab
