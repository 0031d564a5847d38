#include "kinet/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <vector>

namespace kinet {

namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {0.991455371120812639206854697526329,
                            0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926,
                            0.741531185599394439863864773280788,
                            0.586087235467691130294144838258730,
                            0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245,
                            0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970,
                            0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518,
                            0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550,
                            0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649,
                            0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082,
                           0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975,
                           0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, error;
};

// Wynn epsilon extrapolation of a partial-sum sequence. Returns the
// deepest even-column entry; *spread reports the difference against the
// previous depth as an error proxy.
double wynn_epsilon(const std::vector<double>& s, double* spread) {
    const std::size_t n = std::min<std::size_t>(s.size(), 30);
    // Raw series already at roundoff: acceleration would divide by ~0.
    const double raw_diff = std::abs(s[s.size() - 1] - s[s.size() - 2]);
    if (raw_diff <= 1e-15 * (std::abs(s.back()) + 1e-300)) {
        if (spread) *spread = raw_diff;
        return s.back();
    }
    std::vector<double> prev(n, 0.0);                                            // epsilon_{-1}
    std::vector<double> cur(s.end() - static_cast<std::ptrdiff_t>(n), s.end());  // epsilon_0
    double best = cur.back();
    double prev_best = best;
    while (cur.size() >= 2) {
        std::vector<double> next(cur.size() - 1);
        bool degenerate = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double d = cur[i + 1] - cur[i];
            if (d == 0.0 || !std::isfinite(1.0 / d)) {
                degenerate = true;
                break;
            }
            next[i] = prev[i + 1] + 1.0 / d;
        }
        if (degenerate) break;
        prev = std::move(cur);
        cur = std::move(next);
        if ((n - cur.size()) % 2 == 0 && std::isfinite(cur.back())) {  // even column
            prev_best = best;
            best = cur.back();
        }
    }
    if (spread) *spread = std::abs(best - prev_best);
    return best;
}

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double fsum = f(c - x) + f(c + x);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, int max_intervals) {
    if (a == b) return {0.0, 0.0, true};
    std::vector<Interval> heap;
    heap.push_back(gk15(f, a, b));
    double total = heap[0].value;
    double err = heap[0].error;
    auto cmp = [](const Interval& x, const Interval& y) { return x.error < y.error; };
    std::make_heap(heap.begin(), heap.end(), cmp);
    while (static_cast<int>(heap.size()) < max_intervals) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (err <= tol) return {total, err, true};
        std::pop_heap(heap.begin(), heap.end(), cmp);
        const Interval worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {  // cannot split further
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), cmp);
            break;
        }
        const Interval left = gk15(f, worst.a, mid);
        const Interval right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), cmp);
    }
    const double tol = std::max(abs_tol, rel_tol * std::abs(total));
    return {total, err, err <= tol};
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       double rel_tol, double abs_tol) {
    auto transformed = [&f, a](double t) {
        const double om = 1.0 - t;
        const double x = a + t / om;
        return f(x) / (om * om);
    };
    // The endpoint t -> 1 maps to infinity; the integrand must vanish there.
    return integrate_adaptive(transformed, 0.0, 1.0 - 1e-14, rel_tol, abs_tol);
}

QuadratureResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                                     double rel_tol, int max_level) {
    const double half = 0.5 * (b - a);
    const double pi_half = 1.5707963267948966;
    // Nodes are addressed by their distance d to the nearest endpoint,
    // computed without cancellation, so that integrable endpoint
    // singularities keep their mass even when tanh saturates.
    auto node_contrib = [&](double t) {
        const double u = pi_half * std::sinh(t);
        const double em = std::exp(-2.0 * u);
        const double dist = half * 2.0 * em / (1.0 + em);        // half*(1 - tanh u)
        const double weight = 4.0 * pi_half * std::cosh(t) * em / ((1.0 + em) * (1.0 + em));
        double s = 0.0;
        if (a + dist > a) s += f(a + dist);   // node approaching a from inside
        if (b - dist < b) s += f(b - dist);   // node approaching b from inside
        return weight * s;
    };
    double h = 1.0;
    double sum = pi_half * f(a + half);  // t = 0 midpoint
    for (int j = 1; j <= 7; ++j) sum += node_contrib(h * j);
    double prev = half * h * sum;
    double value = prev;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        // Add the nodes at odd multiples of the new spacing.
        for (int j = 1;; j += 2) {
            const double t = h * j;
            if (t > 7.0) break;  // weights below ~1e-300 past this point
            sum += node_contrib(t);
        }
        value = half * h * sum;
        if (level >= 3 && std::abs(value - prev) <= rel_tol * std::abs(value))
            return {value, std::abs(value - prev), true};
        prev = value;
    }
    return {value, std::abs(value - prev), false};
}

QuadratureResult integrate_sin_tail(const std::function<double(double)>& g, double k, double a,
                                    double rel_tol, int max_half_periods) {
    const double period = M_PI / k;
    std::vector<double> partial;  // partial sums
    double sum = 0.0;
    double seg_scale = 0.0;  // cancellation floor reference
    auto f = [&](double r) { return g(r) * std::sin(k * r); };
    // First segment from a to the next zero of sin(kr).
    double edge = std::ceil(a * k / M_PI) * period;
    if (edge > a) {
        sum += integrate_adaptive(f, a, edge, rel_tol * 0.1, 0.0).value;
        seg_scale = std::abs(sum);
    } else {
        edge = a;
    }
    partial.push_back(sum);
    // Error proxy: stability of the extrapolated limit as segments accrue.
    double last_best = std::numeric_limits<double>::quiet_NaN();
    for (int m = 0; m < max_half_periods; ++m) {
        const double lo = edge + m * period;
        const double hi = lo + period;
        const double seg = integrate_adaptive(f, lo, hi, rel_tol * 0.1, 0.0).value;
        sum += seg;
        seg_scale = std::max(seg_scale, std::abs(seg));
        partial.push_back(sum);
        if (partial.size() >= 6) {
            const double best = wynn_epsilon(partial, nullptr);
            const double spread = std::abs(best - last_best);
            // Relative target, or the absolute floor set by the
            // alternating-segment cancellation.
            if (std::isfinite(last_best) &&
                spread <= std::max(rel_tol * std::abs(best), 1e-14 * seg_scale))
                return {best, spread, true};
            last_best = best;
        }
    }
    const double best = wynn_epsilon(partial, nullptr);
    return {best, std::abs(best - last_best), false};
}

}  // namespace kinet
