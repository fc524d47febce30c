#include "ds2/blowup_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ds2/common.hpp"

namespace ds2 {

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& points) {
    double d = 0.0;
    for (std::size_t a = 1; a < points.size(); ++a)
        for (std::size_t i = 0; i < points[a].size(); ++i)
            d = std::max(d, std::abs(points[a][i] - points[0][i]));
    return d;
}

} // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const SimplexConfig& config) {
    const std::size_t n = config.initial_guess.size();
    if (n == 0) throw optimizer_error("nelder_mead: empty initial guess");

    // fminsearch-style initial simplex: perturb each coordinate by 5%,
    // or by 2.5e-4 where the coordinate is zero.
    std::vector<std::vector<double>> simplex(n + 1, config.initial_guess);
    for (std::size_t i = 0; i < n; ++i) {
        double& xi = simplex[i + 1][i];
        xi = (xi != 0.0) ? 1.05 * xi : 2.5e-4;
    }

    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = objective(simplex[i]);
    if (std::none_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); }))
        throw optimizer_error("nelder_mead: objective not finite at any initial vertex");

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    };

    long iter = 0;
    for (; iter < config.max_iterations; ++iter) {
        sort_simplex();
        const std::size_t best = order[0];
        const std::size_t worst = order[n];
        const std::size_t second_worst = order[n - 1];

        const double spread = std::abs(values[worst] - values[best]);
        if (simplex_diameter(simplex) <= config.tolerance && spread <= config.tolerance) {
            return {simplex[best], values[best], iter, true};
        }

        // Centroid of all vertices but the worst.
        std::vector<double> centroid(n, 0.0);
        for (std::size_t a = 0; a <= n; ++a) {
            if (a == worst) continue;
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[a][i];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto affine = [&](double coef) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i)
                p[i] = centroid[i] + coef * (centroid[i] - simplex[worst][i]);
            return p;
        };

        const std::vector<double> reflected = affine(config.reflection);
        const double f_reflected = objective(reflected);

        if (f_reflected < values[best]) {
            const std::vector<double> expanded = affine(config.expansion);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < values[second_worst]) {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
            continue;
        }

        if (f_reflected < values[worst]) {
            const std::vector<double> outside = affine(config.contraction);
            const double f_outside = objective(outside);
            if (f_outside <= f_reflected) {
                simplex[worst] = outside;
                values[worst] = f_outside;
                continue;
            }
        } else {
            const std::vector<double> inside = affine(-config.contraction);
            const double f_inside = objective(inside);
            if (f_inside < values[worst]) {
                simplex[worst] = inside;
                values[worst] = f_inside;
                continue;
            }
        }

        // Shrink toward the best vertex.
        for (std::size_t a = 0; a <= n; ++a) {
            if (a == best) continue;
            for (std::size_t i = 0; i < n; ++i)
                simplex[a][i] = simplex[best][i] +
                                config.shrink * (simplex[a][i] - simplex[best][i]);
            values[a] = objective(simplex[a]);
        }
    }

    sort_simplex();
    return {simplex[order[0]], values[order[0]], iter, false};
}

BlowupFit fit_blowup(const std::vector<SeriesPoint>& series, std::size_t window_size,
                     const SimplexConfig& config) {
    if (window_size < 10)
        throw usage_error("fit_blowup: window_size must be >= 10");
    if (series.size() < 10)
        throw usage_error("fit_blowup: need at least 10 points");

    const std::size_t count = std::min(window_size, series.size());
    const std::size_t first = series.size() - count;
    std::vector<double> t(count), log_linf(count);
    for (std::size_t i = 0; i < count; ++i) {
        const SeriesPoint& p = series[first + i];
        if (!(p.linf > 0.0))
            throw usage_error("fit_blowup: linf values must be positive");
        if (i > 0 && !(p.t > t[i - 1]))
            throw usage_error("fit_blowup: times must be strictly increasing");
        t[i] = p.t;
        log_linf[i] = std::log(p.linf);
    }

    BlowupFit fit;
    fit.window_first = first;
    fit.window_last = series.size() - 1;

    const auto [lo, hi] = std::minmax_element(log_linf.begin(), log_linf.end());
    if (*hi - *lo < 1e-14) {
        fit.degenerate = true;
        return fit;
    }

    const double t_last = t.back();
    auto objective = [&](const std::vector<double>& p) {
        const double alpha = p[0], gamma = p[1], t_star = p[2];
        if (!(t_star > t_last)) return std::numeric_limits<double>::infinity();
        double sse = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double r = log_linf[i] - alpha - gamma * std::log(t_star - t[i]);
            sse += r * r;
        }
        return sse;
    };

    SimplexConfig cfg = config;
    if (cfg.initial_guess.empty()) {
        const double t_star0 = t_last + 2.0 * (t_last - t[count - 2]);
        const double gamma0 = -1.0;
        const double alpha0 = log_linf.back() - gamma0 * std::log(t_star0 - t_last);
        cfg.initial_guess = {alpha0, gamma0, t_star0};
    }

    const SimplexResult best = nelder_mead(objective, cfg);
    fit.alpha = best.minimizer[0];
    fit.gamma = best.minimizer[1];
    fit.t_star = best.minimizer[2];
    fit.residual = std::sqrt(best.value / static_cast<double>(count));
    return fit;
}

} // namespace ds2
