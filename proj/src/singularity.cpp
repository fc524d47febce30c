#include "ds2/singularity.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ds2 {

std::vector<SlicePoint> axis_slice(const ComplexField2D& spectrum, SpectralAxis axis) {
    if (spectrum.space() != Space::spectral)
        throw usage_error("axis_slice: input must be spectral-space");
    const SpectralGrid& grid = spectrum.grid();
    const std::size_t N = grid.N;
    std::vector<SlicePoint> slice;
    slice.reserve(N / 2 - 1);
    for (std::size_t k = 1; k < N / 2; ++k) {
        if (axis == SpectralAxis::xi1)
            slice.push_back({grid.xi1_axis[k], std::abs(spectrum.at(0, k))});
        else
            slice.push_back({grid.xi2_axis[k], std::abs(spectrum.at(k, 0))});
    }
    return slice;
}

namespace {

// Least squares for a tall m x 3 system via Householder QR.
std::array<double, 3> solve_ls3(std::vector<std::array<double, 3>> a, std::vector<double> y) {
    const std::size_t m = a.size();
    for (std::size_t col = 0; col < 3; ++col) {
        double norm_sq = 0.0;
        for (std::size_t r = col; r < m; ++r) norm_sq += a[r][col] * a[r][col];
        const double norm = std::sqrt(norm_sq);
        if (norm < 1e-13)
            throw fit_error("fourier fit: rank-deficient design matrix");
        const double alpha = (a[col][col] > 0.0) ? -norm : norm;
        std::vector<double> v(m, 0.0);
        v[col] = a[col][col] - alpha;
        for (std::size_t r = col + 1; r < m; ++r) v[r] = a[r][col];
        double v_sq = 0.0;
        for (std::size_t r = col; r < m; ++r) v_sq += v[r] * v[r];
        if (v_sq == 0.0) continue;
        for (std::size_t c = col; c < 3; ++c) {
            double dot = 0.0;
            for (std::size_t r = col; r < m; ++r) dot += v[r] * a[r][c];
            const double f = 2.0 * dot / v_sq;
            for (std::size_t r = col; r < m; ++r) a[r][c] -= f * v[r];
        }
        double dot = 0.0;
        for (std::size_t r = col; r < m; ++r) dot += v[r] * y[r];
        const double f = 2.0 * dot / v_sq;
        for (std::size_t r = col; r < m; ++r) y[r] -= f * v[r];
    }
    std::array<double, 3> x{};
    for (int i = 2; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < 3; ++j) s -= a[i][j] * x[j];
        if (std::abs(a[i][i]) < 1e-13)
            throw fit_error("fourier fit: rank-deficient design matrix");
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace

SingularityFit fit_fourier_asymptotics(const std::vector<SlicePoint>& slice, double k_min,
                                       double k_max, int envelope_width) {
    if (envelope_width < 1) throw usage_error("fourier fit: envelope_width must be >= 1");
    if (!(k_min < k_max)) throw usage_error("fourier fit: requires k_min < k_max");

    double peak = 0.0;
    for (const SlicePoint& p : slice) peak = std::max(peak, p.modulus);
    const double floor = 1e-13 * peak;

    // Block maxima suppress the oscillations that periodized algebraic
    // tails imprint on the coefficients.
    std::vector<SlicePoint> points;
    for (std::size_t start = 0; start < slice.size();
         start += static_cast<std::size_t>(envelope_width)) {
        const std::size_t end = std::min(slice.size(), start + envelope_width);
        const SlicePoint* best = nullptr;
        for (std::size_t i = start; i < end; ++i)
            if (!best || slice[i].modulus > best->modulus) best = &slice[i];
        if (best && best->k >= k_min && best->k <= k_max && best->modulus > floor &&
            best->k > 0.0)
            points.push_back(*best);
    }
    if (points.size() < 10)
        throw fit_error("fourier fit: fewer than 10 usable points in the window");

    // Center and scale the regressors; the model coefficients for ln k and
    // k are unchanged, only the constant needs unshifting.
    double mean_log_k = 0.0, mean_k = 0.0;
    for (const SlicePoint& p : points) {
        mean_log_k += std::log(p.k);
        mean_k += p.k;
    }
    mean_log_k /= static_cast<double>(points.size());
    mean_k /= static_cast<double>(points.size());
    double scale_u = 0.0, scale_w = 0.0;
    for (const SlicePoint& p : points) {
        scale_u = std::max(scale_u, std::abs(std::log(p.k) - mean_log_k));
        scale_w = std::max(scale_w, std::abs(p.k - mean_k));
    }
    if (scale_u == 0.0 || scale_w == 0.0)
        throw fit_error("fourier fit: degenerate k range");

    std::vector<std::array<double, 3>> design(points.size());
    std::vector<double> rhs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        design[i] = {1.0, (std::log(points[i].k) - mean_log_k) / scale_u,
                     (points[i].k - mean_k) / scale_w};
        rhs[i] = std::log(points[i].modulus);
    }
    const std::array<double, 3> coef = solve_ls3(design, rhs);
    const double c_log_k = coef[1] / scale_u;
    const double c_k = coef[2] / scale_w;
    const double c_const = coef[0] - c_log_k * mean_log_k - c_k * mean_k;

    SingularityFit fit;
    fit.const_term = c_const;
    fit.mu = -c_log_k - 1.0;
    fit.delta = -c_k;
    fit.k_range = {points.front().k, points.back().k};

    double sse = 0.0;
    for (const SlicePoint& p : points) {
        const double r =
            std::log(p.modulus) - (c_const + c_log_k * std::log(p.k) + c_k * p.k);
        sse += r * r;
    }
    fit.rms_residual = std::sqrt(sse / static_cast<double>(points.size()));
    return fit;
}

std::pair<double, double> default_k_window(const SpectralGrid& grid) {
    const double k_max = grid.max_wavenumber();
    return {0.4 * k_max, 0.8 * k_max};
}

bool singularity_reached(const SingularityFit& fit, const SpectralGrid& grid) {
    return fit.delta < grid.m;
}

} // namespace ds2
