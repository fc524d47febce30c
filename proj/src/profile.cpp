#include "ds2/profile.hpp"

#include <cmath>

namespace ds2 {

namespace {

// Parabolic refinement through three equispaced samples; returns the
// offset in cells (clamped to half a cell) and the interpolated value.
struct AxisRefinement {
    double offset = 0.0;
    double bump = 0.0; // value gain over the center sample
};

AxisRefinement refine_axis(double lo, double mid, double hi) {
    const double denom = lo - 2.0 * mid + hi;
    if (denom >= 0.0) return {}; // not a strict local max along this axis
    double offset = 0.5 * (lo - hi) / denom;
    offset = std::clamp(offset, -0.5, 0.5);
    const double bump = -0.25 * (lo - hi) * offset;
    return {offset, bump};
}

} // namespace

PeakInfo locate_maximum(const ComplexField2D& psi) {
    if (psi.space() != Space::physical)
        throw usage_error("locate_maximum: input must be physical-space");
    const SpectralGrid& grid = psi.grid();
    const std::size_t N = grid.N;

    std::size_t best = 0;
    double best_sq = -1.0, min_sq = 0.0;
    bool tie = false;
    for (std::size_t k = 0; k < N * N; ++k) {
        const double v = std::norm(psi.data()[k]);
        if (v > best_sq) {
            best_sq = v;
            best = k;
            tie = false;
        } else if (v == best_sq && k != best) {
            tie = true;
        }
        if (k == 0) min_sq = v;
        min_sq = std::min(min_sq, v);
    }
    if (best_sq == min_sq)
        throw no_peak_error("locate_maximum: field is flat");

    const std::size_t i = best / N, j = best % N;
    auto modulus = [&](std::size_t ii, std::size_t jj) {
        return std::abs(psi.at(ii % N, jj % N));
    };
    const double center = modulus(i, j);
    const AxisRefinement rx = refine_axis(modulus(i, j + N - 1), center, modulus(i, j + 1));
    const AxisRefinement ry = refine_axis(modulus(i + N - 1, j), center, modulus(i + 1, j));

    PeakInfo peak;
    peak.x = grid.x_axis[j] + rx.offset * grid.dx;
    peak.y = grid.y_axis[i] + ry.offset * grid.dx;
    peak.value = center + rx.bump + ry.bump;
    peak.multi_peak = tie;
    return peak;
}

RescaleFrame frame_from_peak(const PeakInfo& peak) {
    if (!(peak.value > 0.0))
        throw usage_error("frame_from_peak: peak value must be positive");
    return {peak.x, peak.y, 2.0 / peak.value};
}

std::vector<double> rescaled_lump(const GridPtr& grid, const RescaleFrame& frame) {
    if (!(frame.L > 0.0))
        throw usage_error("rescaled_lump: L must be positive");
    const std::size_t N = grid->N;
    std::vector<double> out(N * N);
    for (std::size_t i = 0; i < N; ++i) {
        const double Y = (grid->y_axis[i] - frame.y0) / frame.L;
        for (std::size_t j = 0; j < N; ++j) {
            const double X = (grid->x_axis[j] - frame.x0) / frame.L;
            out[i * N + j] = 2.0 / ((1.0 + X * X + Y * Y) * frame.L);
        }
    }
    return out;
}

ProfileResidual profile_residual(const ComplexField2D& psi, const RescaleFrame& frame) {
    if (psi.space() != Space::physical)
        throw usage_error("profile_residual: input must be physical-space");
    const std::vector<double> lump = rescaled_lump(psi.grid_ptr(), frame);
    ProfileResidual out;
    out.residual.resize(lump.size());
    double max_res = 0.0, max_psi = 0.0;
    for (std::size_t k = 0; k < lump.size(); ++k) {
        const double mod = std::abs(psi.data()[k]);
        out.residual[k] = mod - lump[k];
        max_res = std::max(max_res, std::abs(out.residual[k]));
        max_psi = std::max(max_psi, mod);
    }
    out.ratio = (max_psi > 0.0) ? max_res / max_psi : 0.0;
    return out;
}

} // namespace ds2
