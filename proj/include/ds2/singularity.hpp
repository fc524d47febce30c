#ifndef DS2_SINGULARITY_HPP
#define DS2_SINGULARITY_HPP

#include <utility>
#include <vector>

#include "ds2/grid.hpp"

namespace ds2 {

// Fit of |fhat(k)| ~ C * k^-(mu+1) * exp(-k*delta) on an axis slice of the
// spectrum; delta estimates the distance of the nearest complex
// singularity from the real axis.
struct SingularityFit {
    double mu = 0.0;
    double delta = 0.0; // negative values signal fit breakdown
    double const_term = 0.0;
    std::pair<double, double> k_range{0.0, 0.0}; // k actually fitted
    double rms_residual = 0.0;
};

enum class SpectralAxis { xi1, xi2 };

struct SlicePoint {
    double k = 0.0;
    double modulus = 0.0;
};

// Positive-wavenumber half of the chosen axis (indices 1..N/2-1) with the
// moduli of the coefficients; spectral input required.
std::vector<SlicePoint> axis_slice(const ComplexField2D& spectrum, SpectralAxis axis);

// Linear least squares of ln|fhat| against {1, ln k, k} on the envelope of
// the slice (block maxima of `envelope_width` samples), restricted to
// [k_min, k_max] and above the round-off floor of 1e-13 * max modulus.
// Throws fit_error when fewer than 10 usable points remain or the design
// is rank-deficient.
SingularityFit fit_fourier_asymptotics(const std::vector<SlicePoint>& slice, double k_min,
                                       double k_max, int envelope_width = 8);

// Default fitting window [0.4, 0.8] * k_max of the grid.
std::pair<double, double> default_k_window(const SpectralGrid& grid);

// True once the fitted distance drops below the minimal resolved distance.
bool singularity_reached(const SingularityFit& fit, const SpectralGrid& grid);

} // namespace ds2

#endif
