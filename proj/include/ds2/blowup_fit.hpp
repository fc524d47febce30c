#ifndef DS2_BLOWUP_FIT_HPP
#define DS2_BLOWUP_FIT_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace ds2 {

// Nelder-Mead simplex settings; defaults follow the classic fminsearch
// parameterization.
struct SimplexConfig {
    std::vector<double> initial_guess;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double tolerance = 1e-10; // on simplex diameter and objective spread
    long max_iterations = 10000;
};

struct SimplexResult {
    std::vector<double> minimizer;
    double value = 0.0;
    long iterations = 0;
    bool converged = false; // false when the iteration cap was hit
};

// Deterministic derivative-free minimization.  The objective may return
// +infinity (used for constraint penalties); throws optimizer_error when
// no finite vertex exists.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const SimplexConfig& config);

// Least-squares fit of ln(linf) ~ alpha + gamma * ln(t_star - t) on the
// tail of an Linf time series.
struct BlowupFit {
    double alpha = 0.0;
    double gamma = 0.0;
    double t_star = 0.0;
    double residual = 0.0; // RMS of the log-model misfit over the window
    std::size_t window_first = 0;
    std::size_t window_last = 0; // inclusive
    bool degenerate = false;     // constant-linf window, fit meaningless
};

struct SeriesPoint {
    double t = 0.0;
    double linf = 0.0;
};

// Fits the last window_size points (all points when fewer are available,
// minimum 10).  Times must be strictly increasing and linf positive.
// The constraint t_star > t_last is enforced by an objective penalty.
BlowupFit fit_blowup(const std::vector<SeriesPoint>& series, std::size_t window_size,
                     const SimplexConfig& config = {});

} // namespace ds2

#endif
