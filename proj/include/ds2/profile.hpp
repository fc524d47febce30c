#ifndef DS2_PROFILE_HPP
#define DS2_PROFILE_HPP

#include <vector>

#include "ds2/grid.hpp"

namespace ds2 {

// Rescaling frame for the conjectured blow-up profile P(X,Y)/L with
// P(X,Y) = 2/(1+X^2+Y^2), X = (x-x0)/L, Y = (y-y0)/L.
struct RescaleFrame {
    double x0 = 0.0;
    double y0 = 0.0;
    double L = 1.0; // positive
};

struct PeakInfo {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0; // refined |psi| at the peak
    bool multi_peak = false;
};

// Grid argmax of |psi| refined per axis by parabolic interpolation over
// the periodic 3-point stencil; ties go to the lowest flattened index.
// Throws no_peak_error on a flat field.
PeakInfo locate_maximum(const ComplexField2D& psi);

// Frame centered on the peak with L chosen so the rescaled lump peak
// matches the field peak (L = 2 / peak value).
RescaleFrame frame_from_peak(const PeakInfo& peak);

// Samples P((x-x0)/L, (y-y0)/L) / L on the grid.
std::vector<double> rescaled_lump(const GridPtr& grid, const RescaleFrame& frame);

struct ProfileResidual {
    std::vector<double> residual; // |psi| - P/L per node
    double ratio = 0.0;           // max|residual| / max|psi|
};

ProfileResidual profile_residual(const ComplexField2D& psi, const RescaleFrame& frame);

} // namespace ds2

#endif
