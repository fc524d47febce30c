#ifndef DS2_DIAGNOSTICS_HPP
#define DS2_DIAGNOSTICS_HPP

#include <vector>

#include "ds2/grid.hpp"

namespace ds2 {

struct SolverParams;

struct DiagnosticsRecord {
    long step = 0;
    double t = 0.0;
    double linf = 0.0;
    double l2 = 0.0;
    double energy = 0.0;
    double delta_e = 0.0; // E(t)/E(0) - 1, or E(t) - E(0) in absolute mode
};

struct DiagnosticsSeries {
    std::vector<DiagnosticsRecord> records;
    double e0 = 0.0;
    // Set when E(0) = 0 and delta_e falls back to the absolute deviation.
    bool absolute_delta_e = false;
};

struct GuardConfig {
    double delta_e_threshold = 1e-3; // halt once |delta_e| exceeds this
};

enum class GuardAction { proceed, halt };

// L2 norm by the rectangle rule: physical weight dx^2 per node, spectral
// weight (2*pi*D)^2 per mode.  The two agree by Parseval.
double l2_norm(const ComplexField2D& psi);
double linf_norm(const ComplexField2D& psi);

// Energy E = sum[eps^2(|psi_x|^2 - |psi_y|^2) + (|psi|^2 + Phi)|psi|^2] dx dy
// with spectral derivatives and Phi = F^-1[-2 xi1^2/(xi1^2+xi2^2) F(|psi|^2)],
// zero mode of Phi set to 0.
double energy(const ComplexField2D& psi, const SolverParams& params);

// Fills delta_e for every record from the first record's energy.
void compute_energy_deviation(DiagnosticsSeries& series);

GuardAction resolution_guard(const DiagnosticsRecord& record, const GuardConfig& guard);

} // namespace ds2

#endif
