#ifndef DS2_SOLVER_HPP
#define DS2_SOLVER_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ds2/diagnostics.hpp"
#include "ds2/grid.hpp"

namespace ds2 {

enum class Scheme { strang2, yoshida4 };

struct SolverParams {
    double epsilon = 1.0; // semiclassical parameter, 1 recovers the plain system
    Scheme scheme = Scheme::yoshida4;
    bool dealias = false; // optional 2/3 rule, off in all bundled runs
};

// Real spectral symbols on the wavenumber lattice, row-major like fields.
struct SpectralMultipliers {
    std::vector<double> linear_symbol;   // xi1^2 - xi2^2
    std::vector<double> nonlocal_symbol; // E = (xi1^2-xi2^2)/(xi1^2+xi2^2), E(0,0) = 0
    std::vector<double> poisson_symbol;  // -2 xi1^2/(xi1^2+xi2^2), 0 at the zero mode

    static SpectralMultipliers build(const SpectralGrid& grid);
};

// Split-step integrator for the focusing DS II flow
//   psi_t = i eps box psi - (2i/eps) (Phi + |psi|^2) psi
// split into the exactly integrable linear flow (Fourier space) and
// nonlinear flow (physical space, |psi| pointwise constant).
//
// Owns per-grid scratch buffers; one stepper drives one evolution at a
// time, independent steppers may run concurrently.
class SplitStepper {
  public:
    SplitStepper(GridPtr grid, SolverParams params);

    const SolverParams& params() const { return params_; }
    const SpectralMultipliers& multipliers() const { return mult_; }

    // Multiplies each mode by exp(-i eps h (xi1^2 - xi2^2)); spectral input.
    void linear_substep(ComplexField2D& psi_hat, double h) const;

    // V = F^-1[E F(|psi|^2)], real with zero mean; physical input.
    std::vector<double> nonlocal_potential(const ComplexField2D& psi);

    // psi <- psi * exp(2i h V / eps); physical input, |psi| unchanged.
    void nonlinear_substep(ComplexField2D& psi, double h);

    // Strang composition linear(h/2) o nonlinear(h) o linear(h/2).
    void strang_step(ComplexField2D& psi, double h);

    // Triple-jump composition S(w1 h) S(w0 h) S(w1 h), local error O(h^5).
    void yoshida4_step(ComplexField2D& psi, double h);

    // One step of the configured scheme.
    void step(ComplexField2D& psi, double h);

    static constexpr double yoshida_w1 = 1.3512071919596578; // 1/(2 - 2^(1/3))
    static constexpr double yoshida_w0 = 1.0 - 2.0 * yoshida_w1;

  private:
    void apply_linear(ComplexField2D& psi, double tau); // physical -> physical
    const std::vector<cplx>& linear_phase(double tau);
    void dealias_mask(cplx* spectral) const;

    GridPtr grid_;
    SolverParams params_;
    SpectralMultipliers mult_;
    std::vector<cplx> scratch_a_, scratch_b_;
    std::map<double, std::vector<cplx>> phase_cache_; // keyed by eps*tau
};

struct PhaseSpec {
    long steps = 0;
    double dt = 0.0;
    long record_every = 1;
};

enum class StopReason { completed, guard_halt, overflow };

struct StopInfo {
    StopReason reason = StopReason::completed;
    long step = 0;
    double t = 0.0;
    std::string detail;
};

struct EvolveResult {
    ComplexField2D psi; // final state (last valid state on overflow)
    DiagnosticsSeries series;
    StopInfo stop;
};

const char* to_string(StopReason r);

// Called after every step with the current state.
using StepObserver = std::function<void(long step, double t, const ComplexField2D& psi)>;

// Runs the staged schedule from time t0, recording diagnostics every
// record_every steps (plus step 0) and halting early when the resolution
// guard fires or a recorded norm turns non-finite.
EvolveResult evolve(const ComplexField2D& psi0, const std::vector<PhaseSpec>& schedule,
                    const SolverParams& params, double t0, const GuardConfig& guard,
                    const StepObserver& observer = {});

} // namespace ds2

#endif
