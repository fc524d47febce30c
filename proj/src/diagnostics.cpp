#include "ds2/diagnostics.hpp"

#include <fftw3.h>

#include <cmath>

#include "ds2/solver.hpp"

namespace ds2 {

namespace {

// Compensated summation keeps quadrature error near machine epsilon,
// independent of N^2; reductions stay serial for bitwise reproducibility.
class KahanSum {
  public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace

double l2_norm(const ComplexField2D& psi) {
    KahanSum sum;
    for (const cplx& v : psi.values()) sum.add(std::norm(v));
    const double weight = (psi.space() == Space::physical)
                              ? psi.grid().dx * psi.grid().dx
                              : psi.grid().domain_length() * psi.grid().domain_length();
    return std::sqrt(sum.value() * weight);
}

double linf_norm(const ComplexField2D& psi) {
    double max_sq = 0.0;
    for (const cplx& v : psi.values()) max_sq = std::max(max_sq, std::norm(v));
    return std::sqrt(max_sq);
}

double energy(const ComplexField2D& psi, const SolverParams& params) {
    if (psi.space() != Space::physical)
        throw usage_error("energy: input must be physical-space");
    const SpectralGrid& grid = psi.grid();
    const std::size_t N = grid.N;
    const std::size_t total = N * N;
    const double inv_total = 1.0 / static_cast<double>(total);
    const SpectralMultipliers& mult = cached_multipliers(grid);

    std::vector<cplx> psi_hat(total), work(total), dpsi_dx(total), dpsi_dy(total);
    dft_2d(psi_hat.data(), psi.data(), N, FFTW_FORWARD, inv_total);

    for (std::size_t i = 0; i < N; ++i) {
        const cplx ik2 = cplx{0.0, grid.xi2_axis[i]};
        for (std::size_t j = 0; j < N; ++j) {
            work[i * N + j] = cplx{0.0, grid.xi1_axis[j]} * psi_hat[i * N + j];
            psi_hat[i * N + j] *= ik2; // reuse as the y-derivative spectrum
        }
    }
    dft_2d(dpsi_dx.data(), work.data(), N, FFTW_BACKWARD, 1.0);
    dft_2d(dpsi_dy.data(), psi_hat.data(), N, FFTW_BACKWARD, 1.0);

    std::vector<double> g(total);
    for (std::size_t k = 0; k < total; ++k) {
        g[k] = std::norm(psi.data()[k]);
        work[k] = cplx{g[k], 0.0};
    }
    std::vector<cplx> g_hat(total);
    dft_2d(g_hat.data(), work.data(), N, FFTW_FORWARD, inv_total);
    for (std::size_t k = 0; k < total; ++k) g_hat[k] *= mult.poisson_symbol[k];
    dft_2d(work.data(), g_hat.data(), N, FFTW_BACKWARD, 1.0); // Phi, real to round-off

    const double eps_sq = params.epsilon * params.epsilon;
    KahanSum sum;
    for (std::size_t k = 0; k < total; ++k) {
        const double grad = std::norm(dpsi_dx[k]) - std::norm(dpsi_dy[k]);
        sum.add(eps_sq * grad + (g[k] + work[k].real()) * g[k]);
    }
    return sum.value() * grid.dx * grid.dx;
}

void compute_energy_deviation(DiagnosticsSeries& series) {
    if (series.records.empty()) return;
    series.e0 = series.records.front().energy;
    series.absolute_delta_e = (series.e0 == 0.0);
    for (auto& rec : series.records)
        rec.delta_e = series.absolute_delta_e ? rec.energy - series.e0
                                              : rec.energy / series.e0 - 1.0;
}

GuardAction resolution_guard(const DiagnosticsRecord& record, const GuardConfig& guard) {
    return std::abs(record.delta_e) > guard.delta_e_threshold ? GuardAction::halt
                                                              : GuardAction::proceed;
}

} // namespace ds2
