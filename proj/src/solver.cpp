#include "ds2/solver.hpp"

#include <fftw3.h>

#include <cmath>

namespace ds2 {

SpectralMultipliers SpectralMultipliers::build(const SpectralGrid& grid) {
    const std::size_t N = grid.N;
    SpectralMultipliers m;
    m.linear_symbol.resize(N * N);
    m.nonlocal_symbol.resize(N * N);
    m.poisson_symbol.resize(N * N);
    for (std::size_t i = 0; i < N; ++i) {
        const double xi2 = grid.xi2_axis[i];
        for (std::size_t j = 0; j < N; ++j) {
            const double xi1 = grid.xi1_axis[j];
            const double sum = xi1 * xi1 + xi2 * xi2;
            const double diff = xi1 * xi1 - xi2 * xi2;
            const std::size_t k = i * N + j;
            m.linear_symbol[k] = diff;
            m.nonlocal_symbol[k] = (sum == 0.0) ? 0.0 : diff / sum;
            m.poisson_symbol[k] = (sum == 0.0) ? 0.0 : -2.0 * xi1 * xi1 / sum;
        }
    }
    return m;
}

const SpectralMultipliers& cached_multipliers(const SpectralGrid& grid);

namespace {

std::map<std::pair<double, std::size_t>, SpectralMultipliers>& multiplier_cache() {
    static std::map<std::pair<double, std::size_t>, SpectralMultipliers> cache;
    return cache;
}

} // namespace

const SpectralMultipliers& cached_multipliers(const SpectralGrid& grid) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(grid.D, grid.N);
    auto it = multiplier_cache().find(key);
    if (it == multiplier_cache().end())
        it = multiplier_cache().emplace(key, SpectralMultipliers::build(grid)).first;
    return it->second;
}

SplitStepper::SplitStepper(GridPtr grid, SolverParams params)
    : grid_(std::move(grid)), params_(params), mult_(SpectralMultipliers::build(*grid_)),
      scratch_a_(grid_->size()), scratch_b_(grid_->size()) {
    if (!(params_.epsilon > 0.0))
        throw config_error("solver: epsilon must be positive");
}

const std::vector<cplx>& SplitStepper::linear_phase(double tau) {
    const double key = params_.epsilon * tau;
    auto it = phase_cache_.find(key);
    if (it != phase_cache_.end()) return it->second;
    if (phase_cache_.size() > 16) phase_cache_.clear();

    std::vector<cplx> phase(grid_->size());
    const double* sym = mult_.linear_symbol.data();
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long k = 0; k < static_cast<long>(phase.size()); ++k)
        phase[k] = std::polar(1.0, -key * sym[k]);
    return phase_cache_.emplace(key, std::move(phase)).first->second;
}

void SplitStepper::dealias_mask(cplx* spectral) const {
    const std::size_t N = grid_->N;
    const double cutoff = (2.0 / 3.0) * grid_->max_wavenumber();
    for (std::size_t i = 0; i < N; ++i) {
        const double xi2 = grid_->xi2_axis[i];
        for (std::size_t j = 0; j < N; ++j) {
            if (std::abs(grid_->xi1_axis[j]) > cutoff || std::abs(xi2) > cutoff)
                spectral[i * N + j] = 0.0;
        }
    }
}

void SplitStepper::linear_substep(ComplexField2D& psi_hat, double h) const {
    if (psi_hat.space() != Space::spectral)
        throw usage_error("linear_substep: input must be spectral-space");
    const double key = params_.epsilon * h;
    const double* sym = mult_.linear_symbol.data();
    cplx* v = psi_hat.data();
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long k = 0; k < static_cast<long>(psi_hat.values().size()); ++k)
        v[k] *= std::polar(1.0, -key * sym[k]);
}

void SplitStepper::apply_linear(ComplexField2D& psi, double tau) {
    const std::size_t N = grid_->N;
    dft_2d(scratch_a_.data(), psi.data(), N, FFTW_FORWARD, 1.0 / static_cast<double>(N * N));
    const std::vector<cplx>& phase = linear_phase(tau);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long k = 0; k < static_cast<long>(scratch_a_.size()); ++k)
        scratch_a_[k] *= phase[k];
    if (params_.dealias) dealias_mask(scratch_a_.data());
    dft_2d(psi.data(), scratch_a_.data(), N, FFTW_BACKWARD, 1.0);
}

std::vector<double> SplitStepper::nonlocal_potential(const ComplexField2D& psi) {
    if (psi.space() != Space::physical)
        throw usage_error("nonlocal_potential: input must be physical-space");
    const std::size_t N = grid_->N;
    const std::size_t total = N * N;
    const cplx* v = psi.data();
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long k = 0; k < static_cast<long>(total); ++k)
        scratch_a_[k] = cplx{std::norm(v[k]), 0.0};
    dft_2d(scratch_b_.data(), scratch_a_.data(), N, FFTW_FORWARD, 1.0 / static_cast<double>(total));
    const double* sym = mult_.nonlocal_symbol.data();
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long k = 0; k < static_cast<long>(total); ++k)
        scratch_b_[k] *= sym[k];
    if (params_.dealias) dealias_mask(scratch_b_.data());
    dft_2d(scratch_a_.data(), scratch_b_.data(), N, FFTW_BACKWARD, 1.0);
    std::vector<double> potential(total);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long k = 0; k < static_cast<long>(total); ++k)
        potential[k] = scratch_a_[k].real(); // imaginary part is round-off
    return potential;
}

void SplitStepper::nonlinear_substep(ComplexField2D& psi, double h) {
    if (psi.space() != Space::physical)
        throw usage_error("nonlinear_substep: input must be physical-space");
    const std::vector<double> potential = nonlocal_potential(psi);
    const double factor = 2.0 * h / params_.epsilon;
    cplx* v = psi.data();
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long k = 0; k < static_cast<long>(potential.size()); ++k)
        v[k] *= std::polar(1.0, factor * potential[k]);
}

void SplitStepper::strang_step(ComplexField2D& psi, double h) {
    apply_linear(psi, 0.5 * h);
    nonlinear_substep(psi, h);
    apply_linear(psi, 0.5 * h);
}

void SplitStepper::yoshida4_step(ComplexField2D& psi, double h) {
    strang_step(psi, yoshida_w1 * h);
    strang_step(psi, yoshida_w0 * h);
    strang_step(psi, yoshida_w1 * h);
}

void SplitStepper::step(ComplexField2D& psi, double h) {
    if (params_.scheme == Scheme::yoshida4)
        yoshida4_step(psi, h);
    else
        strang_step(psi, h);
}

const char* to_string(StopReason r) {
    switch (r) {
    case StopReason::completed: return "completed";
    case StopReason::guard_halt: return "guard_halt";
    case StopReason::overflow: return "overflow";
    }
    return "unknown";
}

EvolveResult evolve(const ComplexField2D& psi0, const std::vector<PhaseSpec>& schedule,
                    const SolverParams& params, double t0, const GuardConfig& guard,
                    const StepObserver& observer) {
    if (psi0.space() != Space::physical)
        throw usage_error("evolve: initial data must be physical-space");
    for (const auto& phase : schedule) {
        if (phase.steps < 0 || (phase.steps > 0 && !(phase.dt > 0.0)))
            throw config_error("evolve: phases need dt > 0");
        if (phase.record_every < 1)
            throw config_error("evolve: record_every must be >= 1");
    }

    SplitStepper stepper(psi0.grid_ptr(), params);
    EvolveResult result{psi0, {}, {}};
    ComplexField2D& psi = result.psi;
    ComplexField2D last_valid = psi0;

    long step = 0;
    double t = t0;
    bool stopped = false;

    // Returns false when the run must stop at this record.
    auto record = [&](long s, double time) -> bool {
        DiagnosticsRecord rec;
        rec.step = s;
        rec.t = time;
        rec.linf = linf_norm(psi);
        rec.l2 = l2_norm(psi);
        rec.energy = energy(psi, params);
        if (result.series.records.empty()) {
            result.series.e0 = rec.energy;
            result.series.absolute_delta_e = (rec.energy == 0.0);
        }
        rec.delta_e = result.series.absolute_delta_e
                          ? rec.energy - result.series.e0
                          : rec.energy / result.series.e0 - 1.0;
        if (!std::isfinite(rec.linf) || !std::isfinite(rec.l2) || !std::isfinite(rec.energy)) {
            result.stop = {StopReason::overflow, s, time,
                           "non-finite values encountered; returning last valid state"};
            psi = last_valid;
            return false;
        }
        result.series.records.push_back(rec);
        last_valid = psi;
        if (resolution_guard(rec, guard) == GuardAction::halt) {
            result.stop = {StopReason::guard_halt, s, time, "resolution guard fired"};
            return false;
        }
        return true;
    };

    if (!record(0, t0)) return result;

    for (std::size_t pi = 0; pi < schedule.size() && !stopped; ++pi) {
        const PhaseSpec& phase = schedule[pi];
        const double phase_start = t;
        const bool last_phase = (pi + 1 == schedule.size());
        for (long k = 1; k <= phase.steps; ++k) {
            stepper.step(psi, phase.dt);
            ++step;
            t = phase_start + static_cast<double>(k) * phase.dt;
            if (observer) observer(step, t, psi);
            const bool at_record = (k % phase.record_every == 0) ||
                                   (last_phase && k == phase.steps);
            if (at_record && !record(step, t)) {
                stopped = true;
                break;
            }
        }
        if (!stopped) t = phase_start + static_cast<double>(phase.steps) * phase.dt;
    }

    if (!stopped) result.stop = {StopReason::completed, step, t, ""};
    return result;
}

} // namespace ds2
