#include "ds2/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

namespace ds2 {

int thread_count() {
    static const int n = [] {
        if (const char* env = std::getenv("DS2_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) return static_cast<int>(v);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }();
    return n;
}

double SpectralGrid::domain_length() const { return 2.0 * std::numbers::pi * D; }

GridPtr make_grid(double D, std::size_t N) {
    if (!(D > 0.0))
        throw config_error("grid: D must be positive");
    if (N < 8 || (N & (N - 1)) != 0)
        throw config_error("grid: N must be a power of two >= 8");

    auto g = std::make_shared<SpectralGrid>();
    g->D = D;
    g->N = N;
    g->dx = 2.0 * std::numbers::pi * D / static_cast<double>(N);
    g->m = g->dx;
    g->x_axis.resize(N);
    g->y_axis.resize(N);
    g->xi1_axis.resize(N);
    g->xi2_axis.resize(N);
    const double x0 = -std::numbers::pi * D;
    for (std::size_t j = 0; j < N; ++j) {
        g->x_axis[j] = x0 + static_cast<double>(j) * g->dx;
        const long k = (j < N / 2) ? static_cast<long>(j)
                                   : static_cast<long>(j) - static_cast<long>(N);
        g->xi1_axis[j] = static_cast<double>(k) / D;
    }
    g->y_axis = g->x_axis;
    g->xi2_axis = g->xi1_axis;
    return g;
}

ComplexField2D::ComplexField2D(GridPtr grid, Space space, std::vector<cplx> data)
    : grid_(std::move(grid)), space_(space), data_(std::move(data)) {
    if (data_.size() != grid_->size())
        throw usage_error("field: data length must be N^2");
}

namespace {

// Plans are cached per size and shared; fftw_execute_dft on distinct
// buffers is thread-safe, planning is serialized by the mutex.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

PlanPair& plans_for(std::size_t N) {
    static std::mutex mu;
    static std::map<std::size_t, PlanPair> cache;
    static bool threads_ready = [] {
        fftw_init_threads();
        return true;
    }();
    (void)threads_ready;

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    fftw_plan_with_nthreads(thread_count());
    const int n = static_cast<int>(N);
    std::vector<cplx> a(N * N), b(N * N);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    PlanPair p;
    // FFTW_ESTIMATE keeps plans deterministic across runs; FFTW_UNALIGNED
    // lets the plans execute on any buffer.
    p.fwd = fftw_plan_dft_2d(n, n, pa, pb, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_2d(n, n, pa, pb, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(N, p).first->second;
}

} // namespace

void dft_2d(cplx* dst, const cplx* src, std::size_t N, int sign, double scale) {
    PlanPair& p = plans_for(N);
    auto* in = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(src));
    auto* out = reinterpret_cast<fftw_complex*>(dst);
    fftw_execute_dft(sign == FFTW_FORWARD ? p.fwd : p.bwd, in, out);
    if (scale != 1.0) {
        const std::size_t total = N * N;
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (long i = 0; i < static_cast<long>(total); ++i)
            dst[i] *= scale;
    }
}

ComplexField2D forward_transform(const ComplexField2D& f) {
    if (f.space() != Space::physical)
        throw usage_error("forward_transform: input must be physical-space");
    ComplexField2D out(f.grid_ptr(), Space::spectral);
    const std::size_t N = f.n();
    dft_2d(out.data(), f.data(), N, FFTW_FORWARD, 1.0 / static_cast<double>(N * N));
    return out;
}

ComplexField2D inverse_transform(const ComplexField2D& f) {
    if (f.space() != Space::spectral)
        throw usage_error("inverse_transform: input must be spectral-space");
    ComplexField2D out(f.grid_ptr(), Space::physical);
    dft_2d(out.data(), f.data(), f.n(), FFTW_BACKWARD, 1.0);
    return out;
}

} // namespace ds2
