#ifndef DS2_GRID_HPP
#define DS2_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "ds2/common.hpp"

namespace ds2 {

// Periodic computational grid on D*[-pi,pi]^2 with N points per axis.
//
// Physical nodes are x_j = -pi*D + j*dx with dx = 2*pi*D/N.  Wavenumbers
// are xi = k/D for integer k in [-N/2, N/2), stored in FFT layout
// (0, 1, ..., N/2-1, -N/2, ..., -1)/D.  The axis arrays are the single
// source of truth for orderings; multiplier code never assumes a layout.
struct SpectralGrid {
    double D = 0.0;
    std::size_t N = 0;
    double dx = 0.0;       // grid spacing, equals m
    double m = 0.0;        // minimal resolved distance 2*pi*D/N
    std::vector<double> x_axis, y_axis;     // monotone, x_axis[0] = -pi*D
    std::vector<double> xi1_axis, xi2_axis; // FFT layout

    std::size_t size() const { return N * N; }
    double domain_length() const; // 2*pi*D
    double max_wavenumber() const { return static_cast<double>(N) / (2.0 * D); }
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

// N must be a power of two >= 8, D > 0; throws config_error otherwise.
GridPtr make_grid(double D, std::size_t N);

enum class Space { physical, spectral };

// N x N complex samples, row-major, index (i,j) <-> (y_i, x_j).
// In spectral space entry (ki,kj) is the coefficient for the mode with
// frequencies (xi2_axis[ki], xi1_axis[kj]); the forward transform is
// normalized by 1/N^2 so a constant field c has zero mode c.
class ComplexField2D {
  public:
    ComplexField2D(GridPtr grid, Space space)
        : grid_(std::move(grid)), space_(space), data_(grid_->size()) {}
    ComplexField2D(GridPtr grid, Space space, std::vector<cplx> data);

    const SpectralGrid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    Space space() const { return space_; }
    std::size_t n() const { return grid_->N; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    cplx& at(std::size_t i, std::size_t j) { return data_[i * n() + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data_[i * n() + j]; }

    std::vector<cplx>& values() { return data_; }
    const std::vector<cplx>& values() const { return data_; }

  private:
    GridPtr grid_;
    Space space_;
    std::vector<cplx> data_;
};

// Unitary-normalized DFT pair: inverse(forward(f)) = f to round-off and
// Parseval holds with physical weight dx^2 and spectral weight (2*pi*D)^2.
// Throws usage_error if the input is in the wrong space.
ComplexField2D forward_transform(const ComplexField2D& f);
ComplexField2D inverse_transform(const ComplexField2D& f);

// In-place raw kernels used by the solver hot loop.  `scale` multiplies
// every output value (pass 1.0/N^2 for a normalized forward transform).
void dft_2d(cplx* dst, const cplx* src, std::size_t N, int sign, double scale);

} // namespace ds2

#endif
