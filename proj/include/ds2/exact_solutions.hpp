#ifndef DS2_EXACT_SOLUTIONS_HPP
#define DS2_EXACT_SOLUTIONS_HPP

#include <vector>

#include "ds2/grid.hpp"

namespace ds2 {

// Lump solitary wave: peak modulus 2/|c|, velocity (-4*xi, -4*eta),
// algebraic decay ~ (x^2+y^2)^-1.
struct LumpParams {
    double xi = 0.0;
    double eta = 0.0;
    cplx z0{0.0, 0.0};
    cplx c{1.0, 0.0}; // must be nonzero
};

// Exact blow-up solution, amplitude 2/(a+b*t), singular at t* = -a/b.
struct OzawaParams {
    double a = 1.0;
    double b = -4.0; // a*b < 0 required
    double t_star() const { return -a / b; }
};

cplx lump_value(const LumpParams& p, double x, double y, double t);
cplx ozawa_value(const OzawaParams& p, double x, double y, double t);

ComplexField2D sample_lump(const GridPtr& grid, const LumpParams& p, double t);
// Throws singular_evaluation_error at t = t*.
ComplexField2D sample_ozawa(const GridPtr& grid, const OzawaParams& p, double t);
ComplexField2D sample_gaussian(const GridPtr& grid, double amplitude);

enum class InitialKind { lump, ozawa, gaussian, sum };

struct InitialComponent {
    InitialKind kind = InitialKind::gaussian;
    LumpParams lump;
    OzawaParams ozawa;
    double gaussian_amplitude = 1.0;
    cplx prefactor{1.0, 0.0};
};

// A sum of scaled closed-form components, sampled at a common time t0.
struct InitialDataSpec {
    std::vector<InitialComponent> components; // at least one
    double t0 = 0.0;
};

ComplexField2D build_initial_data(const GridPtr& grid, const InitialDataSpec& spec);

// Pseudoconformal image: (1/t) * exp(i(x^2-y^2)/(4t)) * psi(x/t, y/t, 1/t).
// The caller supplies psi evaluated at the mapped point; t = 0 throws.
cplx pseudoconformal_map(cplx psi_at_mapped_point, double x, double y, double t);

} // namespace ds2

#endif
