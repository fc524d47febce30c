#include "ds2/exact_solutions.hpp"

#include <cmath>

namespace ds2 {

cplx lump_value(const LumpParams& p, double x, double y, double t) {
    const double phase = -2.0 * (p.xi * x - p.eta * y + 2.0 * (p.xi * p.xi - p.eta * p.eta) * t);
    const double re = x + 4.0 * p.xi * t + p.z0.real();
    const double im = y + 4.0 * p.eta * t + p.z0.imag();
    const double denom = re * re + im * im + std::norm(p.c);
    return 2.0 * p.c * std::polar(1.0, phase) / denom;
}

cplx ozawa_value(const OzawaParams& p, double x, double y, double t) {
    const double s = p.a + p.b * t;
    const double X = x / s;
    const double Y = y / s;
    const double v = 2.0 / (1.0 + X * X + Y * Y);
    const double phase = p.b * (x * x - y * y) / (4.0 * s);
    return std::polar(v / s, phase);
}

namespace {

template <typename F>
ComplexField2D sample(const GridPtr& grid, F&& f) {
    ComplexField2D out(grid, Space::physical);
    const std::size_t N = grid->N;
    for (std::size_t i = 0; i < N; ++i) {
        const double y = grid->y_axis[i];
        for (std::size_t j = 0; j < N; ++j)
            out.at(i, j) = f(grid->x_axis[j], y);
    }
    return out;
}

void validate(const LumpParams& p) {
    if (std::norm(p.c) == 0.0)
        throw config_error("lump: c must be nonzero");
}

void validate(const OzawaParams& p) {
    if (!(p.a * p.b < 0.0))
        throw config_error("ozawa: requires a*b < 0");
}

ComplexField2D sample_component(const GridPtr& grid, const InitialComponent& comp, double t) {
    switch (comp.kind) {
    case InitialKind::lump:
        return sample_lump(grid, comp.lump, t);
    case InitialKind::ozawa:
        return sample_ozawa(grid, comp.ozawa, t);
    case InitialKind::gaussian:
        return sample_gaussian(grid, comp.gaussian_amplitude);
    case InitialKind::sum:
        break;
    }
    throw usage_error("initial data: nested sum components are not supported");
}

} // namespace

ComplexField2D sample_lump(const GridPtr& grid, const LumpParams& p, double t) {
    validate(p);
    return sample(grid, [&](double x, double y) { return lump_value(p, x, y, t); });
}

ComplexField2D sample_ozawa(const GridPtr& grid, const OzawaParams& p, double t) {
    validate(p);
    if (p.a + p.b * t == 0.0)
        throw singular_evaluation_error("ozawa: evaluation at the blow-up time t*");
    return sample(grid, [&](double x, double y) { return ozawa_value(p, x, y, t); });
}

ComplexField2D sample_gaussian(const GridPtr& grid, double amplitude) {
    return sample(grid, [&](double x, double y) {
        return cplx{amplitude * std::exp(-x * x - y * y), 0.0};
    });
}

ComplexField2D build_initial_data(const GridPtr& grid, const InitialDataSpec& spec) {
    if (spec.components.empty())
        throw config_error("initial data: needs at least one component");
    ComplexField2D acc(grid, Space::physical);
    for (const auto& comp : spec.components) {
        ComplexField2D part = sample_component(grid, comp, spec.t0);
        for (std::size_t i = 0; i < acc.values().size(); ++i)
            acc.values()[i] += comp.prefactor * part.values()[i];
    }
    return acc;
}

cplx pseudoconformal_map(cplx psi_at_mapped_point, double x, double y, double t) {
    if (t == 0.0)
        throw singular_evaluation_error("pseudoconformal map: t must be nonzero");
    return std::polar(1.0, (x * x - y * y) / (4.0 * t)) * psi_at_mapped_point / t;
}

} // namespace ds2
