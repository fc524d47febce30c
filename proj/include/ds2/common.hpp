#ifndef DS2_COMMON_HPP
#define DS2_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ds2 {

using cplx = std::complex<double>;

// Bad construction parameters (grid sizes, config files, ...).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its contract (wrong space, wrong grid, ...).
struct usage_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Pointwise evaluation of a closed form at a singular parameter value.
struct singular_evaluation_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Derivative-free optimizer could not make progress.
struct optimizer_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Peak location on a field with no usable maximum.
struct no_peak_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear least-squares fit with a rank-deficient design.
struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of threads used for transforms and pointwise kernels.
// DS2_THREADS caps it; 0 or unset means auto (hardware concurrency).
int thread_count();

} // namespace ds2

#endif
