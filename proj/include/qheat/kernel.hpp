// kernel.hpp: Dissipative superoperator K_{pp',qq'} per reservoir in the
// energy basis (Born–Markov, Lamb shift dropped).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <string_view>

#include "qheat/bath.hpp"
#include "qheat/system.hpp"

namespace qheat {

// Redfield:       full three-term Born–Markov kernel.
// Lindblad:       every term restricted by its secular (energy-matching) constraint.
// PartialSecular: secular constraint kept on the two decay terms (δ_{p'q'}, δ_{pq})
//                 and dropped on the transfer term. This is the kernel whose
//                 coupled-qubit restriction is the six-dimensional matrix behind the
//                 closed-form Redfield populations/coherences in qheat::models.
//                 A single reservoir's kernel is not trace preserving; the sum over
//                 reservoirs is when they share one spectral density.
enum class KernelMode { Redfield, Lindblad, PartialSecular };

std::string_view to_string(KernelMode mode) noexcept;
// Accepts "redfield", "lindblad", "partial-secular". Throws ConfigError otherwise.
KernelMode parse_kernel_mode(std::string_view name);

// Dense N²×N² superoperator; row (p,p') and column (q,q') flatten to p·N + p'.
struct SuperKernel {
    int dim{0};
    Eigen::MatrixXcd entries;
    KernelMode mode{KernelMode::Lindblad};
    std::string reservoir;

    static SuperKernel zero(int dim, KernelMode mode, std::string reservoir);

    int index(int p, int pp) const noexcept { return p * dim + pp; }
    std::complex<double> operator()(int p, int pp, int q, int qq) const {
        return entries(index(p, pp), index(q, qq));
    }
};

// Tolerance of the secular Kronecker test [x = 0]: 1e−9·max|E_n|, floored at 1e−12.
double secular_tolerance(const Eigen::VectorXd& levels);

// Builds K for one reservoir from the system couplings S¹, S² and D^{αβ} of `bath`.
// Throws ConfigError for an unknown reservoir label and for distinct but
// near-degenerate transition frequencies in the secular modes.
// Spectral-density lookup errors propagate.
SuperKernel build_kernel(const SystemSpec& system, const BathSpec& bath,
                         const std::string& reservoir, KernelMode mode);

// Relative bound on check_trace_condition, scaled by max(1, max|K|).
inline constexpr double kTraceTol = 1e-12;

// max over (q,q') of |Σ_p K_{pp,qq'}|
double check_trace_condition(const SuperKernel& kernel);

// Entrywise sum. Throws ConfigError on empty input, dimension mismatch, or mixed
// modes unless allow_mixed_modes is set (a warning is printed to stderr then), and
// for a partial-secular sum that breaks the trace condition.
SuperKernel combine_kernels(std::span<const SuperKernel> kernels, bool allow_mixed_modes = false);

} // namespace qheat
