// steady.hpp: Full generator M = −iE_{pp'}δ + ΣK, steady-state solve,
// time evolution, and positivity diagnostics.

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "qheat/kernel.hpp"
#include "qheat/system.hpp"

namespace qheat {

// Complex N×N density matrix in the energy basis.
struct DensityMatrix {
    Eigen::MatrixXcd entries;

    static DensityMatrix maximally_mixed(int dim);
    // Diagonal state from (not necessarily normalised) populations; renormalised.
    static DensityMatrix from_populations(const Eigen::VectorXd& populations);

    int dim() const noexcept { return static_cast<int>(entries.rows()); }
    double population(int n) const { return entries(n, n).real(); }
    Eigen::VectorXd populations() const { return entries.diagonal().real(); }
    std::complex<double> trace() const { return entries.trace(); }
};

// Column vector over the flattened index p·N + p'.
Eigen::VectorXcd vectorize(const DensityMatrix& rho);
DensityMatrix unvectorize(const Eigen::VectorXcd& v, int dim);

struct Liouvillian {
    int dim{0};
    Eigen::MatrixXcd matrix;  // N²×N²
    KernelMode mode{KernelMode::Lindblad};
    std::vector<std::string> reservoirs;
};

// M[(pp'),(qq')] = −i(E_p − E_{p'}) δ_{pq} δ_{p'q'} + K_{(pp'),(qq')}
Liouvillian assemble_liouvillian(const SystemSpec& system, const SuperKernel& total);

struct SteadyState {
    DensityMatrix rho;
    double residual{0.0};              // ‖M·vec(ρ)‖_∞ of the returned state
    double hermiticity_residual{0.0};  // ‖ρ − ρ†‖_∞ before symmetrisation
    Eigen::VectorXd singular_values;   // of M, descending
};

// Relative singular-value cut used to count the nullspace dimension of M.
inline constexpr double kNullspaceRelTol = 1e-10;
// Largest accepted ‖M·vec(ρ)‖_∞.
inline constexpr double kSteadyResidualTol = 1e-10;

// Replaces the (0,0) population row of M by the trace row and solves M′x = e₀
// (LU with one refinement step). Throws DegenerateSteadyStateError when the
// nullspace of M is not one-dimensional, NumericError when the residual exceeds
// kSteadyResidualTol.
SteadyState solve_steady_state(const Liouvillian& L);

// Orthonormal basis of the numerical nullspace of M (SVD route); columns are vec(ρ).
Eigen::MatrixXcd nullspace_basis(const Liouvillian& L);

// 0.01/‖M‖_∞
double default_time_step(const Liouvillian& L);

// Fixed-step RK4 for dρ/dt = Mρ up to t_final (step shortened to divide t_final
// evenly). Throws IntegrationError on blow-up or trace drift above 1e−8.
DensityMatrix evolve(const Liouvillian& L, const DensityMatrix& rho0, double t_final, double dt);

struct PositivityReport {
    double min_population{0.0};
    double min_eigenvalue{0.0};        // of the Hermitian part
    double hermiticity_residual{0.0};  // ‖ρ − ρ†‖_∞
};

PositivityReport positivity_report(const DensityMatrix& rho);

} // namespace qheat
