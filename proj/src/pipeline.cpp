// pipeline.cpp: generic two-reservoir pipeline

#include "qheat/pipeline.hpp"

#include <array>

namespace qheat {

PipelineResult run_two_reservoirs(const SystemSpec& system, const BathSpec& bath_a,
                                  const BathSpec& bath_b, KernelMode mode,
                                  bool couplings_active) {
    SuperKernel ka = build_kernel(system, bath_a, "A", mode);
    SuperKernel kb = build_kernel(system, bath_b, "B", mode);
    const std::array<SuperKernel, 2> both{ka, kb};
    Liouvillian L = assemble_liouvillian(system, combine_kernels(both));
    SteadyState steady = solve_steady_state(L);

    const double qa = reservoir_current(system, ka, steady.rho);
    const double qb = reservoir_current(system, kb, steady.rho);
    const std::array<ReservoirHeat, 2> heat{
        ReservoirHeat{"A", bath_a.temperature, qa},
        ReservoirHeat{"B", bath_b.temperature, qb},
    };
    CurrentReport report = law_checks(heat, couplings_active);
    PositivityReport positivity = positivity_report(steady.rho);

    return PipelineResult{system,         std::move(ka), std::move(kb), std::move(L),
                          std::move(steady), qa,          qb,            std::move(report),
                          positivity};
}

PipelineResult run_single_qubit(const models::SingleQubitParams& p, KernelMode mode) {
    const SystemSpec system = make_single_qubit(p.omega0);
    const BathSpec a("A", p.t_a, SpectralDensity::constant(p.g_a));
    const BathSpec b("B", p.t_b, SpectralDensity::constant(p.g_b));
    return run_two_reservoirs(system, a, b, mode, p.g_a > 0.0 && p.g_b > 0.0);
}

PipelineResult run_coupled_qubits(const models::CoupledQubitParams& p, KernelMode mode) {
    const auto [system, diag] = make_coupled_qubits(p.omega1, p.omega2, p.lambda);
    const BathSpec a("A", p.t_a, p.g_a);
    const BathSpec b("B", p.t_b, p.g_b);
    const bool plus = p.g_a(diag.omega_plus) > 0.0 && p.g_b(diag.omega_plus) > 0.0;
    const bool minus = p.g_a(diag.omega_minus) > 0.0 && p.g_b(diag.omega_minus) > 0.0;
    return run_two_reservoirs(system, a, b, mode, p.lambda > 0.0 && (plus || minus));
}

} // namespace qheat
