// pipeline.hpp: Generic two-reservoir pipeline: kernels → Liouvillian →
// steady state → heat currents → law checks.

#pragma once

#include "qheat/bath.hpp"
#include "qheat/kernel.hpp"
#include "qheat/models.hpp"
#include "qheat/steady.hpp"
#include "qheat/system.hpp"
#include "qheat/thermo.hpp"

namespace qheat {

struct PipelineResult {
    SystemSpec system;
    SuperKernel kernel_a;
    SuperKernel kernel_b;
    Liouvillian liouvillian;
    SteadyState steady;
    double q_a{0.0};
    double q_b{0.0};
    CurrentReport report;
    PositivityReport positivity;

    const DensityMatrix& rho() const noexcept { return steady.rho; }
};

// Reservoirs "A" and "B" of `system` driven by `bath_a` and `bath_b`.
// `couplings_active` selects the strict form of the second-law check.
PipelineResult run_two_reservoirs(const SystemSpec& system, const BathSpec& bath_a,
                                  const BathSpec& bath_b, KernelMode mode,
                                  bool couplings_active = true);

PipelineResult run_single_qubit(const models::SingleQubitParams& p, KernelMode mode);
PipelineResult run_coupled_qubits(const models::CoupledQubitParams& p, KernelMode mode);

} // namespace qheat
