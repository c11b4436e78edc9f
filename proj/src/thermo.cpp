// thermo.cpp: heat currents and thermodynamic law checks

#include "qheat/thermo.hpp"

#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"

namespace qheat {

double reservoir_current(const SystemSpec& system, const SuperKernel& reservoir_kernel,
                         const DensityMatrix& rho) {
    const int n = system.dim();
    if (reservoir_kernel.dim != n || rho.dim() != n) {
        throw ConfigError("reservoir_current: dimension mismatch");
    }
    const Eigen::VectorXcd flow = reservoir_kernel.entries * vectorize(rho);
    std::complex<double> q = 0.0;
    for (int k = 0; k < n; ++k) q += system.energy(k) * flow(k * n + k);
    if (std::abs(q.imag()) > kCurrentImagTol) {
        std::ostringstream msg;
        msg << "reservoir_current: imaginary part " << q.imag() << " for reservoir '"
            << reservoir_kernel.reservoir << "' (state not steady or corrupted)";
        throw ConsistencyError(msg.str());
    }
    return q.real();
}

std::string_view to_string(SecondLaw s) noexcept {
    switch (s) {
    case SecondLaw::Pass: return "pass";
    case SecondLaw::Fail: return "fail";
    case SecondLaw::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

CurrentReport law_checks(std::span<const ReservoirHeat> reservoirs, bool couplings_active) {
    if (reservoirs.size() != 2) {
        throw ConfigError("law_checks: exactly two reservoirs are supported");
    }
    const ReservoirHeat& a = reservoirs[0];
    const ReservoirHeat& b = reservoirs[1];

    CurrentReport report;
    report.reservoirs.assign(reservoirs.begin(), reservoirs.end());
    report.conservation_residual = std::abs(a.current + b.current);

    const double bias = a.temperature - b.temperature;
    if (bias == 0.0) {
        report.second_law = SecondLaw::NotApplicable;
    } else {
        const double flux = a.current * bias;
        const bool ok = couplings_active ? flux > 0.0
                                         : flux >= -kInactiveCurrentTol * std::abs(bias);
        report.second_law = ok ? SecondLaw::Pass : SecondLaw::Fail;
    }
    return report;
}

} // namespace qheat
