// thermo.hpp: Steady-state heat currents per reservoir and first/second-law checks.
// Sign convention: q_R > 0 means energy flows from reservoir R into the system.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qheat/kernel.hpp"
#include "qheat/steady.hpp"
#include "qheat/system.hpp"

namespace qheat {

// Largest tolerated |Im q| before the current is declared inconsistent.
inline constexpr double kCurrentImagTol = 1e-10;

// q_R = Σ_n E_n Σ_{qq'} K^R_{(nn),(qq')} ρ_{qq'}. Throws ConsistencyError when the
// imaginary part exceeds kCurrentImagTol, ConfigError on dimension mismatch.
double reservoir_current(const SystemSpec& system, const SuperKernel& reservoir_kernel,
                         const DensityMatrix& rho);

// With a coupling switched off the currents vanish up to this round-off.
inline constexpr double kInactiveCurrentTol = 1e-12;

enum class SecondLaw { Pass, Fail, NotApplicable };
std::string_view to_string(SecondLaw s) noexcept;

struct ReservoirHeat {
    std::string label;
    double temperature{0.0};
    double current{0.0};
};

struct CurrentReport {
    std::vector<ReservoirHeat> reservoirs;
    double conservation_residual{0.0};  // |Σ_R q_R|
    SecondLaw second_law{SecondLaw::NotApplicable};
};

// Exactly two reservoirs (first one plays "A"). Second law: q_A·(T_A − T_B) ≥ 0,
// required strictly when the temperatures differ and `couplings_active` is set
// (otherwise q_A may vanish to kInactiveCurrentTol); not applicable at equal
// temperatures.
CurrentReport law_checks(std::span<const ReservoirHeat> reservoirs, bool couplings_active = true);

} // namespace qheat
