// bath.hpp: Bosonic reservoirs: Planck occupation, spectral density, and the
// rotating-wave bath correlation D^{αβ}(ω). Natural units ħ = k_B = 1.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qheat {

// n(ω) = 1/(exp(ω/T) − 1); exactly 0 at T = 0. Throws DomainError for ω ≤ 0 or T < 0.
double planck_occupation(double omega, double temperature);

// Spectral density g(ω) on ω > 0: either a constant or a table of
// (frequency, value) pairs looked up at exactly matching frequencies.
class SpectralDensity {
public:
    // Frequencies in a table match when they agree to this relative tolerance.
    static constexpr double kTableRelTol = 1e-12;

    static SpectralDensity constant(double value);
    static SpectralDensity table(std::vector<std::pair<double, double>> points);

    // Throws DomainError for ω ≤ 0 and LookupError for a missing table entry.
    double operator()(double omega) const;

    bool is_constant() const noexcept { return table_.empty(); }
    double constant_value() const noexcept { return value_; }
    const std::vector<std::pair<double, double>>& points() const noexcept { return table_; }

private:
    SpectralDensity() = default;

    double value_{0.0};
    std::vector<std::pair<double, double>> table_; // sorted by frequency
};

struct BathSpec {
    double temperature{0.0};
    SpectralDensity spectral_density = SpectralDensity::constant(0.0);
    std::string label;

    BathSpec(std::string label, double temperature, SpectralDensity g);
};

// Bath correlation D^{αβ}(ω) with channel indices α, β ∈ {1, 2}:
//   D^{12}(ω) = g(ω)(1 + n(ω))   for ω > 0  (emission into the bath)
//   D^{21}(ω) = g(−ω) n(−ω)      for ω < 0  (absorption from the bath)
// and zero for every other (α, β, sign of ω). ω = 0 on the 12/21 channels is a DomainError.
double bath_correlation(const BathSpec& bath, int alpha, int beta, double omega);

} // namespace qheat
