// models.hpp: Closed-form steady states and heat currents for the single-qubit
// and coupled-qubit models. Each expression is evaluated as written, without
// algebraic simplification, so that disagreement with the generic
// kernel → steady-state → current pipeline points at exactly one side.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

#include "qheat/bath.hpp"
#include "qheat/system.hpp"

namespace qheat::models {

struct SingleQubitParams {
    double omega0{1.0};
    double g_a{1.0};
    double g_b{1.0};
    double t_a{1.0};
    double t_b{1.0};
};

struct CoupledQubitParams {
    double omega1{1.0};
    double omega2{2.0};
    double lambda{0.5};
    SpectralDensity g_a = SpectralDensity::constant(1.0);
    SpectralDensity g_b = SpectralDensity::constant(1.0);
    double t_a{1.0};
    double t_b{1.0};
};

// ----------------------------- single qubit ---------------------------------

struct SingleQubitClosed {
    double rho_plus{0.0};
    double rho_minus{0.0};
    double ratio{0.0};  // ρ₊₊/ρ₋₋
    double q_a{0.0};
    double q_b{0.0};
};

// Throws DomainError for ω0 ≤ 0, negative g or T, ConfigError when g_a = g_b = 0.
SingleQubitClosed single_qubit_closed(const SingleQubitParams& p);

// ----------------------------- coupled, Lindblad ----------------------------

// Rate parameters a_n (reservoir A), b_n (reservoir B) and s_n = a_n + b_n, n = 1..4
// stored at index n−1:
//   a = (α²g_A(ω₊)(1+n_A(ω₊)), β²g_A(ω₋)(1+n_A(ω₋)), α²g_A(ω₊)n_A(ω₊), β²g_A(ω₋)n_A(ω₋))
//   b = (β²g_B(ω₊)(1+n_B(ω₊)), α²g_B(ω₋)(1+n_B(ω₋)), β²g_B(ω₊)n_B(ω₊), α²g_B(ω₋)n_B(ω₋))
struct CoupledRates {
    std::array<double, 4> a{};
    std::array<double, 4> b{};
    std::array<double, 4> s{};
};

CoupledRates coupled_rates(const CoupledDiag& diag, const SpectralDensity& g_a,
                           const SpectralDensity& g_b, double t_a, double t_b);

struct CoupledLindbladClosed {
    CoupledDiag diag;
    CoupledRates rates;
    std::array<double, 4> populations{};  // ρ₁₁..ρ₄₄
    // Currents split by transition group (ω₊, ω₋).
    double q_a_plus{0.0};
    double q_a_minus{0.0};
    double q_b_plus{0.0};
    double q_b_minus{0.0};
    // Same currents written through the rate parameters a_n, b_n, s_n.
    double q_a_from_rates{0.0};
    double q_b_from_rates{0.0};

    double q_a() const noexcept { return q_a_plus + q_a_minus; }
    double q_b() const noexcept { return q_b_plus + q_b_minus; }
};

// Throws as make_coupled_qubits, and ConfigError when one transition group has no
// dissipation at all (populations undefined).
CoupledLindbladClosed coupled_lindblad_closed(const CoupledQubitParams& p);

// ----------------------------- coupled, Redfield ----------------------------

// Parameters of the closed-form Redfield solution for a uniform spectral density g.
struct RateParams {
    std::array<double, 4> a{};
    std::array<double, 4> b{};
    std::array<double, 4> s{};
    std::array<double, 4> c{};  // αβg/2 · (1+n_A(ω₊), 1+n_A(ω₋), n_A(ω₊), n_A(ω₋))
    std::array<double, 4> d{};  // αβg/2 · (1+n_B(ω₊), 1+n_B(ω₋), n_B(ω₊), n_B(ω₋))
    double c12{0.0}, c34{0.0}, d12{0.0}, d34{0.0};
    double k{0.0};        // αβg/2 [n_A(ω₊) − n_B(ω₊) + n_A(ω₋) − n_B(ω₋)]
    double e{0.0};        // E₂₃ = E₂ − E₃
    double s_total{0.0};  // s₁ + s₂ + s₃ + s₄
    double norm{0.0};     // (s² + 4e²)(s₁+s₃)(s₂+s₄) − 4(ks)²
};

struct CoupledRedfieldClosed {
    CoupledDiag diag;
    RateParams params;
    std::array<double, 4> populations{};
    std::complex<double> rho23{};
    std::complex<double> rho32{};
};

CoupledRedfieldClosed coupled_redfield_closed(double omega1, double omega2, double lambda,
                                              double g, double t_a, double t_b);
// Throws ConfigError unless g_a and g_b take one common value at ω₊ and ω₋.
CoupledRedfieldClosed coupled_redfield_closed(const CoupledQubitParams& p);

// Generator restricted to (ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄, ρ₂₃, ρ₃₂) whose nullspace the closed-form
// Redfield populations and coherences describe.
Eigen::Matrix<std::complex<double>, 6, 6> redfield_reduced_generator(const RateParams& params);

// ----------------------------- asymptotic currents --------------------------

enum class Regime { High, Low };

struct SingleLimit {
    double q_a{0.0};
    double q_b{0.0};
};

struct CoupledLimit {
    double q_a_plus{0.0};
    double q_a_minus{0.0};
    double q_b_plus{0.0};
    double q_b_minus{0.0};

    double q_a() const noexcept { return q_a_plus + q_a_minus; }
    double q_b() const noexcept { return q_b_plus + q_b_minus; }
};

// High: T_A, T_B ≫ transition frequencies (classical). Low: T_A, T_B ≪ them.
SingleLimit limit_currents(Regime regime, const SingleQubitParams& p);
CoupledLimit limit_currents(Regime regime, const CoupledQubitParams& p);

} // namespace qheat::models
