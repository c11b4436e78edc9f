// system.hpp: Finite-level systems in their energy eigenbasis plus the two
// concrete models (single qubit, flip-flop coupled qubits).

#pragma once

#include <Eigen/Dense>

#include <array>
#include <map>
#include <string>
#include <tuple>

namespace qheat {

// Coupling of the system to one reservoir through S¹ (raising) and S² = S¹† (lowering),
// both expressed in the energy eigenbasis.
struct ReservoirCoupling {
    Eigen::MatrixXcd raising;
    Eigen::MatrixXcd lowering;
};

class SystemSpec {
public:
    // Validates: N ≥ 2, square N×N couplings, and S¹_{pq} ≠ 0 only where E_p > E_q.
    // Lowering operators are derived as the adjoint of each raising operator.
    SystemSpec(Eigen::VectorXd levels, const std::map<std::string, Eigen::MatrixXcd>& raising);

    int dim() const noexcept { return static_cast<int>(levels_.size()); }
    const Eigen::VectorXd& levels() const noexcept { return levels_; }
    double energy(int n) const { return levels_(n); }
    // E_{pq} = E_p − E_q
    double transition(int p, int q) const { return levels_(p) - levels_(q); }

    bool has_reservoir(const std::string& label) const { return couplings_.count(label) != 0; }
    // Throws ConfigError for an unknown label.
    const ReservoirCoupling& coupling(const std::string& label) const;
    const std::map<std::string, ReservoirCoupling>& couplings() const noexcept { return couplings_; }

private:
    Eigen::VectorXd levels_;
    std::map<std::string, ReservoirCoupling> couplings_;
};

// Diagonalisation data of the coupled-qubit Hamiltonian.
struct CoupledDiag {
    double omega_m{0.0};      // (ω1 + ω2)/2
    double delta_omega{0.0};  // (ω1 − ω2)/2
    double theta{0.0};        // atan2(2λ, ω1 − ω2) ∈ [0, π]
    double alpha{1.0};        // cos(θ/2)
    double beta{0.0};         // sin(θ/2)
    double omega_plus{0.0};   // E_3 − E_1 = E_4 − E_2
    double omega_minus{0.0};  // E_2 − E_1 = E_4 − E_3
    std::array<double, 4> energies{};
    // Columns are |1⟩..|4⟩ in the product basis ordered |−−⟩, |−+⟩, |+−⟩, |++⟩
    // (first sign: qubit 1).
    Eigen::Matrix4d basis = Eigen::Matrix4d::Identity();
};

// Two levels E = (−ω0/2, +ω0/2); reservoirs "A" and "B" both couple through σ⁺.
SystemSpec make_single_qubit(double omega0);

// H = ω1/2 σ₁ᶻ + ω2/2 σ₂ᶻ + λ(σ₁⁺σ₂⁻ + σ₁⁻σ₂⁺), reservoir "A" on σ₁, "B" on σ₂.
// Requires ω1, ω2 > 0 and 0 ≤ λ < √(ω1ω2).
std::tuple<SystemSpec, CoupledDiag> make_coupled_qubits(double omega1, double omega2, double lambda);

// Diagonalisation only (same validation as make_coupled_qubits).
CoupledDiag diagonalize_coupled_qubits(double omega1, double omega2, double lambda);

} // namespace qheat
