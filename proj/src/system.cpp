// system.cpp: SystemSpec validation and the qubit model constructors

#include "qheat/system.hpp"

#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"

namespace qheat {

SystemSpec::SystemSpec(Eigen::VectorXd levels,
                       const std::map<std::string, Eigen::MatrixXcd>& raising)
    : levels_(std::move(levels)) {
    const auto n = levels_.size();
    if (n < 2) throw ConfigError("SystemSpec: need at least two levels");
    if (!levels_.allFinite()) throw ConfigError("SystemSpec: levels must be finite");

    for (const auto& [label, s1] : raising) {
        if (s1.rows() != n || s1.cols() != n) {
            std::ostringstream msg;
            msg << "SystemSpec: coupling '" << label << "' has shape " << s1.rows() << "x"
                << s1.cols() << ", expected " << n << "x" << n;
            throw ConfigError(msg.str());
        }
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = 0; q < n; ++q) {
                if (s1(p, q) != 0.0 && !(levels_(p) - levels_(q) > 0.0)) {
                    std::ostringstream msg;
                    msg << "SystemSpec: raising operator '" << label << "' has element (" << p
                        << "," << q << ") on a non-raising transition";
                    throw ConfigError(msg.str());
                }
            }
        }
        couplings_.emplace(label, ReservoirCoupling{s1, s1.adjoint()});
    }
}

const ReservoirCoupling& SystemSpec::coupling(const std::string& label) const {
    auto it = couplings_.find(label);
    if (it == couplings_.end()) {
        throw ConfigError("SystemSpec: no reservoir labelled '" + label + "'");
    }
    return it->second;
}

SystemSpec make_single_qubit(double omega0) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw DomainError("make_single_qubit: ω0 must be positive");
    }
    Eigen::VectorXd levels(2);
    levels << -0.5 * omega0, 0.5 * omega0;
    Eigen::MatrixXcd sigma_plus = Eigen::MatrixXcd::Zero(2, 2);
    sigma_plus(1, 0) = 1.0; // ⟨+|σ⁺|−⟩
    return SystemSpec(levels, {{"A", sigma_plus}, {"B", sigma_plus}});
}

CoupledDiag diagonalize_coupled_qubits(double omega1, double omega2, double lambda) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0) || !std::isfinite(omega1) || !std::isfinite(omega2)) {
        throw DomainError("make_coupled_qubits: ω1 and ω2 must be positive");
    }
    if (!(lambda >= 0.0)) {
        throw DomainError("make_coupled_qubits: λ must be nonnegative");
    }
    if (!(lambda < std::sqrt(omega1 * omega2))) {
        throw DomainError("make_coupled_qubits: λ must be below √(ω1ω2) so that ω₋ > 0");
    }

    CoupledDiag d;
    d.omega_m = 0.5 * (omega1 + omega2);
    d.delta_omega = 0.5 * (omega1 - omega2);
    const double split = std::hypot(d.delta_omega, lambda);
    d.theta = std::atan2(2.0 * lambda, omega1 - omega2);
    if (lambda == 0.0) {
        // cos(π/2) is not exactly zero in floating point
        d.alpha = omega1 >= omega2 ? 1.0 : 0.0;
        d.beta = omega1 >= omega2 ? 0.0 : 1.0;
    } else {
        d.alpha = std::cos(0.5 * d.theta);
        d.beta = std::sin(0.5 * d.theta);
    }
    d.omega_plus = d.omega_m + split;
    d.omega_minus = d.omega_m - split;
    d.energies = {-d.omega_m, -split, split, d.omega_m};

    // product index: |−−⟩=0, |−+⟩=1, |+−⟩=2, |++⟩=3
    d.basis.setZero();
    d.basis(0, 0) = 1.0;
    d.basis(2, 1) = -d.beta;
    d.basis(1, 1) = d.alpha;
    d.basis(2, 2) = d.alpha;
    d.basis(1, 2) = d.beta;
    d.basis(3, 3) = 1.0;
    return d;
}

std::tuple<SystemSpec, CoupledDiag> make_coupled_qubits(double omega1, double omega2,
                                                        double lambda) {
    CoupledDiag d = diagonalize_coupled_qubits(omega1, omega2, lambda);

    Eigen::VectorXd levels(4);
    levels << d.energies[0], d.energies[1], d.energies[2], d.energies[3];

    // Energy-basis matrix elements; zero-based (p, q) ↔ ⟨p+1|σ⁺|q+1⟩.
    Eigen::MatrixXcd sigma1 = Eigen::MatrixXcd::Zero(4, 4);
    sigma1(2, 0) = d.alpha;  // (σ₁⁺)₃₁, ω₊
    sigma1(3, 1) = d.alpha;  // (σ₁⁺)₄₂, ω₊
    sigma1(3, 2) = d.beta;   // (σ₁⁺)₄₃, ω₋
    sigma1(1, 0) = -d.beta;  // (σ₁⁺)₂₁, ω₋

    Eigen::MatrixXcd sigma2 = Eigen::MatrixXcd::Zero(4, 4);
    sigma2(1, 0) = d.alpha;  // (σ₂⁺)₂₁, ω₋
    sigma2(3, 2) = d.alpha;  // (σ₂⁺)₄₃, ω₋
    sigma2(2, 0) = d.beta;   // (σ₂⁺)₃₁, ω₊
    sigma2(3, 1) = -d.beta;  // (σ₂⁺)₄₂, ω₊

    return {SystemSpec(levels, {{"A", sigma1}, {"B", sigma2}}), d};
}

} // namespace qheat
