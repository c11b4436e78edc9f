// steady.cpp: Liouvillian assembly, nullspace solve, RK4 oracle, positivity

#include "qheat/steady.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"

namespace qheat {

namespace {

using cd = std::complex<double>;

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::vector<std::string> split_reservoirs(const std::string& joined) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : joined) {
        if (ch == '+') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return {Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim)};
}

DensityMatrix DensityMatrix::from_populations(const Eigen::VectorXd& populations) {
    const double total = populations.sum();
    if (!(total > 0.0)) throw DomainError("DensityMatrix: populations must sum to a positive value");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(populations.size(), populations.size());
    m.diagonal() = (populations / total).cast<cd>();
    return {m};
}

Eigen::VectorXcd vectorize(const DensityMatrix& rho) {
    const int n = rho.dim();
    Eigen::VectorXcd v(n * n);
    for (int p = 0; p < n; ++p)
        for (int pp = 0; pp < n; ++pp) v(p * n + pp) = rho.entries(p, pp);
    return v;
}

DensityMatrix unvectorize(const Eigen::VectorXcd& v, int dim) {
    if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
        throw ConfigError("unvectorize: length is not dim²");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (int p = 0; p < dim; ++p)
        for (int pp = 0; pp < dim; ++pp) m(p, pp) = v(p * dim + pp);
    return {m};
}

Liouvillian assemble_liouvillian(const SystemSpec& system, const SuperKernel& total) {
    const int n = system.dim();
    if (total.dim != n) {
        std::ostringstream msg;
        msg << "assemble_liouvillian: kernel dimension " << total.dim << " does not match system "
            << n;
        throw ConfigError(msg.str());
    }
    Liouvillian L;
    L.dim = n;
    L.matrix = total.entries;
    for (int p = 0; p < n; ++p) {
        for (int pp = 0; pp < n; ++pp) {
            L.matrix(p * n + pp, p * n + pp) += cd(0.0, -system.transition(p, pp));
        }
    }
    L.mode = total.mode;
    L.reservoirs = split_reservoirs(total.reservoir);
    return L;
}

SteadyState solve_steady_state(const Liouvillian& L) {
    const int n = L.dim;
    const Eigen::MatrixXcd& M = L.matrix;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const Eigen::VectorXd sigma = svd.singularValues();
    const double cut = kNullspaceRelTol * sigma(0);
    const auto nullity = (sigma.array() <= cut).count();
    if (nullity != 1) {
        std::ostringstream msg;
        msg.precision(6);
        msg << "solve_steady_state: nullspace dimension " << nullity
            << " (expected 1); smallest singular values:";
        for (Eigen::Index i = std::max<Eigen::Index>(0, sigma.size() - 4); i < sigma.size(); ++i) {
            msg << " " << sigma(i);
        }
        throw DegenerateSteadyStateError(msg.str());
    }

    Eigen::MatrixXcd A = M;
    A.row(0).setZero();
    for (int k = 0; k < n; ++k) A(0, k * n + k) = 1.0;
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n * n);
    rhs(0) = 1.0;

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    Eigen::VectorXcd x = lu.solve(rhs);
    x += lu.solve(rhs - A * x);
    if (!x.allFinite()) throw NumericError("solve_steady_state: linear solve produced non-finite values");

    SteadyState out;
    out.singular_values = sigma;
    Eigen::MatrixXcd rho = unvectorize(x, n).entries;
    out.hermiticity_residual = max_abs(rho - rho.adjoint());
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();
    out.rho = DensityMatrix{rho};
    out.residual = (M * vectorize(out.rho)).cwiseAbs().maxCoeff();
    if (!(out.residual < kSteadyResidualTol)) {
        std::ostringstream msg;
        msg << "solve_steady_state: residual " << out.residual << " exceeds " << kSteadyResidualTol;
        throw NumericError(msg.str());
    }
    return out;
}

Eigen::MatrixXcd nullspace_basis(const Liouvillian& L) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(L.matrix, Eigen::ComputeFullV);
    const Eigen::VectorXd sigma = svd.singularValues();
    const double cut = kNullspaceRelTol * sigma(0);
    const auto nullity = (sigma.array() <= cut).count();
    return svd.matrixV().rightCols(nullity);
}

double default_time_step(const Liouvillian& L) {
    const double norm = L.matrix.cwiseAbs().rowwise().sum().maxCoeff();
    if (!(norm > 0.0)) throw NumericError("default_time_step: generator is zero");
    return 0.01 / norm;
}

DensityMatrix evolve(const Liouvillian& L, const DensityMatrix& rho0, double t_final, double dt) {
    if (rho0.dim() != L.dim) throw ConfigError("evolve: state dimension does not match generator");
    if (!(dt > 0.0)) throw DomainError("evolve: dt must be positive");
    if (!(t_final >= 0.0)) throw DomainError("evolve: t_final must be nonnegative");
    if (std::abs(rho0.trace() - 1.0) > 1e-10 ||
        max_abs(rho0.entries - rho0.entries.adjoint()) > 1e-10) {
        throw DomainError("evolve: initial state must be Hermitian with unit trace");
    }
    if (t_final == 0.0) return rho0;

    const auto steps = static_cast<long long>(std::ceil(t_final / dt - 1e-9));
    const double h = t_final / static_cast<double>(steps);
    const Eigen::MatrixXcd& M = L.matrix;
    const cd trace0 = rho0.trace();
    const double bound = 1e6 * std::max(1.0, max_abs(rho0.entries));

    Eigen::VectorXcd y = vectorize(rho0);
    for (long long s = 0; s < steps; ++s) {
        const Eigen::VectorXcd k1 = M * y;
        const Eigen::VectorXcd k2 = M * (y + 0.5 * h * k1);
        const Eigen::VectorXcd k3 = M * (y + 0.5 * h * k2);
        const Eigen::VectorXcd k4 = M * (y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!y.allFinite() || y.cwiseAbs().maxCoeff() > bound) {
            std::ostringstream msg;
            msg << "evolve: integration unstable at t = " << h * static_cast<double>(s + 1)
                << "; use a smaller dt (default " << default_time_step(L) << ")";
            throw IntegrationError(msg.str());
        }
    }
    DensityMatrix out = unvectorize(y, L.dim);
    const double drift = std::abs(out.trace() - trace0);
    if (drift > 1e-8) {
        std::ostringstream msg;
        msg << "evolve: trace drifted by " << drift << "; use a smaller dt";
        throw IntegrationError(msg.str());
    }
    return out;
}

PositivityReport positivity_report(const DensityMatrix& rho) {
    PositivityReport r;
    r.min_population = rho.populations().minCoeff();
    r.hermiticity_residual = max_abs(rho.entries - rho.entries.adjoint());
    const Eigen::MatrixXcd herm = 0.5 * (rho.entries + rho.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = eig.eigenvalues().minCoeff();
    return r;
}

} // namespace qheat
