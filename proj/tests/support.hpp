// support.hpp: shared helpers for the unit and acceptance tests: seeded
// parameter generators and oracles written independently of the library.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace qheat::testing {

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// Relative error with an absolute floor, for quantities that may vanish.
inline double rel_err_floor(double got, double want, double floor) {
    return std::abs(got - want) / std::max(std::abs(want), floor);
}

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Planck factor from the definition, via exp rather than expm1.
inline double planck_ref(double w, double t) {
    return t == 0.0 ? 0.0 : 1.0 / (std::exp(w / t) - 1.0);
}

// Product basis |q1 q2⟩ with index 2·q1 + q2 (0 = −, 1 = +), matching |−−⟩, |−+⟩, |+−⟩, |++⟩.
inline Eigen::Matrix4d coupled_hamiltonian(double w1, double w2, double lambda) {
    Eigen::Matrix2d sz{{-1.0, 0.0}, {0.0, 1.0}};
    Eigen::Matrix2d sp{{0.0, 0.0}, {1.0, 0.0}};  // |+⟩⟨−|
    Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    auto kron = [](const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
        Eigen::Matrix4d k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        return k;
    };
    const Eigen::Matrix4d s1p = kron(sp, id), s2p = kron(id, sp);
    return 0.5 * w1 * kron(sz, id) + 0.5 * w2 * kron(id, sz) +
           lambda * (s1p * s2p.transpose() + s1p.transpose() * s2p);
}

inline Eigen::Matrix4d sigma_plus(int qubit) {
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    if (qubit == 1) {
        s(2, 0) = 1.0;
        s(3, 1) = 1.0;
    } else {
        s(1, 0) = 1.0;
        s(3, 2) = 1.0;
    }
    return s;
}

// Single-qubit steady state and current from rate balance: up-rate Σ g n, down-rate Σ g(1+n).
struct SingleRef {
    double rho_plus, rho_minus, q_a;
};
inline SingleRef single_ref(double w0, double ga, double gb, double ta, double tb) {
    const double na = planck_ref(w0, ta), nb = planck_ref(w0, tb);
    const double up = ga * na + gb * nb;
    const double down = ga * (1 + na) + gb * (1 + nb);
    const double rp = up / (up + down);
    const double rm = down / (up + down);
    // energy w0 gained per absorption from A minus emission into A
    return {rp, rm, w0 * (ga * na * rm - ga * (1 + na) * rp)};
}

} // namespace qheat::testing
