// kernel.cpp: Redfield / Lindblad kernel construction

#include "qheat/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "qheat/errors.hpp"

namespace qheat {

namespace {

using cd = std::complex<double>;

// Distinct transition frequencies closer than the secular tolerance cannot be
// classified as matching or not; refuse them.
void reject_near_degenerate(const Eigen::VectorXd& levels, const Eigen::MatrixXcd& raising,
                            const std::string& reservoir) {
    const double tol = secular_tolerance(levels);
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * levels.cwiseAbs().maxCoeff();
    std::vector<double> freqs;
    for (Eigen::Index p = 0; p < raising.rows(); ++p) {
        for (Eigen::Index q = 0; q < raising.cols(); ++q) {
            if (raising(p, q) != 0.0) freqs.push_back(levels(p) - levels(q));
        }
    }
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        for (std::size_t j = i + 1; j < freqs.size(); ++j) {
            const double gap = std::abs(freqs[i] - freqs[j]);
            if (gap > noise && gap < tol) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "build_kernel: reservoir '" << reservoir
                    << "' has near-degenerate transition frequencies " << freqs[i] << " and "
                    << freqs[j] << " (gap " << gap << " < secular tolerance " << tol << ")";
                throw ConfigError(msg.str());
            }
        }
    }
}

} // namespace

std::string_view to_string(KernelMode mode) noexcept {
    switch (mode) {
    case KernelMode::Redfield: return "redfield";
    case KernelMode::Lindblad: return "lindblad";
    case KernelMode::PartialSecular: return "partial-secular";
    }
    return "unknown";
}

KernelMode parse_kernel_mode(std::string_view name) {
    if (name == "redfield") return KernelMode::Redfield;
    if (name == "lindblad") return KernelMode::Lindblad;
    if (name == "partial-secular") return KernelMode::PartialSecular;
    throw ConfigError("unknown kernel mode '" + std::string(name) + "'");
}

SuperKernel SuperKernel::zero(int dim, KernelMode mode, std::string reservoir) {
    SuperKernel k;
    k.dim = dim;
    k.entries = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
    k.mode = mode;
    k.reservoir = std::move(reservoir);
    return k;
}

double secular_tolerance(const Eigen::VectorXd& levels) {
    return std::max(1e-9 * levels.cwiseAbs().maxCoeff(), 1e-12);
}

SuperKernel build_kernel(const SystemSpec& system, const BathSpec& bath,
                         const std::string& reservoir, KernelMode mode) {
    const ReservoirCoupling& c = system.coupling(reservoir);
    const Eigen::VectorXd& E = system.levels();
    const int n = system.dim();
    const double tol = secular_tolerance(E);

    if (mode != KernelMode::Redfield) reject_near_degenerate(E, c.raising, reservoir);

    // S[0] = S¹ (raising), S[1] = S² (lowering); only (α,β) = (1,2), (2,1) survive
    // because D¹¹ = D²² = 0.
    const Eigen::MatrixXcd* S[2] = {&c.raising, &c.lowering};
    constexpr int channels[2][2] = {{1, 2}, {2, 1}};

    const bool secular_decay = mode != KernelMode::Redfield;
    const bool secular_transfer = mode == KernelMode::Lindblad;
    auto matches = [tol](double x) { return std::abs(x) <= tol; };
    auto D = [&bath](int a, int b, double w) { return bath_correlation(bath, a, b, w); };

    SuperKernel k = SuperKernel::zero(n, mode, reservoir);
    for (int p = 0; p < n; ++p) {
        for (int pp = 0; pp < n; ++pp) {
            for (int q = 0; q < n; ++q) {
                for (int qq = 0; qq < n; ++qq) {
                    cd v = 0.0;
                    for (const auto& [a, b] : channels) {
                        const Eigen::MatrixXcd& Sa = *S[a - 1];
                        const Eigen::MatrixXcd& Sb = *S[b - 1];

                        // −½ δ_{p'q'} Σ_l S^α_{pl} S^β_{lq} D^{αβ}(E_{pl})
                        if (pp == qq && (!secular_decay || matches(E(p) - E(q)))) {
                            for (int l = 0; l < n; ++l) {
                                const cd prod = Sa(p, l) * Sb(l, q);
                                if (prod != 0.0) v -= 0.5 * prod * D(a, b, E(p) - E(l));
                            }
                        }
                        // −½ δ_{pq} Σ_l S^α_{q'l} S^β_{lp'} D^{αβ}(E_{p'l})
                        if (p == q && (!secular_decay || matches(E(qq) - E(pp)))) {
                            for (int l = 0; l < n; ++l) {
                                const cd prod = Sa(qq, l) * Sb(l, pp);
                                if (prod != 0.0) v -= 0.5 * prod * D(a, b, E(pp) - E(l));
                            }
                        }
                        // +½ S^β_{pq} S^α_{q'p'} (D^{αβ}(E_{q'p'}) + D^{αβ}(E_{qp}))
                        const cd prod = Sb(p, q) * Sa(qq, pp);
                        if (prod != 0.0 &&
                            (!secular_transfer || matches(E(p) - E(q) + E(qq) - E(pp)))) {
                            v += 0.5 * prod * (D(a, b, E(qq) - E(pp)) + D(a, b, E(q) - E(p)));
                        }
                    }
                    k.entries(k.index(p, pp), k.index(q, qq)) = v;
                }
            }
        }
    }

    return k;
}

double check_trace_condition(const SuperKernel& kernel) {
    const int n = kernel.dim;
    double worst = 0.0;
    for (int q = 0; q < n; ++q) {
        for (int qq = 0; qq < n; ++qq) {
            cd sum = 0.0;
            for (int p = 0; p < n; ++p) sum += kernel(p, p, q, qq);
            worst = std::max(worst, std::abs(sum));
        }
    }
    return worst;
}

SuperKernel combine_kernels(std::span<const SuperKernel> kernels, bool allow_mixed_modes) {
    if (kernels.empty()) throw ConfigError("combine_kernels: no kernels given");

    SuperKernel total = kernels.front();
    bool mixed = false;
    for (std::size_t i = 1; i < kernels.size(); ++i) {
        const SuperKernel& k = kernels[i];
        if (k.dim != total.dim) {
            std::ostringstream msg;
            msg << "combine_kernels: dimension mismatch (" << total.dim << " vs " << k.dim << ")";
            throw ConfigError(msg.str());
        }
        if (k.mode != total.mode) mixed = true;
        total.entries += k.entries;
        total.reservoir += "+" + k.reservoir;
    }
    if (mixed) {
        if (!allow_mixed_modes) {
            throw ConfigError("combine_kernels: kernels were built in different modes");
        }
        std::cerr << "warning: combine_kernels: summing kernels of different modes; result "
                     "labelled " << to_string(total.mode) << "\n";
    }
    // A single partial-secular kernel leaks trace through the coherence columns;
    // only sums in which the leaks cancel describe a valid generator.
    if (!mixed && total.mode == KernelMode::PartialSecular) {
        const double residual = check_trace_condition(total);
        const double scale = std::max(1.0, total.entries.cwiseAbs().maxCoeff());
        if (residual > kTraceTol * scale) {
            std::ostringstream msg;
            msg << "combine_kernels: partial-secular kernel sum " << total.reservoir
                << " violates the trace condition (residual " << residual
                << "); the reservoirs must share one spectral density";
            throw ConfigError(msg.str());
        }
    }
    return total;
}

} // namespace qheat
