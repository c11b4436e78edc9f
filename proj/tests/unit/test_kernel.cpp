#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "qheat/errors.hpp"
#include "qheat/kernel.hpp"
#include "qheat/steady.hpp"
#include "qheat/system.hpp"
#include "support.hpp"

using namespace qheat;
using cd = std::complex<double>;
using qheat::testing::Draw;
using qheat::testing::planck_ref;

namespace {

constexpr std::array<KernelMode, 3> kAllModes{KernelMode::Redfield, KernelMode::Lindblad,
                                              KernelMode::PartialSecular};

double hermiticity_defect(const SuperKernel& k) {
    const int n = k.dim;
    double worst = 0.0;
    for (int p = 0; p < n; ++p)
        for (int pp = 0; pp < n; ++pp)
            for (int q = 0; q < n; ++q)
                for (int qq = 0; qq < n; ++qq)
                    worst = std::max(worst, std::abs(k(pp, p, qq, q) - std::conj(k(p, pp, q, qq))));
    return worst;
}

// Population block of one reservoir's coupled-qubit Lindblad kernel from its four rates
// (decay ω₊, decay ω₋, excitation ω₊, excitation ω₋).
Eigen::Matrix4d population_block(const std::array<double, 4>& r) {
    Eigen::Matrix4d m;
    m << -(r[2] + r[3]), r[1], r[0], 0.0,
         r[3], -(r[1] + r[2]), 0.0, r[0],
         r[2], 0.0, -(r[0] + r[3]), r[1],
         0.0, r[2], r[3], -(r[0] + r[1]);
    return m;
}

Eigen::Matrix4d population_part(const SuperKernel& k) {
    Eigen::Matrix4d m;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) m(p, q) = k(p, p, q, q).real();
    return m;
}

} // namespace

TEST_CASE("mode names round-trip") {
    for (auto m : kAllModes) CHECK(parse_kernel_mode(to_string(m)) == m);
    CHECK_THROWS_AS(parse_kernel_mode("secular"), ConfigError);
}

TEST_CASE("single-qubit kernel elements") {
    const double g = 0.7, t = 1.3, w0 = 1.1;
    const double n = planck_ref(w0, t);
    const SystemSpec s = make_single_qubit(w0);
    const BathSpec bath("A", t, SpectralDensity::constant(g));
    const SuperKernel red = build_kernel(s, bath, "A", KernelMode::Redfield);
    const SuperKernel lin = build_kernel(s, bath, "A", KernelMode::Lindblad);
    const int P = 1, M = 0;  // + and − levels
    CHECK(std::abs(lin(P, P, P, P) - cd(-g * (1 + n))) < 1e-14);
    CHECK(std::abs(lin(M, M, P, P) - cd(g * (1 + n))) < 1e-14);
    CHECK(std::abs(lin(P, P, M, M) - cd(g * n)) < 1e-14);
    CHECK(std::abs(lin(M, M, M, M) - cd(-g * n)) < 1e-14);
    CHECK(std::abs(lin(P, M, P, M) - cd(-0.5 * g * (1 + 2 * n))) < 1e-14);
    CHECK(std::abs(lin(M, P, M, P) - cd(-0.5 * g * (1 + 2 * n))) < 1e-14);
    CHECK((lin.entries.array() != cd(0.0)).count() == 6);
    CHECK(red.entries == lin.entries);
    CHECK(lin.reservoir == "A");
    CHECK(lin.mode == KernelMode::Lindblad);
}

TEST_CASE("single-qubit combined kernel sums reservoir rates") {
    const double w0 = 1.0, ta = 2.0, tb = 0.5, ga = 1.0, gb = 0.4;
    const SystemSpec s = make_single_qubit(w0);
    const SuperKernel ka = build_kernel(s, {"A", ta, SpectralDensity::constant(ga)}, "A", KernelMode::Lindblad);
    const SuperKernel kb = build_kernel(s, {"B", tb, SpectralDensity::constant(gb)}, "B", KernelMode::Lindblad);
    const std::array<SuperKernel, 2> both{ka, kb};
    const SuperKernel k = combine_kernels(both);
    const double na = planck_ref(w0, ta), nb = planck_ref(w0, tb);
    CHECK(std::abs(k(1, 1, 1, 1) - cd(-(ga * (1 + na) + gb * (1 + nb)))) < 1e-14);
    CHECK(std::abs(k(0, 0, 1, 1) - cd(ga * (1 + na) + gb * (1 + nb))) < 1e-14);
    CHECK(std::abs(k(1, 1, 0, 0) - cd(ga * na + gb * nb)) < 1e-14);
    CHECK(std::abs(k(0, 0, 0, 0) - cd(-(ga * na + gb * nb))) < 1e-14);
    CHECK(k.reservoir == "A+B");
}

TEST_CASE("coupled-qubit Lindblad population blocks") {
    const double w1 = 1.0, w2 = 2.0, lam = 0.5, ta = 1.5, tb = 0.8, ga = 0.9, gb = 1.2;
    const auto [s, d] = make_coupled_qubits(w1, w2, lam);
    const SuperKernel ka = build_kernel(s, {"A", ta, SpectralDensity::constant(ga)}, "A", KernelMode::Lindblad);
    const SuperKernel kb = build_kernel(s, {"B", tb, SpectralDensity::constant(gb)}, "B", KernelMode::Lindblad);
    const double a2 = d.alpha * d.alpha, b2 = d.beta * d.beta;
    const double nap = planck_ref(d.omega_plus, ta), nam = planck_ref(d.omega_minus, ta);
    const double nbp = planck_ref(d.omega_plus, tb), nbm = planck_ref(d.omega_minus, tb);
    const std::array<double, 4> a{a2 * ga * (1 + nap), b2 * ga * (1 + nam), a2 * ga * nap, b2 * ga * nam};
    const std::array<double, 4> b{b2 * gb * (1 + nbp), a2 * gb * (1 + nbm), b2 * gb * nbp, a2 * gb * nbm};
    CHECK((population_part(ka) - population_block(a)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((population_part(kb) - population_block(b)).cwiseAbs().maxCoeff() < 1e-13);

    const std::array<SuperKernel, 2> both{ka, kb};
    const SuperKernel k = combine_kernels(both);
    std::array<double, 4> sn{};
    for (int i = 0; i < 4; ++i) sn[i] = a[i] + b[i];
    CHECK((population_part(k) - population_block(sn)).cwiseAbs().maxCoeff() < 1e-13);

    // populations never couple to coherences under the secular constraint
    for (int n = 0; n < 4; ++n)
        for (int q = 0; q < 4; ++q)
            for (int qq = 0; qq < 4; ++qq)
                if (q != qq) {
                    CHECK(k(n, n, q, qq) == cd(0.0));
                    CHECK(k(q, qq, n, n) == cd(0.0));
                }
}

TEST_CASE("coupled-qubit Redfield couples populations to the 23 coherence") {
    const auto [s, d] = make_coupled_qubits(1.0, 2.0, 0.5);
    const SuperKernel ka = build_kernel(s, {"A", 10.5, SpectralDensity::constant(1.0)}, "A", KernelMode::Redfield);
    const SuperKernel kb = build_kernel(s, {"B", 0.5, SpectralDensity::constant(1.0)}, "B", KernelMode::Redfield);
    const std::array<SuperKernel, 2> both{ka, kb};
    const SuperKernel k = combine_kernels(both);
    const double ab = d.alpha * d.beta;
    const double kk = 0.5 * ab *
                      (planck_ref(d.omega_plus, 10.5) - planck_ref(d.omega_plus, 0.5) +
                       planck_ref(d.omega_minus, 10.5) - planck_ref(d.omega_minus, 0.5));
    CHECK(std::abs(k(0, 0, 1, 2) - cd(-kk)) < 1e-12);
    CHECK(std::abs(k(0, 0, 2, 1) - cd(-kk)) < 1e-12);
    CHECK(std::abs(k(3, 3, 1, 2) - cd(kk)) < 1e-12);
    CHECK(std::abs(k(3, 3, 2, 1) - cd(kk)) < 1e-12);
    CHECK(std::abs(k(1, 2, 0, 0) - cd(-kk)) < 1e-12);
    CHECK(std::abs(k(1, 2, 3, 3) - cd(kk)) < 1e-12);

    // equal temperatures: the 11/44 ↔ 23 couplings cancel between A and B
    const SuperKernel ea = build_kernel(s, {"A", 2.0, SpectralDensity::constant(1.0)}, "A", KernelMode::Redfield);
    const SuperKernel eb = build_kernel(s, {"B", 2.0, SpectralDensity::constant(1.0)}, "B", KernelMode::Redfield);
    const std::array<SuperKernel, 2> eq{ea, eb};
    const SuperKernel ke = combine_kernels(eq);
    CHECK(std::abs(ke(0, 0, 1, 2)) < 1e-14);
    CHECK(std::abs(ke(3, 3, 1, 2)) < 1e-14);
}

TEST_CASE("kernel structure properties") {
    Draw d(31);
    for (int i = 0; i < 120; ++i) {
        const double w1 = d.uniform(0.2, 5.0), w2 = d.uniform(0.2, 5.0);
        const double lam = d.uniform(0.01, 0.9) * std::sqrt(w1 * w2);
        const auto [s, diag] = make_coupled_qubits(w1, w2, lam);
        const BathSpec bath(d.coin() ? "A" : "B", d.uniform(0.05, 10.0),
                            SpectralDensity::constant(d.uniform(0.1, 2.0)));
        const SuperKernel red = build_kernel(s, bath, bath.label, KernelMode::Redfield);
        const SuperKernel lin = build_kernel(s, bath, bath.label, KernelMode::Lindblad);
        const SuperKernel part = build_kernel(s, bath, bath.label, KernelMode::PartialSecular);
        const double scale = std::max(1.0, red.entries.cwiseAbs().maxCoeff());
        CHECK(check_trace_condition(red) < 1e-12 * scale);
        CHECK(check_trace_condition(lin) < 1e-12 * scale);
        CHECK(hermiticity_defect(red) < 1e-14 * scale);
        CHECK(hermiticity_defect(lin) < 1e-14 * scale);
        CHECK(hermiticity_defect(part) < 1e-14 * scale);
        // Lindblad and PartialSecular keep a subset of the Redfield entries unchanged
        for (Eigen::Index r = 0; r < 16; ++r) {
            for (Eigen::Index c = 0; c < 16; ++c) {
                if (lin.entries(r, c) != cd(0.0)) {
                    CHECK(std::abs(lin.entries(r, c) - red.entries(r, c)) <= 1e-15 * scale);
                }
                if (red.entries(r, c) == cd(0.0)) {
                    CHECK(lin.entries(r, c) == cd(0.0));
                    CHECK(part.entries(r, c) == cd(0.0));
                }
            }
        }
    }
}

TEST_CASE("Lindblad kernel thermalises to the Gibbs state") {
    Draw d(32);
    for (int i = 0; i < 100; ++i) {
        const double w1 = d.uniform(0.2, 5.0), w2 = d.uniform(0.2, 5.0);
        const double lam = d.uniform(0.0, 0.9) * std::sqrt(w1 * w2);
        const double t = d.uniform(0.05, 10.0);
        const auto [s, diag] = make_coupled_qubits(w1, w2, lam);
        const SuperKernel k = build_kernel(s, {"A", t, SpectralDensity::constant(d.uniform(0.1, 2.0))}, "A",
                                           KernelMode::Lindblad);
        Eigen::VectorXd w(4);
        for (int n = 0; n < 4; ++n) w(n) = std::exp(-(s.energy(n) - s.energy(0)) / t);
        const DensityMatrix gibbs = DensityMatrix::from_populations(w);
        const Liouvillian L = assemble_liouvillian(s, k);
        CHECK((L.matrix * vectorize(gibbs)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("trace-condition detector") {
    const SystemSpec s = make_single_qubit(1.0);
    SuperKernel k = build_kernel(s, {"A", 1.0, SpectralDensity::constant(1.0)}, "A", KernelMode::Lindblad);
    CHECK(check_trace_condition(k) < 1e-12);
    k.entries(k.index(1, 1), k.index(0, 0)) += 1e-3;
    CHECK(check_trace_condition(k) >= 1e-3);
    CHECK(check_trace_condition(SuperKernel::zero(3, KernelMode::Redfield, "Z")) == 0.0);
}

TEST_CASE("build_kernel errors") {
    const SystemSpec s = make_single_qubit(1.0);
    CHECK_THROWS_AS(build_kernel(s, {"C", 1.0, SpectralDensity::constant(1.0)}, "C", KernelMode::Lindblad),
                    ConfigError);
    const BathSpec tab("A", 1.0, SpectralDensity::table({{2.0, 1.0}}));
    CHECK_THROWS_AS(build_kernel(s, tab, "A", KernelMode::Redfield), LookupError);
    const BathSpec ok("A", 1.0, SpectralDensity::table({{1.0, 1.0}}));
    CHECK_NOTHROW(build_kernel(s, ok, "A", KernelMode::Lindblad));
}

TEST_CASE("near-degenerate transition frequencies") {
    Eigen::VectorXd e(3);
    e << 0.0, 1.0, 2.0 + 1e-10;
    Eigen::MatrixXcd up = Eigen::MatrixXcd::Zero(3, 3);
    up(1, 0) = 1.0;
    up(2, 1) = 1.0;
    const SystemSpec s(e, {{"A", up}});
    const BathSpec bath("A", 1.0, SpectralDensity::constant(1.0));
    CHECK_THROWS_AS(build_kernel(s, bath, "A", KernelMode::Lindblad), ConfigError);
    CHECK_THROWS_AS(build_kernel(s, bath, "A", KernelMode::PartialSecular), ConfigError);
    CHECK_NOTHROW(build_kernel(s, bath, "A", KernelMode::Redfield));

    // exactly equal spacings are a genuine degeneracy and are accepted
    Eigen::VectorXd ladder(3);
    ladder << 0.0, 1.0, 2.0;
    const SystemSpec harmonic(ladder, {{"A", up}});
    const SuperKernel k = build_kernel(harmonic, bath, "A", KernelMode::Lindblad);
    CHECK(check_trace_condition(k) < 1e-12);
}

TEST_CASE("secular tolerance") {
    Eigen::VectorXd e(2);
    e << -3.0, 2.0;
    CHECK(secular_tolerance(e) == doctest::Approx(3e-9));
    e << -1e-6, 1e-6;
    CHECK(secular_tolerance(e) == 1e-12);
}

TEST_CASE("combine_kernels") {
    const SystemSpec s = make_single_qubit(1.0);
    const SuperKernel k = build_kernel(s, {"A", 1.0, SpectralDensity::constant(1.0)}, "A", KernelMode::Lindblad);
    const std::array<SuperKernel, 2> with_zero{k, SuperKernel::zero(2, KernelMode::Lindblad, "Z")};
    CHECK(combine_kernels(with_zero).entries == k.entries);

    CHECK_THROWS_AS(combine_kernels(std::span<const SuperKernel>{}), ConfigError);
    const std::array<SuperKernel, 2> mismatch{k, SuperKernel::zero(3, KernelMode::Lindblad, "Z")};
    CHECK_THROWS_AS(combine_kernels(mismatch), ConfigError);
    const std::array<SuperKernel, 2> mixed{k, SuperKernel::zero(2, KernelMode::Redfield, "Z")};
    CHECK_THROWS_AS(combine_kernels(mixed), ConfigError);
    const SuperKernel m = combine_kernels(mixed, true);
    CHECK(m.entries == k.entries);
    CHECK(m.mode == KernelMode::Lindblad);
}

TEST_CASE("partial-secular sums are trace preserving only for a shared spectral density") {
    const auto [s, d] = make_coupled_qubits(1.0, 2.0, 0.5);
    const auto build = [&](const char* label, double t, double g) {
        return build_kernel(s, {label, t, SpectralDensity::constant(g)}, label, KernelMode::PartialSecular);
    };
    const std::array<SuperKernel, 2> uniform{build("A", 3.0, 1.0), build("B", 0.5, 1.0)};
    CHECK(check_trace_condition(uniform[0]) > 0.1);
    CHECK(check_trace_condition(combine_kernels(uniform)) < 1e-12);
    const std::array<SuperKernel, 2> uneven{build("A", 3.0, 1.0), build("B", 0.5, 0.5)};
    CHECK_THROWS_AS(combine_kernels(uneven), ConfigError);
}
