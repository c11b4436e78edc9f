// models.cpp: closed-form oracles for the qubit models

#include "qheat/models.hpp"

#include <cmath>

#include "qheat/errors.hpp"

namespace qheat::models {

namespace {

using cd = std::complex<double>;

void check_temperatures(double t_a, double t_b) {
    if (!(t_a >= 0.0) || !(t_b >= 0.0)) throw DomainError("temperatures must be nonnegative");
}

// exp(−ω/T) with the T = 0 limit taken explicitly
double boltzmann(double omega, double t) { return t == 0.0 ? 0.0 : std::exp(-omega / t); }

} // namespace

SingleQubitClosed single_qubit_closed(const SingleQubitParams& p) {
    if (!(p.omega0 > 0.0)) throw DomainError("single_qubit_closed: ω0 must be positive");
    if (!(p.g_a >= 0.0) || !(p.g_b >= 0.0)) {
        throw DomainError("single_qubit_closed: spectral densities must be nonnegative");
    }
    if (p.g_a == 0.0 && p.g_b == 0.0) {
        throw ConfigError("single_qubit_closed: no dissipation (g_A = g_B = 0)");
    }
    check_temperatures(p.t_a, p.t_b);

    const double ga = p.g_a, gb = p.g_b, w0 = p.omega0;
    const double na = planck_occupation(w0, p.t_a);
    const double nb = planck_occupation(w0, p.t_b);
    const double den = ga * (1.0 + 2.0 * na) + gb * (1.0 + 2.0 * nb);

    SingleQubitClosed r;
    r.rho_plus = (ga * na + gb * nb) / den;
    r.rho_minus = (ga * (1.0 + na) + gb * (1.0 + nb)) / den;
    r.ratio = (ga * na + gb * nb) / (ga * (1.0 + na) + gb * (1.0 + nb));
    r.q_a = ga * gb * w0 / den * (na - nb);
    r.q_b = ga * gb * w0 / den * (nb - na);
    return r;
}

CoupledRates coupled_rates(const CoupledDiag& diag, const SpectralDensity& g_a,
                           const SpectralDensity& g_b, double t_a, double t_b) {
    check_temperatures(t_a, t_b);
    const double wp = diag.omega_plus, wm = diag.omega_minus;
    const double a2 = diag.alpha * diag.alpha, b2 = diag.beta * diag.beta;
    const double gap = g_a(wp), gam = g_a(wm), gbp = g_b(wp), gbm = g_b(wm);
    const double nap = planck_occupation(wp, t_a), nam = planck_occupation(wm, t_a);
    const double nbp = planck_occupation(wp, t_b), nbm = planck_occupation(wm, t_b);

    CoupledRates r;
    r.a = {a2 * gap * (1.0 + nap), b2 * gam * (1.0 + nam), a2 * gap * nap, b2 * gam * nam};
    r.b = {b2 * gbp * (1.0 + nbp), a2 * gbm * (1.0 + nbm), b2 * gbp * nbp, a2 * gbm * nbm};
    for (int i = 0; i < 4; ++i) r.s[i] = r.a[i] + r.b[i];
    return r;
}

CoupledLindbladClosed coupled_lindblad_closed(const CoupledQubitParams& p) {
    CoupledLindbladClosed out;
    out.diag = diagonalize_coupled_qubits(p.omega1, p.omega2, p.lambda);
    out.rates = coupled_rates(out.diag, p.g_a, p.g_b, p.t_a, p.t_b);

    const auto& [a1, a2, a3, a4] = out.rates.a;
    const auto& [b1, b2, b3, b4] = out.rates.b;
    const auto& [s1, s2, s3, s4] = out.rates.s;
    const double norm = (s1 + s3) * (s2 + s4);
    if (!(norm > 0.0)) {
        throw ConfigError("coupled_lindblad_closed: a transition group has no dissipation");
    }
    out.populations = {s1 * s2 / norm, s1 * s4 / norm, s3 * s2 / norm, s3 * s4 / norm};

    const CoupledDiag& d = out.diag;
    const double al = d.alpha, be = d.beta, wp = d.omega_plus, wm = d.omega_minus;
    const double ab2 = (al * be) * (al * be);
    const double gap = p.g_a(wp), gam = p.g_a(wm), gbp = p.g_b(wp), gbm = p.g_b(wm);
    const double nap = planck_occupation(wp, p.t_a), nam = planck_occupation(wm, p.t_a);
    const double nbp = planck_occupation(wp, p.t_b), nbm = planck_occupation(wm, p.t_b);

    const double den_plus =
        al * al * gap * (1.0 + 2.0 * nap) + be * be * gbp * (1.0 + 2.0 * nbp);
    const double den_minus =
        be * be * gam * (1.0 + 2.0 * nam) + al * al * gbm * (1.0 + 2.0 * nbm);

    out.q_a_plus = ab2 * gap * gbp * wp / den_plus * (nap - nbp);
    out.q_a_minus = ab2 * gam * gbm * wm / den_minus * (nam - nbm);
    out.q_b_plus = ab2 * gap * gbp * wp / den_plus * (nbp - nap);
    out.q_b_minus = ab2 * gam * gbm * wm / den_minus * (nbm - nam);

    out.q_a_from_rates = (a3 * b1 - a1 * b3) / (s1 + s3) * wp + (a4 * b2 - a2 * b4) / (s2 + s4) * wm;
    out.q_b_from_rates = (a1 * b3 - a3 * b1) / (s1 + s3) * wp + (a2 * b4 - a4 * b2) / (s2 + s4) * wm;
    return out;
}

CoupledRedfieldClosed coupled_redfield_closed(double omega1, double omega2, double lambda,
                                              double g, double t_a, double t_b) {
    if (!(g >= 0.0)) throw DomainError("coupled_redfield_closed: g must be nonnegative");
    check_temperatures(t_a, t_b);

    CoupledRedfieldClosed out;
    out.diag = diagonalize_coupled_qubits(omega1, omega2, lambda);
    const CoupledDiag& d = out.diag;
    const auto gs = SpectralDensity::constant(g);
    const CoupledRates rates = coupled_rates(d, gs, gs, t_a, t_b);

    RateParams& r = out.params;
    r.a = rates.a;
    r.b = rates.b;
    r.s = rates.s;

    const double nap = planck_occupation(d.omega_plus, t_a);
    const double nam = planck_occupation(d.omega_minus, t_a);
    const double nbp = planck_occupation(d.omega_plus, t_b);
    const double nbm = planck_occupation(d.omega_minus, t_b);
    const double pref = d.alpha * d.beta * g / 2.0;
    r.c = {pref * (1.0 + nap), pref * (1.0 + nam), pref * nap, pref * nam};
    r.d = {pref * (1.0 + nbp), pref * (1.0 + nbm), pref * nbp, pref * nbm};
    r.c12 = r.c[0] + r.c[1];
    r.c34 = r.c[2] + r.c[3];
    r.d12 = r.d[0] + r.d[1];
    r.d34 = r.d[2] + r.d[3];
    r.k = pref * (nap - nbp + nam - nbm);
    r.e = d.energies[1] - d.energies[2];

    const auto& [s1, s2, s3, s4] = r.s;
    const double s = s1 + s2 + s3 + s4;
    const double e = r.e, k = r.k;
    r.s_total = s;
    r.norm = (s * s + 4.0 * e * e) * (s1 + s3) * (s2 + s4) - 4.0 * (k * s) * (k * s);
    if (r.norm == 0.0) throw ConfigError("coupled_redfield_closed: vanishing normalisation");

    const double N = r.norm;
    const double lead = (s * s + 4.0 * e * e) / N;
    const double corr = 4.0 * k * k / N;
    out.populations = {
        lead * s1 * s2 - corr * (s1 + s4) * (s2 + s3),
        lead * s1 * s4 - corr * (s1 + s4) * (s1 + s4),
        lead * s2 * s3 - corr * (s2 + s3) * (s2 + s3),
        lead * s3 * s4 - corr * (s1 + s4) * (s2 + s3),
    };
    out.rho23 = -(2.0 * k / N) * (s1 * s2 - s3 * s4) * cd(s, -2.0 * e);
    out.rho32 = -(2.0 * k / N) * (s1 * s2 - s3 * s4) * cd(s, 2.0 * e);
    return out;
}

CoupledRedfieldClosed coupled_redfield_closed(const CoupledQubitParams& p) {
    const CoupledDiag d = diagonalize_coupled_qubits(p.omega1, p.omega2, p.lambda);
    const double g = p.g_a(d.omega_plus);
    if (p.g_a(d.omega_minus) != g || p.g_b(d.omega_plus) != g || p.g_b(d.omega_minus) != g) {
        throw ConfigError(
            "coupled_redfield_closed: closed form needs g_A(ω±) = g_B(ω±) = g; use the generic "
            "pipeline instead");
    }
    return coupled_redfield_closed(p.omega1, p.omega2, p.lambda, g, p.t_a, p.t_b);
}

Eigen::Matrix<std::complex<double>, 6, 6> redfield_reduced_generator(const RateParams& r) {
    const auto& [s1, s2, s3, s4] = r.s;
    const double s = r.s_total, k = r.k, e = r.e;
    Eigen::Matrix<cd, 6, 6> m;
    // clang-format off
    m << -(s3 + s4), s2,         s1,          0.0,        -k,              -k,
         s4,         -(s2 + s3), 0.0,         s1,         0.0,             0.0,
         s3,         0.0,        -(s1 + s4),  s2,         0.0,             0.0,
         0.0,        s3,         s4,          -(s1 + s2), k,               k,
         -k,         0.0,        0.0,         k,          cd(-s / 2, -e),  0.0,
         -k,         0.0,        0.0,         k,          0.0,             cd(-s / 2, e);
    // clang-format on
    return m;
}

SingleLimit limit_currents(Regime regime, const SingleQubitParams& p) {
    if (!(p.omega0 > 0.0)) throw DomainError("limit_currents: ω0 must be positive");
    check_temperatures(p.t_a, p.t_b);
    const double ga = p.g_a, gb = p.g_b, w0 = p.omega0, ta = p.t_a, tb = p.t_b;
    SingleLimit out;
    if (regime == Regime::High) {
        out.q_a = 0.5 * ga * gb * w0 / (ga * ta + gb * tb) * (ta - tb);
        out.q_b = 0.5 * ga * gb * w0 / (ga * ta + gb * tb) * (tb - ta);
    } else {
        out.q_a = ga * gb * w0 / (ga + gb) * (boltzmann(w0, ta) - boltzmann(w0, tb));
        out.q_b = ga * gb * w0 / (ga + gb) * (boltzmann(w0, tb) - boltzmann(w0, ta));
    }
    return out;
}

CoupledLimit limit_currents(Regime regime, const CoupledQubitParams& p) {
    check_temperatures(p.t_a, p.t_b);
    const CoupledDiag d = diagonalize_coupled_qubits(p.omega1, p.omega2, p.lambda);
    const double al = d.alpha, be = d.beta, wp = d.omega_plus, wm = d.omega_minus;
    const double ab2 = (al * be) * (al * be);
    const double gap = p.g_a(wp), gam = p.g_a(wm), gbp = p.g_b(wp), gbm = p.g_b(wm);
    const double ta = p.t_a, tb = p.t_b;

    CoupledLimit out;
    if (regime == Regime::High) {
        const double cp = 0.5 * ab2 * gap * gbp * wp / (al * al * gap * ta + be * be * gbp * tb);
        const double cm = 0.5 * ab2 * gam * gbm * wm / (be * be * gam * ta + al * al * gbm * tb);
        out.q_a_plus = cp * (ta - tb);
        out.q_a_minus = cm * (ta - tb);
        out.q_b_plus = cp * (tb - ta);
        out.q_b_minus = cm * (tb - ta);
    } else {
        const double cp = ab2 * gap * gbp * wp / (al * al * gap + be * be * gbp);
        const double cm = ab2 * gam * gbm * wm / (be * be * gam + al * al * gbm);
        out.q_a_plus = cp * (boltzmann(wp, ta) - boltzmann(wp, tb));
        out.q_a_minus = cm * (boltzmann(wm, ta) - boltzmann(wm, tb));
        out.q_b_plus = cp * (boltzmann(wp, tb) - boltzmann(wp, ta));
        out.q_b_minus = cm * (boltzmann(wm, tb) - boltzmann(wm, ta));
    }
    return out;
}

} // namespace qheat::models
