// bath.cpp: Planck factors, spectral densities, bath correlations

#include "qheat/bath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"

namespace qheat {

double planck_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw DomainError("planck_occupation: frequency must be positive");
    }
    if (!(temperature >= 0.0)) {
        throw DomainError("planck_occupation: temperature must be nonnegative");
    }
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

SpectralDensity SpectralDensity::constant(double value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw DomainError("SpectralDensity: value must be finite and nonnegative");
    }
    SpectralDensity g;
    g.value_ = value;
    return g;
}

SpectralDensity SpectralDensity::table(std::vector<std::pair<double, double>> points) {
    if (points.empty()) {
        throw ConfigError("SpectralDensity: table must not be empty");
    }
    for (const auto& [w, v] : points) {
        if (!(w > 0.0)) throw DomainError("SpectralDensity: table frequencies must be positive");
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("SpectralDensity: table values must be finite and nonnegative");
        }
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double a = points[i - 1].first;
        const double b = points[i].first;
        if (std::abs(b - a) <= kTableRelTol * std::max(a, b)) {
            throw ConfigError("SpectralDensity: duplicate table frequency");
        }
    }
    SpectralDensity g;
    g.table_ = std::move(points);
    return g;
}

double SpectralDensity::operator()(double omega) const {
    if (!(omega > 0.0)) {
        throw DomainError("SpectralDensity: queried at nonpositive frequency");
    }
    if (table_.empty()) return value_;

    auto it = std::lower_bound(table_.begin(), table_.end(), omega,
                               [](const auto& p, double w) { return p.first < w; });
    auto matches = [omega](const auto& p) {
        return std::abs(p.first - omega) <= kTableRelTol * std::max(p.first, omega);
    };
    if (it != table_.end() && matches(*it)) return it->second;
    if (it != table_.begin() && matches(*std::prev(it))) return std::prev(it)->second;

    std::ostringstream msg;
    msg.precision(17);
    msg << "SpectralDensity: no table entry at frequency " << omega;
    throw LookupError(msg.str());
}

BathSpec::BathSpec(std::string label_, double temperature_, SpectralDensity g)
    : temperature(temperature_), spectral_density(std::move(g)), label(std::move(label_)) {
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw DomainError("BathSpec: temperature must be finite and nonnegative");
    }
}

double bath_correlation(const BathSpec& bath, int alpha, int beta, double omega) {
    if (alpha < 1 || alpha > 2 || beta < 1 || beta > 2) {
        throw ConfigError("bath_correlation: channel indices must be 1 or 2");
    }
    if (alpha == beta) return 0.0;
    if (omega == 0.0) {
        throw DomainError("bath_correlation: zero frequency on an RWA channel");
    }
    if (alpha == 1) {
        if (omega < 0.0) return 0.0;
        const double n = planck_occupation(omega, bath.temperature);
        return bath.spectral_density(omega) * (1.0 + n);
    }
    if (omega > 0.0) return 0.0;
    return bath.spectral_density(-omega) * planck_occupation(-omega, bath.temperature);
}

} // namespace qheat
