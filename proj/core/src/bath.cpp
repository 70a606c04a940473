#include "dqcsim/bath.hpp"

#include "dqcsim/errors.hpp"
#include "dqcsim/units.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dqcsim {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

template <typename T>
T density_impl(T w, const SpectralDensity& sd) {
    T j = 2.0 * sd.lambda0_cm1 * sd.gamma0_cm1 * w / (w * w + sd.gamma0_cm1 * sd.gamma0_cm1);
    for (const BrownianMode& m : sd.modes) {
        const double v2 = m.frequency_cm1 * m.frequency_cm1;
        const T d = v2 - w * w;
        j += 2.0 * m.reorganization_cm1 * v2 * m.damping_cm1 * w /
             (d * d + w * w * m.damping_cm1 * m.damping_cm1);
    }
    return j;
}

cplx coth(cplx z) { return 1.0 / std::tanh(z); }

}  // namespace

double SpectralDensity::beta_cm() const noexcept { return units::beta_cm(temperature_K); }

void SpectralDensity::validate() const {
    if (!(lambda0_cm1 >= 0.0) || !(gamma0_cm1 > 0.0)) {
        throw ConfigError("phonon: lambda0 must be >= 0 and gamma0 > 0");
    }
    if (!(temperature_K > 0.0) || !std::isfinite(temperature_K)) {
        throw ConfigError("phonon: temperature_K must be positive");
    }
    if (n_matsubara < 0) {
        throw ConfigError("phonon: n_matsubara must be >= 0");
    }
    for (std::size_t j = 0; j < modes.size(); ++j) {
        const BrownianMode& m = modes[j];
        const std::string tag = "phonon: mode " + std::to_string(j);
        if (!(m.frequency_cm1 > 0.0) || !(m.damping_cm1 > 0.0) || !(m.reorganization_cm1 >= 0.0) ||
            !std::isfinite(m.frequency_cm1) || !std::isfinite(m.reorganization_cm1)) {
            throw ConfigError(tag + ": frequency and damping must be positive, lambda non-negative");
        }
        if (!(m.frequency_cm1 > 0.5 * m.damping_cm1)) {
            std::ostringstream os;
            os << tag << ": upsilon_j = " << m.frequency_cm1 << " cm^-1 is not above gamma_j/2 = "
               << 0.5 * m.damping_cm1 << " cm^-1 (mode must be underdamped)";
            throw ConfigError(os.str());
        }
    }
    // The overdamped pole must not sit on a Matsubara pole.
    const double nu1 = 2.0 * units::pi / beta_cm();
    for (int n = 1; n <= n_matsubara; ++n) {
        if (std::abs(n * nu1 - gamma0_cm1) < 1e-9 * gamma0_cm1) {
            throw ConfigError("phonon: gamma0 coincides with a Matsubara frequency");
        }
    }
}

double spectral_density(double omega_cm1, const SpectralDensity& sd) {
    return density_impl<double>(omega_cm1, sd);
}

cplx spectral_density(cplx omega_cm1, const SpectralDensity& sd) {
    return density_impl<cplx>(omega_cm1, sd);
}

ExponentialSumCorrelation::ExponentialSumCorrelation(std::vector<ExponentialTerm> terms)
    : terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (!(t.rate.real() > 0.0)) {
            throw NumericError("exponential-sum correlation: decay rate with non-positive real part");
        }
    }
}

ExponentialSumCorrelation ExponentialSumCorrelation::assemble(const SpectralDensity& sd) {
    sd.validate();
    const double beta = sd.beta_cm();
    std::vector<ExponentialTerm> terms;
    terms.reserve(1 + 2 * sd.modes.size() + static_cast<std::size_t>(sd.n_matsubara));

    // A lower-half-plane pole w_k of J contributes -i Res[J](w_k) (1 + coth(beta w_k / 2))
    // with decay rate phi_k = i w_k.
    auto add_pole = [&](cplx pole, cplx residue) {
        const cplx c = -I * residue * (1.0 + coth(0.5 * beta * pole));
        terms.push_back({c, I * pole});
    };

    // Overdamped: pole at -i g0, residue l0 g0.
    add_pole(cplx(0.0, -sd.gamma0_cm1), sd.lambda0_cm1 * sd.gamma0_cm1);

    // Brownian: poles at +-zeta - i g/2, zeta = sqrt(v^2 - g^2/4).
    for (const BrownianMode& m : sd.modes) {
        const double v2 = m.frequency_cm1 * m.frequency_cm1;
        const double g = m.damping_cm1;
        const double zeta = std::sqrt(v2 - 0.25 * g * g);
        for (const double sign : {+1.0, -1.0}) {
            const cplx w(sign * zeta, -0.5 * g);
            const cplx numerator = 2.0 * m.reorganization_cm1 * v2 * g * w;
            const cplx d_denominator = -4.0 * w * (v2 - w * w) + 2.0 * g * g * w;
            add_pole(w, numerator / d_denominator);
        }
    }

    // Matsubara poles of coth at w = -i nu_n, residue 2/beta.
    const double nu1 = 2.0 * units::pi / beta;
    for (int n = 1; n <= sd.n_matsubara; ++n) {
        const double nu = n * nu1;
        const cplx c = -I * (2.0 / beta) * spectral_density(cplx(0.0, -nu), sd);
        terms.push_back({c, cplx(nu, 0.0)});
    }
    return ExponentialSumCorrelation(std::move(terms));
}

cplx ExponentialSumCorrelation::at_time(double t_fs) const {
    if (t_fs < 0.0) {
        throw std::domain_error("bath correlation is one-sided: t must be >= 0");
    }
    const double s = units::fs_to_reduced(t_fs);
    cplx sum{0.0, 0.0};
    for (const auto& t : terms_) {
        sum += t.coefficient * std::exp(-t.rate * s);
    }
    return sum;
}

cplx ExponentialSumCorrelation::at_frequency(double omega_cm1) const {
    cplx sum{0.0, 0.0};
    for (const auto& t : terms_) {
        sum += t.coefficient / (t.rate - I * omega_cm1);
    }
    return sum;
}

}  // namespace dqcsim
