// bath.hpp: phonon spectral density and bath correlation function.
//
// J(w) = 2 l0 g0 w / (w^2 + g0^2)
//      + sum_j 2 l_j v_j^2 g_j w / ((v_j^2 - w^2)^2 + w^2 g_j^2)
//
// C(t) = (1/pi) int_0^inf dw J(w) [coth(beta w / 2) cos(w t) - i sin(w t)]
// is represented for t >= 0 as an exponential sum sum_k c_k exp(-phi_k s),
// s = 2 pi c t, obtained from the residues of J(w)(1 + coth(beta w / 2)) in
// the lower half plane: one overdamped pole, a pole pair per Brownian mode,
// and the first n_matsubara Matsubara poles.

#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dqcsim {

struct BrownianMode {
    double frequency_cm1 = 0.0;       // upsilon_j
    double reorganization_cm1 = 0.0;  // lambda_j = upsilon_j * Huang-Rhys factor
    double damping_cm1 = 30.0;        // gamma_j
};

struct SpectralDensity {
    double lambda0_cm1 = 37.0;
    double gamma0_cm1 = 30.0;
    std::vector<BrownianMode> modes;
    double temperature_K = 300.0;
    int n_matsubara = 20;

    double beta_cm() const noexcept;

    // Throws ConfigError naming the offending mode (e.g. overdamped Brownian
    // mode, upsilon_j <= gamma_j / 2).
    void validate() const;
};

double spectral_density(double omega_cm1, const SpectralDensity& sd);
std::complex<double> spectral_density(std::complex<double> omega_cm1, const SpectralDensity& sd);

struct ExponentialTerm {
    std::complex<double> coefficient;  // cm^-2
    std::complex<double> rate;         // cm^-1, Re > 0
};

class ExponentialSumCorrelation {
public:
    ExponentialSumCorrelation() = default;
    explicit ExponentialSumCorrelation(std::vector<ExponentialTerm> terms);

    static ExponentialSumCorrelation assemble(const SpectralDensity& sd);

    const std::vector<ExponentialTerm>& terms() const noexcept { return terms_; }

    // C(t), t in fs; throws std::domain_error for t < 0.
    std::complex<double> at_time(double t_fs) const;

    // Half-sided transform int_0^inf ds exp(i W s) C(s) = sum_k c_k / (phi_k - i W),
    // W in cm^-1; result in cm^-1.
    std::complex<double> at_frequency(double omega_cm1) const;

private:
    std::vector<ExponentialTerm> terms_;
};

inline std::complex<double> correlation_time(double t_fs, const ExponentialSumCorrelation& c) {
    return c.at_time(t_fs);
}
inline std::complex<double> correlation_freq(double omega_cm1, const ExponentialSumCorrelation& c) {
    return c.at_frequency(omega_cm1);
}

// Phonon parameter file. Schema:
//   { "lambda0", "gamma0", "temperature_K", "n_matsubara",
//     "modes": [ {"upsilon_cm1", "huang_rhys" | "lambda_cm1", "gamma_cm1"} ],
//     optional "name", "note" }
SpectralDensity parse_phonon_json(std::string_view text);
SpectralDensity load_phonon_file(const std::filesystem::path& path);
std::string phonon_to_json(const SpectralDensity& sd);

}  // namespace dqcsim
