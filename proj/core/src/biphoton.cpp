#include "dqcsim/biphoton.hpp"

#include "dqcsim/errors.hpp"
#include "dqcsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqcsim {

namespace {

using cplx = std::complex<double>;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double gaussian_amplitude(double omega_cm1, double center_cm1, double width_fs) {
    const double x = units::cm1_to_rad_per_fs(omega_cm1 - center_cm1) * width_fs;
    return std::exp(-0.5 * x * x);
}

Eigen::VectorXd uniform_axis(double center, double half_width, int n) {
    if (n < 2) {
        throw std::invalid_argument("grid must have at least two points per axis");
    }
    return Eigen::VectorXd::LinSpaced(n, center - half_width, center + half_width);
}

}  // namespace

BiphotonSource BiphotonSource::degenerate(double pump_cm1, double pump_width_fs, double t_ent_fs) {
    BiphotonSource s;
    s.pump_cm1 = pump_cm1;
    s.pump_width_fs = pump_width_fs;
    s.t1_fs = -0.5 * t_ent_fs;
    s.t2_fs = 0.5 * t_ent_fs;
    s.center_a_cm1 = 0.5 * pump_cm1;
    s.center_b_cm1 = 0.5 * pump_cm1;
    return s;
}

BiphotonSource BiphotonSource::with_centers(double center_a_cm1, double center_b_cm1, double pump_width_fs,
                                            double t_ent_fs) {
    BiphotonSource s = degenerate(center_a_cm1 + center_b_cm1, pump_width_fs, t_ent_fs);
    s.center_a_cm1 = center_a_cm1;
    s.center_b_cm1 = center_b_cm1;
    return s;
}

void BiphotonSource::validate() const {
    if (!(pump_width_fs > 0.0) || !std::isfinite(pump_width_fs)) {
        throw ConfigError("biphoton: pump width tau_p must be positive");
    }
    if (!std::isfinite(pump_cm1) || !std::isfinite(t1_fs) || !std::isfinite(t2_fs) ||
        !std::isfinite(center_a_cm1) || !std::isfinite(center_b_cm1) || !std::isfinite(amplitude)) {
        throw ConfigError("biphoton: non-finite source parameter");
    }
}

cplx ClassicalPulsePair::amplitude_1(double omega_cm1) const {
    return gaussian_amplitude(omega_cm1, center_1_cm1, width_fs);
}

cplx ClassicalPulsePair::amplitude_2(double omega_cm1) const {
    return gaussian_amplitude(omega_cm1, center_2_cm1, width_fs);
}

void ClassicalPulsePair::validate() const {
    if (!(width_fs > 0.0) || !std::isfinite(width_fs)) {
        throw ConfigError("classical pulse pair: width tau_g must be positive");
    }
}

double sinc(double x) noexcept {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

cplx jsa(double omega_a_cm1, double omega_b_cm1, const BiphotonSource& source) {
    const double k = units::rad_per_fs_per_cm1;
    auto phase = [&](double wj, double wk) {
        return k * ((wj - source.center_a_cm1) * source.t1_fs + (wk - source.center_b_cm1) * source.t2_fs);
    };
    const double detuning = k * (omega_a_cm1 + omega_b_cm1 - source.pump_cm1) * source.pump_width_fs;
    const double a0 = source.amplitude * std::exp(-0.5 * detuning * detuning);
    const double phi_ab = phase(omega_a_cm1, omega_b_cm1);
    const double phi_ba = phase(omega_b_cm1, omega_a_cm1);
    return a0 * (sinc(phi_ab) * std::polar(1.0, phi_ab) + sinc(phi_ba) * std::polar(1.0, phi_ba));
}

cplx four_point_correlation(double w4, double w3, double w2, double w1, const FieldSource& source) {
    return std::visit(
        overloaded{
            [&](const BiphotonField& f) {
                return std::conj(jsa(w4, w3, f.projection)) * jsa(w2, w1, f.excitation);
            },
            [&](const ClassicalField& f) {
                return std::conj(f.projection.amplitude_2(w4)) * std::conj(f.projection.amplitude_1(w3)) *
                       f.excitation.amplitude_2(w2) * f.excitation.amplitude_1(w1);
            },
            [](const FlatField&) { return cplx(1.0, 0.0); },
        },
        source);
}

double default_jsa_half_width_cm1(const BiphotonSource& source) {
    const double pump = 1.0 / source.pump_width_fs;
    const double t_ent = std::abs(source.entanglement_time_fs());
    const double phase_matching = t_ent > 0.0 ? units::pi / t_ent : 10.0 * pump;
    return 3.0 * units::rad_per_fs_to_cm1(std::max(pump, phase_matching));
}

JointSpectralGrid build_jsa_grid(const BiphotonSource& source, int n, double half_width_cm1) {
    source.validate();
    const double hw = half_width_cm1 > 0.0 ? half_width_cm1 : default_jsa_half_width_cm1(source);
    JointSpectralGrid g;
    g.axis_a = uniform_axis(source.center_a_cm1, hw, n);
    g.axis_b = uniform_axis(source.center_b_cm1, hw, n);
    g.amplitude.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.amplitude(i, j) = jsa(g.axis_a(i), g.axis_b(j), source);
        }
    }
    return g;
}

JointSpectralGrid build_classical_grid(const ClassicalPulsePair& pulses, int n, double half_width_cm1) {
    pulses.validate();
    const double hw =
        half_width_cm1 > 0.0 ? half_width_cm1 : 3.0 * units::rad_per_fs_to_cm1(1.0 / pulses.width_fs);
    JointSpectralGrid g;
    g.axis_a = uniform_axis(pulses.center_1_cm1, hw, n);
    g.axis_b = uniform_axis(pulses.center_2_cm1, hw, n);
    g.amplitude.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.amplitude(i, j) = pulses.amplitude_1(g.axis_a(i)) * pulses.amplitude_2(g.axis_b(j));
        }
    }
    return g;
}

SchmidtSpectrum schmidt_svd(const JointSpectralGrid& grid, int n_svd) {
    if (grid.amplitude.size() == 0 || !grid.amplitude.allFinite()) {
        throw std::invalid_argument("schmidt_svd: empty or non-finite amplitude grid");
    }
    if (grid.amplitude.cwiseAbs().maxCoeff() == 0.0) {
        throw std::invalid_argument("schmidt_svd: amplitude grid is identically zero");
    }
    const Eigen::BDCSVD<Eigen::MatrixXcd> svd(grid.amplitude);
    Eigen::VectorXd s = svd.singularValues();
    s /= s.norm();

    SchmidtSpectrum out;
    out.participation = 1.0 / s.array().pow(4).sum();
    out.ratio_21 = s.size() > 1 ? s(1) / s(0) : 0.0;
    const auto keep = std::min<Eigen::Index>(s.size(), std::max(n_svd, 0));
    out.sigma.assign(s.data(), s.data() + keep);
    return out;
}

}  // namespace dqcsim
