// biphoton.hpp: SPDC joint spectral amplitude, classical pulse pairs,
// four-point field correlation and Schmidt (SVD) analysis.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <variant>
#include <vector>

namespace dqcsim {

// Entangled photon pair from a pumped down-converter.
//
//   F(wa, wb) = A0(wa + wb) { sinc[phi(wa, wb)] e^{i phi(wa, wb)} + (a <-> b) }
//   phi(wj, wk) = (wj - center_a) T1 + (wk - center_b) T2        (radians)
//   A0 = amplitude * exp[-(wa + wb - pump)^2 tau_p^2 / 2]       (angular units)
//
// The photon centers default to pump/2 each.
struct BiphotonSource {
    double pump_cm1 = 31000.0;
    double pump_width_fs = 20.0;
    double t1_fs = -5.0;
    double t2_fs = 5.0;
    double center_a_cm1 = 15500.0;
    double center_b_cm1 = 15500.0;
    double amplitude = 1.0;

    double entanglement_time_fs() const noexcept { return t2_fs - t1_fs; }

    // Symmetric split T1 = -T_ent/2, T2 = +T_ent/2 and degenerate centers.
    static BiphotonSource degenerate(double pump_cm1, double pump_width_fs, double t_ent_fs);
    // Non-degenerate centers; the pump sits at their sum.
    static BiphotonSource with_centers(double center_a_cm1, double center_b_cm1, double pump_width_fs,
                                       double t_ent_fs);

    void validate() const;
};

// Two Gaussian pulses A_i(w) = exp[-(w - w_i)^2 tau_g^2 / 2].
struct ClassicalPulsePair {
    double center_1_cm1 = 15500.0;
    double center_2_cm1 = 15500.0;
    double width_fs = 10.0;

    std::complex<double> amplitude_1(double omega_cm1) const;
    std::complex<double> amplitude_2(double omega_cm1) const;
    void validate() const;
};

double sinc(double x) noexcept;

std::complex<double> jsa(double omega_a_cm1, double omega_b_cm1, const BiphotonSource& source);

// Field configurations for the four-point correlation
// <E4^+(w4) E3^+(w3) E2(w2) E1(w1)>. The excitation pair drives (E1, E2) and
// the projection pair (E3, E4).
struct BiphotonField {
    BiphotonSource excitation;
    BiphotonSource projection;
};
struct ClassicalField {
    ClassicalPulsePair excitation;
    ClassicalPulsePair projection;
};
// Frequency-independent unit correlation; used to isolate matter response.
struct FlatField {};

using FieldSource = std::variant<BiphotonField, ClassicalField, FlatField>;

std::complex<double> four_point_correlation(double w4, double w3, double w2, double w1, const FieldSource& source);

struct JointSpectralGrid {
    Eigen::VectorXd axis_a;
    Eigen::VectorXd axis_b;
    Eigen::MatrixXcd amplitude;  // amplitude(i, j) at (axis_a(i), axis_b(j))
};

// Uniform n x n grid. A non-positive half width selects the default window of
// three characteristic widths around the photon centers.
JointSpectralGrid build_jsa_grid(const BiphotonSource& source, int n = 256, double half_width_cm1 = 0.0);
JointSpectralGrid build_classical_grid(const ClassicalPulsePair& pulses, int n = 256, double half_width_cm1 = 0.0);

double default_jsa_half_width_cm1(const BiphotonSource& source);

struct SchmidtSpectrum {
    std::vector<double> sigma;   // normalized so that sum sigma^2 = 1 over all values, truncated
    double participation = 0.0;  // K = 1 / sum sigma^4 (over all values)
    double ratio_21 = 0.0;       // sigma_2 / sigma_1
};

// Throws std::invalid_argument for an all-zero grid.
SchmidtSpectrum schmidt_svd(const JointSpectralGrid& grid, int n_svd = 50);

}  // namespace dqcsim
