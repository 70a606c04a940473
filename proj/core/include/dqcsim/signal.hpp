// signal.hpp: frequency-domain double-quantum-coherence signal.
//
// For every triple (j, k, j') of one-, two- and one-polariton states the two
// loop pathways share the dipole product
//   w = mu_{0j'} mu_{j'k} mu_{kj} mu_{j0}
// and the field factor <E4^+(w_kj') E3^+(w_j'0) E2(w_kj) E1(w_j0)>, and differ
// in the Omega_3 resonance:
//   pathway a: 1 / ((O3 - z_j'0)(O2 - z_k0)(O1 - z_j0))
//   pathway b: 1 / ((O3 - z_kj')(O2 - z_k0)(O1 - z_j0))
// Pathway b enters with a configurable relative sign (default -1), so the two
// cancel for a harmonic system.

#pragma once

#include "dqcsim/biphoton.hpp"
#include "dqcsim/dephasing.hpp"
#include "dqcsim/polariton.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace dqcsim {

enum class Pathway { a, b };

struct PathwayTerm {
    int j = 0;    // first one-polariton state
    int k = 0;    // two-polariton state
    int jp = 0;   // second one-polariton state
    Pathway pathway = Pathway::a;
    std::complex<double> weight;   // dipole loop product
    std::complex<double> z_j0, z_k0, z_jp0, z_kjp, z_kj;
    bool swapped_omega3 = false;   // debug: exchange the O3 resonances of a and b

    std::complex<double> omega3_resonance() const noexcept {
        return (pathway == Pathway::a) != swapped_omega3 ? z_jp0 : z_kjp;
    }
};

// All triples whose |w| >= threshold * max|w|, each emitted once per pathway
// (a then b), ordered by (j, k, j'). Throws std::invalid_argument on empty
// dipole operators.
std::vector<PathwayTerm> enumerate_pathways(const PolaritonOperators& ops, const DephasingTable& table,
                                            double threshold = 0.0);

// Alternative assignment in which pathway a resonates at z_kj' and pathway b at
// z_j'0 during the last interval. Debug only.
std::vector<PathwayTerm> with_swapped_omega3(std::vector<PathwayTerm> terms);

struct GridSpec {
    double omega1 = 0.0;
    double omega2_min = 0.0, omega2_max = 0.0;
    double omega3_min = 0.0, omega3_max = 0.0;
    int n2 = 256;
    int n3 = 256;
};

// Omega_2 over the two-polariton band and Omega_3 over the one-polariton band,
// both padded by `padding_cm1`.
GridSpec default_grid(const DephasingTable& table, double omega1, int n = 256, double padding_cm1 = 500.0);

struct SignalOptions {
    double relative_sign = -1.0;  // sign of pathway b relative to a
    bool normalize = true;        // choose C_s so that max |S| = 1
    int workers = 1;
};

struct SpectrumGrid {
    Eigen::VectorXd omega2;
    Eigen::VectorXd omega3;
    double omega1 = 0.0;
    Eigen::MatrixXcd values;   // values(i2, i3)
    double scale = 1.0;        // C_s
    std::size_t n_terms = 0;

    Eigen::MatrixXd imag() const { return values.imag(); }
    Eigen::MatrixXd modulus() const { return values.cwiseAbs(); }
};

// Field-weighted evaluation on a grid. Terms are grouped by two-polariton
// state; each grid value is reduced in a fixed order by exactly one worker,
// so the output is bit-identical for any worker count.
SpectrumGrid evaluate_spectrum(const std::vector<PathwayTerm>& terms, const FieldSource& source,
                               const GridSpec& grid, const SignalOptions& options = {});

// Straight triple loop over grid points and terms; reference implementation.
SpectrumGrid evaluate_spectrum_direct(const std::vector<PathwayTerm>& terms, const FieldSource& source,
                                      const GridSpec& grid, const SignalOptions& options = {});

// Single-point evaluation (unnormalized, C_s = 1).
std::complex<double> evaluate_point(const std::vector<PathwayTerm>& terms, const FieldSource& source,
                                    double omega3, double omega2, double omega1, double relative_sign = -1.0);

// Re z_j0 of the one-polariton state carrying the largest field-weighted
// dipole strength sum_{k, j'} |w| |D|.
double dominant_omega1(const std::vector<PathwayTerm>& terms, const FieldSource& source);

struct GridPeak {
    Eigen::Index i2 = 0;
    Eigen::Index i3 = 0;
    double omega2 = 0.0;
    double omega3 = 0.0;
    double value = 0.0;
};

// Strict local maxima of `layer` (8-neighbourhood, interior points) with
// value >= rel_threshold * max, sorted by decreasing value.
std::vector<GridPeak> local_maxima(const Eigen::MatrixXd& layer, const Eigen::VectorXd& omega2,
                                   const Eigen::VectorXd& omega3, double rel_threshold);

// Local maxima of |S| farther than `tolerance_cm1` from both diagonal lines
// O3 = O1 and O3 = O2 - O1 (features where the projected one-polariton state
// coincides with the excited one).
std::size_t count_off_diagonal_maxima(const SpectrumGrid& grid, double rel_threshold, double tolerance_cm1);

}  // namespace dqcsim
