#include "dqcsim/dephasing.hpp"

#include "dqcsim/errors.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace dqcsim {

namespace {

using cplx = std::complex<double>;

void fnv1a(std::uint64_t& h, const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
}

}  // namespace

Eigen::VectorXd line_broadening_rates(const PolaritonManifold& manifold, const Eigen::VectorXd& weights,
                                      const ExponentialSumCorrelation& bath, const DephasingOptions& options,
                                      int* clamped) {
    const Eigen::MatrixXcd& t = manifold.transform;
    const Eigen::Index n = t.cols();
    if (weights.size() != t.rows()) {
        throw std::invalid_argument("line_broadening_rates: weight vector does not match the manifold basis");
    }

    // Overlap K(p1, p2).
    Eigen::MatrixXd overlap(n, n);
    if (options.reading == CouplingReading::site_local) {
        const Eigen::MatrixXd prob = t.cwiseAbs2();
        const Eigen::VectorXd w2 = weights.cwiseAbs2();
        overlap = prob.transpose() * w2.asDiagonal() * prob;
    } else {
        const Eigen::MatrixXcd x = t.adjoint() * weights.cast<cplx>().asDiagonal() * t;
        overlap = x.cwiseAbs2();
    }

    // Re C at each distinct transition frequency.
    Eigen::VectorXd rates = Eigen::VectorXd::Zero(n);
    int n_clamped = 0;
    for (Eigen::Index p1 = 0; p1 < n; ++p1) {
        double sum = 0.0;
        for (Eigen::Index p2 = 0; p2 < n; ++p2) {
            const double k = overlap(p1, p2);
            if (k == 0.0) continue;
            const double w = manifold.energies(p1) - manifold.energies(p2);
            sum += bath.at_frequency(w).real() * k;
        }
        if (sum < 0.0) {
            sum = 0.0;
            ++n_clamped;
        }
        rates(p1) = sum;
    }
    if (clamped != nullptr) *clamped += n_clamped;
    return rates;
}

PairDephasing pair_dephasing(const Eigen::VectorXd& energies_a, const Eigen::VectorXd& rates_a,
                             const Eigen::VectorXd& energies_b, const Eigen::VectorXd& rates_b) {
    if (energies_a.size() != rates_a.size() || energies_b.size() != rates_b.size()) {
        throw std::invalid_argument("pair_dephasing: energy/rate size mismatch");
    }
    PairDephasing out;
    out.gamma.resize(energies_a.size(), energies_b.size());
    out.resonance.resize(energies_a.size(), energies_b.size());
    for (Eigen::Index a = 0; a < energies_a.size(); ++a) {
        for (Eigen::Index b = 0; b < energies_b.size(); ++b) {
            const double g = 0.5 * (rates_a(a) + rates_b(b));
            out.gamma(a, b) = g;
            out.resonance(a, b) = cplx(energies_a(a) - energies_b(b), -g);
        }
    }
    return out;
}

double DephasingTable::gamma_pair(int ma, Eigen::Index a, int mb, Eigen::Index b) const {
    return 0.5 * (rates.at(static_cast<std::size_t>(ma))(a) + rates.at(static_cast<std::size_t>(mb))(b));
}

cplx DephasingTable::resonance(int ma, Eigen::Index a, int mb, Eigen::Index b) const {
    const double w = energies.at(static_cast<std::size_t>(ma))(a) - energies.at(static_cast<std::size_t>(mb))(b);
    return {w, -gamma_pair(ma, a, mb, b)};
}

std::uint64_t DephasingTable::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto ne = static_cast<std::uint64_t>(energies[k].size());
        fnv1a(h, &ne, sizeof ne);
        fnv1a(h, energies[k].data(), sizeof(double) * static_cast<std::size_t>(energies[k].size()));
        fnv1a(h, rates[k].data(), sizeof(double) * static_cast<std::size_t>(rates[k].size()));
    }
    return h;
}

DephasingTable build_dephasing_table(const PolaritonEigensystem& eig, const PolaritonOperators& ops,
                                     const ExponentialSumCorrelation& bath, const DephasingOptions& options) {
    DephasingTable table;
    for (std::size_t k = 0; k < 3; ++k) {
        table.energies[k] = eig.manifolds[k].energies;
    }
    // An isolated ground state has no pure-dephasing channel.
    table.rates[0] = Eigen::VectorXd::Zero(eig.manifolds[0].energies.size());
    for (std::size_t k = 1; k < 3; ++k) {
        table.rates[k] =
            line_broadening_rates(eig.manifolds[k], ops.coupling_weights[k], bath, options, &table.clamped);
    }
    return table;
}

cplx greens_function(double omega_cm1, cplx z) {
    const cplx d = omega_cm1 - z;
    if (d == cplx(0.0, 0.0)) {
        std::ostringstream os;
        os << "greens_function: exact pole at omega = " << omega_cm1 << " cm^-1 with zero dephasing";
        throw NumericError(os.str());
    }
    return cplx(0.0, 1.0) / d;
}

cplx greens_function(double omega_cm1, const DephasingTable& table, int ma, Eigen::Index a, int mb,
                     Eigen::Index b) {
    return greens_function(omega_cm1, table.resonance(ma, a, mb, b));
}

}  // namespace dqcsim
