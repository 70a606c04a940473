#include "dqcsim/aggregate.hpp"

#include "dqcsim/errors.hpp"

#include <cmath>
#include <sstream>

namespace dqcsim {

std::string_view to_string(SiteClass c) noexcept {
    return c == SiteClass::A ? "A" : "B";
}

double phonon_coupling_scale(SiteClass c) noexcept {
    return c == SiteClass::A ? kPhononCouplingA : kPhononCouplingB;
}

void AggregateSpec::validate() const {
    const auto n = static_cast<Eigen::Index>(sites.size());
    if (n == 0) {
        throw ConfigError("aggregate: at least one site is required");
    }
    if (hopping.rows() != n || hopping.cols() != n) {
        std::ostringstream os;
        os << "aggregate: hopping matrix is " << hopping.rows() << "x" << hopping.cols()
           << " but there are " << n << " sites";
        throw ConfigError(os.str());
    }
    for (Eigen::Index m = 0; m < n; ++m) {
        const Site& s = sites[static_cast<std::size_t>(m)];
        if (!std::isfinite(s.energy_cm1) || !std::isfinite(s.mu10) || !std::isfinite(s.kappa) ||
            !std::isfinite(s.delta_cm1)) {
            throw ConfigError("aggregate: site " + std::to_string(m) + " has a non-finite parameter");
        }
        if (!(s.kappa > 0.0)) {
            throw ConfigError("aggregate: site " + std::to_string(m) + " has kappa <= 0");
        }
        if (hopping(m, m) != 0.0) {
            throw ConfigError("aggregate: hopping diagonal entry " + std::to_string(m) +
                              " must be zero");
        }
    }
    const double scale = std::max(1.0, hopping.cwiseAbs().maxCoeff());
    for (Eigen::Index m = 0; m < n; ++m) {
        for (Eigen::Index k = m + 1; k < n; ++k) {
            if (!std::isfinite(hopping(m, k)) || !std::isfinite(hopping(k, m))) {
                throw ConfigError("aggregate: non-finite hopping element");
            }
            if (std::abs(hopping(m, k) - hopping(k, m)) > 1e-12 * scale) {
                std::ostringstream os;
                os.precision(17);
                os << "aggregate: hopping matrix is not symmetric at (" << m << "," << k
                   << "): " << hopping(m, k) << " vs " << hopping(k, m);
                throw ConfigError(os.str());
            }
        }
    }
}

ExcitonBasis ExcitonBasis::make(std::size_t n_sites) {
    ExcitonBasis b;
    const int n = static_cast<int>(n_sites);
    b.one.reserve(n_sites);
    b.two.reserve(n_sites * (n_sites + 1) / 2);
    for (int m = 0; m < n; ++m) {
        b.one.push_back(m);
    }
    for (int m = 0; m < n; ++m) {
        for (int k = m; k < n; ++k) {
            b.two.emplace_back(m, k);
        }
    }
    return b;
}

std::size_t ExcitonBasis::pair_index(int m, int n) const {
    if (m > n) {
        std::swap(m, n);
    }
    const auto size = static_cast<int>(one.size());
    if (m < 0 || n >= size) {
        throw std::out_of_range("ExcitonBasis::pair_index: site out of range");
    }
    // Row m of the upper triangle starts after sum_{r<m} (size - r) entries.
    const int offset = m * size - m * (m - 1) / 2;
    return static_cast<std::size_t>(offset + (n - m));
}

Eigen::MatrixXd build_one_exciton_hamiltonian(const AggregateSpec& spec) {
    spec.validate();
    const auto n = static_cast<Eigen::Index>(spec.n_sites());
    Eigen::MatrixXd h = spec.hopping;
    for (Eigen::Index m = 0; m < n; ++m) {
        h(m, m) = spec.sites[static_cast<std::size_t>(m)].energy_cm1;
    }
    // Symmetrize exactly so that downstream Hermiticity holds bit for bit.
    return 0.5 * (h + h.transpose());
}

Eigen::MatrixXd build_two_exciton_hamiltonian(const AggregateSpec& spec) {
    spec.validate();
    const ExcitonBasis basis = ExcitonBasis::make(spec.n_sites());
    const auto dim = static_cast<Eigen::Index>(basis.two_size());
    const int n = static_cast<int>(spec.n_sites());
    const double pair_factor = spec.bosonic_pair_factor ? std::sqrt(2.0) : 1.0;
    const Eigen::MatrixXd j = 0.5 * (spec.hopping + spec.hopping.transpose());

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index p = 0; p < dim; ++p) {
        const auto [m, k] = basis.two[static_cast<std::size_t>(p)];
        const Site& sm = spec.sites[static_cast<std::size_t>(m)];
        const Site& sk = spec.sites[static_cast<std::size_t>(k)];
        if (m == k) {
            h(p, p) = 2.0 * sm.energy_cm1 + sm.delta_cm1;
            for (int a = 0; a < n; ++a) {
                if (a == m) continue;
                const auto q = static_cast<Eigen::Index>(basis.pair_index(m, a));
                h(q, p) += pair_factor * j(a, m);
            }
        } else {
            h(p, p) = sm.energy_cm1 + sk.energy_cm1;
            // Hop the exciton on k to a, then the one on m to a.
            for (int a = 0; a < n; ++a) {
                if (a == k) continue;
                const auto q = static_cast<Eigen::Index>(basis.pair_index(m, a));
                h(q, p) += (a == m ? pair_factor : 1.0) * j(a, k);
            }
            for (int a = 0; a < n; ++a) {
                if (a == m) continue;
                const auto q = static_cast<Eigen::Index>(basis.pair_index(a, k));
                h(q, p) += (a == k ? pair_factor : 1.0) * j(a, m);
            }
        }
    }
    return 0.5 * (h + h.transpose());
}

DipoleOperators build_dipole_operators(const AggregateSpec& spec) {
    spec.validate();
    const ExcitonBasis basis = ExcitonBasis::make(spec.n_sites());
    const auto n = static_cast<Eigen::Index>(spec.n_sites());
    const double pair_factor = spec.bosonic_pair_factor ? std::sqrt(2.0) : 1.0;

    DipoleOperators d;
    d.d01.resize(n);
    for (Eigen::Index m = 0; m < n; ++m) {
        d.d01(m) = spec.sites[static_cast<std::size_t>(m)].mu10;
    }
    d.d12 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(basis.two_size()), n);
    for (std::size_t p = 0; p < basis.two_size(); ++p) {
        const auto [m, k] = basis.two[p];
        const auto row = static_cast<Eigen::Index>(p);
        if (m == k) {
            const Site& s = spec.sites[static_cast<std::size_t>(m)];
            d.d12(row, m) = s.kappa * s.mu10 * pair_factor;
        } else {
            d.d12(row, k) = spec.sites[static_cast<std::size_t>(m)].mu10;
            d.d12(row, m) = spec.sites[static_cast<std::size_t>(k)].mu10;
        }
    }
    return d;
}

PhononCouplings build_phonon_couplings(const AggregateSpec& spec) {
    spec.validate();
    const ExcitonBasis basis = ExcitonBasis::make(spec.n_sites());
    PhononCouplings c;
    c.one.resize(static_cast<Eigen::Index>(spec.n_sites()));
    for (std::size_t m = 0; m < spec.n_sites(); ++m) {
        c.one(static_cast<Eigen::Index>(m)) = phonon_coupling_scale(spec.sites[m].site_class);
    }
    c.two.resize(static_cast<Eigen::Index>(basis.two_size()));
    for (std::size_t p = 0; p < basis.two_size(); ++p) {
        const auto [m, k] = basis.two[p];
        c.two(static_cast<Eigen::Index>(p)) = kTwoExcitonPhononFactor * (c.one(m) + c.one(k));
    }
    return c;
}

SiteOperatorSet build_site_operators(const AggregateSpec& spec) {
    spec.validate();
    SiteOperatorSet ops;
    ops.basis = ExcitonBasis::make(spec.n_sites());
    ops.h1 = build_one_exciton_hamiltonian(spec);
    ops.h2 = build_two_exciton_hamiltonian(spec);
    auto dip = build_dipole_operators(spec);
    ops.d01 = std::move(dip.d01);
    ops.d12 = std::move(dip.d12);
    auto ph = build_phonon_couplings(spec);
    ops.phonon_one = std::move(ph.one);
    ops.phonon_two = std::move(ph.two);
    ops.bosonic_pair_factor = spec.bosonic_pair_factor;
    return ops;
}

}  // namespace dqcsim
