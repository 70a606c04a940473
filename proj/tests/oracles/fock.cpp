#include "oracles.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

using Occ = std::vector<int>;

// Basis ordering of the library: pairs (m <= n), then |m, 1ph>, then |2ph>.
std::vector<Occ> ordered_states(int n_sites, bool photon, int quanta) {
    const int modes = n_sites + (photon ? 1 : 0);
    std::vector<Occ> out;
    auto empty = [&] { return Occ(static_cast<std::size_t>(modes), 0); };
    if (quanta == 0) {
        out.push_back(empty());
    } else if (quanta == 1) {
        for (int m = 0; m < n_sites; ++m) {
            Occ o = empty();
            o[m] = 1;
            out.push_back(o);
        }
        if (photon) {
            Occ o = empty();
            o[n_sites] = 1;
            out.push_back(o);
        }
    } else if (quanta == 2) {
        for (int m = 0; m < n_sites; ++m) {
            for (int n = m; n < n_sites; ++n) {
                Occ o = empty();
                ++o[m];
                ++o[n];
                out.push_back(o);
            }
        }
        if (photon) {
            for (int m = 0; m < n_sites; ++m) {
                Occ o = empty();
                o[m] = 1;
                o[n_sites] = 1;
                out.push_back(o);
            }
            Occ o = empty();
            o[n_sites] = 2;
            out.push_back(o);
        }
    } else {
        throw std::invalid_argument("oracle: quanta must be 0, 1 or 2");
    }
    return out;
}

// a_i^+ a_j |occ>, returns amplitude and the new state.
double hop(const Occ& occ, int i, int j, Occ& out) {
    out = occ;
    if (out[j] == 0) return 0.0;
    double amp = std::sqrt(static_cast<double>(out[j]));
    --out[j];
    amp *= std::sqrt(static_cast<double>(out[i] + 1));
    ++out[i];
    return amp;
}

}  // namespace

FockBlock bosonic_block(const dqcsim::AggregateSpec& agg, const dqcsim::CavitySpec* cavity, int quanta) {
    const int ns = static_cast<int>(agg.n_sites());
    const bool photon = cavity != nullptr;
    FockBlock b;
    b.occupations = ordered_states(ns, photon, quanta);
    std::map<Occ, int> index;
    for (std::size_t i = 0; i < b.occupations.size(); ++i) index[b.occupations[i]] = static_cast<int>(i);

    const auto n = static_cast<Eigen::Index>(b.occupations.size());
    b.hamiltonian = Eigen::MatrixXd::Zero(n, n);
    Occ tmp;
    for (Eigen::Index col = 0; col < n; ++col) {
        const Occ& occ = b.occupations[static_cast<std::size_t>(col)];
        // number and on-site interaction: E n + (Delta/2) n (n - 1)
        for (int m = 0; m < ns; ++m) {
            const auto& s = agg.sites[static_cast<std::size_t>(m)];
            b.hamiltonian(col, col) += s.energy_cm1 * occ[m] + 0.5 * s.delta_cm1 * occ[m] * (occ[m] - 1);
        }
        if (photon) b.hamiltonian(col, col) += cavity->omega_c_cm1 * occ[ns];
        // hopping J_mn b_m^+ b_n
        for (int m = 0; m < ns; ++m) {
            for (int k = 0; k < ns; ++k) {
                if (m == k || agg.hopping(m, k) == 0.0) continue;
                const double amp = hop(occ, m, k, tmp);
                if (amp != 0.0) b.hamiltonian(index.at(tmp), col) += agg.hopping(m, k) * amp;
            }
        }
        // exchange g (b_m^+ a + a^+ b_m)
        if (photon) {
            for (int m = 0; m < ns; ++m) {
                double amp = hop(occ, m, ns, tmp);
                if (amp != 0.0) b.hamiltonian(index.at(tmp), col) += cavity->coupling_cm1 * amp;
                amp = hop(occ, ns, m, tmp);
                if (amp != 0.0) b.hamiltonian(index.at(tmp), col) += cavity->coupling_cm1 * amp;
            }
        }
    }
    return b;
}

Eigen::MatrixXd bosonic_dipole(const dqcsim::AggregateSpec& agg, const FockBlock& upper, const FockBlock& lower) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < upper.occupations.size(); ++i) index[upper.occupations[i]] = static_cast<int>(i);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(upper.occupations.size()),
                                              static_cast<Eigen::Index>(lower.occupations.size()));
    for (std::size_t col = 0; col < lower.occupations.size(); ++col) {
        const auto& occ = lower.occupations[col];
        for (std::size_t m = 0; m < agg.n_sites(); ++m) {
            auto up = occ;
            ++up[m];
            const auto it = index.find(up);
            if (it == index.end()) continue;
            const auto& s = agg.sites[m];
            double amp = s.mu10 * std::sqrt(static_cast<double>(occ[m] + 1));
            if (occ[m] == 1) amp *= s.kappa;
            d(it->second, static_cast<Eigen::Index>(col)) += amp;
        }
    }
    return d;
}

}  // namespace oracle
