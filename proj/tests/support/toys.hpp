// Small hand-built systems shared by the unit and acceptance tests.

#pragma once

#include <dqcsim/aggregate.hpp>
#include <dqcsim/bath.hpp>
#include <dqcsim/polariton.hpp>

#include <Eigen/Dense>

#include <string>

namespace toys {

inline dqcsim::AggregateSpec two_sites(double e1 = 15000.0, double e2 = 15300.0, double j = 80.0,
                                       double delta = -200.0) {
    dqcsim::AggregateSpec a;
    a.sites = {{e1, 1.0, 1.1, delta, dqcsim::SiteClass::A}, {e2, 0.8, 1.05, delta, dqcsim::SiteClass::B}};
    a.hopping = Eigen::MatrixXd::Zero(2, 2);
    a.hopping(0, 1) = a.hopping(1, 0) = j;
    return a;
}

inline dqcsim::AggregateSpec single_site(double e = 15500.0, double delta = -150.0) {
    dqcsim::AggregateSpec a;
    a.sites = {{e, 1.0, 1.0, delta, dqcsim::SiteClass::A}};
    a.hopping = Eigen::MatrixXd::Zero(1, 1);
    return a;
}

// Chain of n sites with alternating classes and nearest-neighbour hopping.
inline dqcsim::AggregateSpec chain(int n, double e0 = 15000.0, double step = 60.0, double j = 70.0) {
    dqcsim::AggregateSpec a;
    for (int m = 0; m < n; ++m) {
        a.sites.push_back({e0 + step * m, 1.0 - 0.05 * m, 1.0 + 0.03 * m, -120.0 - 10.0 * m,
                           m % 2 ? dqcsim::SiteClass::B : dqcsim::SiteClass::A});
    }
    a.hopping = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m + 1 < n; ++m) a.hopping(m, m + 1) = a.hopping(m + 1, m) = j * (m % 2 ? -0.6 : 1.0);
    return a;
}

// Weak Drude bath with a few Brownian modes.
inline dqcsim::SpectralDensity modest_bath(double temperature = 300.0) {
    dqcsim::SpectralDensity sd;
    sd.lambda0_cm1 = 4.0;
    sd.gamma0_cm1 = 60.0;
    sd.modes = {{150.0, 1.5, 30.0}, {400.0, 2.0, 40.0}, {900.0, 3.0, 50.0}};
    sd.temperature_K = temperature;
    return sd;
}

inline dqcsim::CavitySpec cavity(double omega_c = 15200.0, double g = 60.0) {
    dqcsim::CavitySpec c;
    c.omega_c_cm1 = omega_c;
    c.coupling_cm1 = g;
    return c;
}

inline std::string data_file(const std::string& name) { return std::string(DQCSIM_TEST_DATA_DIR) + "/" + name; }

}  // namespace toys
