#include <doctest.h>

#include "oracles.hpp"
#include "toys.hpp"

#include <dqcsim/dephasing.hpp>
#include <dqcsim/errors.hpp>
#include <dqcsim/units.hpp>

#include <cmath>

using namespace dqcsim;

namespace {

struct Toy {
    SiteOperatorSet ops;
    PolaritonEigensystem eig;
};

Toy make_toy(const AggregateSpec& agg, const CavitySpec& cav) {
    Toy t{build_site_operators(agg), {}};
    t.eig = solve_polaritons(t.ops, cav);
    return t;
}

double max_rel(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return ((a - b).array().abs() / b.array().abs().max(1e-300)).maxCoeff();
}

}  // namespace

TEST_CASE("rates match a secular Redfield tensor") {
    auto sd = toys::modest_bath();
    sd.modes.clear();   // overdamped only
    const auto bath = ExponentialSumCorrelation::assemble(sd);
    const auto full = ExponentialSumCorrelation::assemble(toys::modest_bath());

    const Toy small = make_toy(toys::single_site(15300.0), toys::cavity(15400.0, 80.0));   // 2 and 3 states
    const Toy chain = make_toy(toys::chain(3), toys::cavity(15100.0, 50.0));             // 4 states

    for (const auto reading : {CouplingReading::site_local, CouplingReading::common_bath}) {
        const bool local = reading == CouplingReading::site_local;
        DephasingOptions o;
        o.reading = reading;
        for (const auto* c : {&bath, &full}) {
            for (int n = 1; n <= 2; ++n) {
                const auto w = embed_phonon_weights(small.ops, n);
                const auto& m = small.eig[n];
                const auto ref = oracle::redfield_coherence_rates(m.energies, m.transform, w, *c, local);
                CHECK(max_rel(line_broadening_rates(m, w, *c, o), ref) < 1e-6);
            }
            const auto w = embed_phonon_weights(chain.ops, 1);
            const auto ref = oracle::redfield_coherence_rates(chain.eig[1].energies, chain.eig[1].transform, w, *c, local);
            CHECK(max_rel(line_broadening_rates(chain.eig[1], w, *c, o), ref) < 1e-6);
        }
    }
}

TEST_CASE("rate properties") {
    const Toy toy = make_toy(toys::chain(3), toys::cavity());
    const auto bath = ExponentialSumCorrelation::assemble(toys::modest_bath());
    const auto& m = toy.eig[2];
    const auto w = embed_phonon_weights(toy.ops, 2);

    CHECK(line_broadening_rates(m, Eigen::VectorXd::Zero(w.size()), bath).cwiseAbs().maxCoeff() == 0.0);

    const auto g = line_broadening_rates(m, w, bath);
    const double s = 1.7;
    const auto gs = line_broadening_rates(m, s * w, bath);
    CHECK(max_rel(gs, s * s * g) < 1e-8);

    CHECK_THROWS_AS(line_broadening_rates(m, Eigen::VectorXd::Zero(3), bath), std::invalid_argument);

    // a single state sees only the zero-frequency transform
    PolaritonManifold one;
    one.energies = Eigen::VectorXd::Constant(1, 15000.0);
    one.transform = Eigen::MatrixXcd::Identity(1, 1);
    const auto r = line_broadening_rates(one, Eigen::VectorXd::Constant(1, 1.4), bath);
    CHECK(r(0) == doctest::Approx(bath.at_frequency(0.0).real() * 1.4 * 1.4).epsilon(1e-14));
}

TEST_CASE("dephasing table") {
    const Toy toy = make_toy(toys::chain(3), toys::cavity());
    const auto ops = transform_operators(toy.ops, toy.eig);
    const auto table = build_dephasing_table(toy.eig, ops, ExponentialSumCorrelation::assemble(toys::modest_bath()));
    CHECK(table.rates[0](0) == 0.0);
    for (int n = 0; n < 3; ++n) CHECK(table.rates[n].minCoeff() >= 0.0);
    for (Eigen::Index a = 0; a < table.rates[1].size(); ++a)
        for (Eigen::Index b = 0; b < table.rates[2].size(); ++b)
            CHECK(table.gamma_pair(1, a, 2, b) == table.gamma_pair(2, b, 1, a));
    const auto z = table.resonance(2, 1, 1, 0);
    CHECK(z.real() == doctest::Approx(table.energies[2](1) - table.energies[1](0)));
    CHECK(z.imag() == doctest::Approx(-0.5 * (table.rates[2](1) + table.rates[1](0))));
    CHECK(table.hash() == build_dephasing_table(toy.eig, ops, ExponentialSumCorrelation::assemble(toys::modest_bath())).hash());
}

TEST_CASE("pair dephasing and Green's function") {
    Eigen::VectorXd e(1), ga(1), gb(1);
    e << 100.0;
    ga << 25.0;
    gb << 35.0;
    auto pd = pair_dephasing(e, ga, e, gb);
    CHECK(pd.gamma(0, 0) == 30.0);
    pd = pair_dephasing(e, Eigen::VectorXd::Zero(1), e, Eigen::VectorXd::Zero(1));
    CHECK(pd.gamma(0, 0) == 0.0);

    const std::complex<double> z(1000.0, -30.0);
    const auto on = greens_function(1000.0, z);
    CHECK(on.real() == doctest::Approx(1.0 / 30.0));
    CHECK(std::abs(on.imag()) < 1e-15);

    const double far = 1000.0 + 100.0 * 30.0;
    const auto g_far = greens_function(far, z);
    const std::complex<double> bare = std::complex<double>(0.0, 1.0) / (far - 1000.0);
    CHECK(std::abs(g_far - bare) / std::abs(bare) < 0.01);

    // |G|^2 integrates to pi / gamma, i.e. 1 / (2 gamma) with d omega / (2 pi)
    const double gamma = 30.0;
    double area = 0.0;
    const double h = 0.05;
    for (double w = 1000.0 - 3e5; w <= 1000.0 + 3e5; w += h) area += std::norm(greens_function(w, z)) * h;
    CHECK(area / (2.0 * dqcsim::units::pi) == doctest::Approx(1.0 / (2.0 * gamma)).epsilon(1e-3));

    // half width at half maximum
    CHECK(std::norm(greens_function(1000.0 + gamma, z)) == doctest::Approx(0.5 * std::norm(on)));

    CHECK_THROWS_AS(greens_function(1000.0, std::complex<double>(1000.0, 0.0)), NumericError);
}
