#include <doctest.h>

#include "oracles.hpp"
#include "toys.hpp"

#include <dqcsim/aggregate.hpp>
#include <dqcsim/errors.hpp>

#include <cmath>

using namespace dqcsim;

TEST_CASE("one-exciton block places energies and hoppings") {
    CHECK(build_one_exciton_hamiltonian(toys::single_site(15500.0))(0, 0) == 15500.0);

    auto a = toys::two_sites(15500.0, 15300.0, 100.0);
    const Eigen::MatrixXd h = build_one_exciton_hamiltonian(a);
    CHECK(h(0, 0) == 15500.0);
    CHECK(h(1, 1) == 15300.0);
    CHECK(h(0, 1) == 100.0);
    CHECK(h(1, 0) == 100.0);

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const double split = std::sqrt(100.0 * 100.0 + 100.0 * 100.0);
    CHECK(es.eigenvalues()(0) == doctest::Approx(15400.0 - split).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) == doctest::Approx(15400.0 + split).epsilon(1e-12));
}

TEST_CASE("two-exciton block") {
    SUBCASE("local double") {
        const auto h = build_two_exciton_hamiltonian(toys::single_site(15500.0, -100.0));
        REQUIRE(h.rows() == 1);
        CHECK(h(0, 0) == 30900.0);
    }
    SUBCASE("non-interacting limit") {
        const auto a = toys::two_sites(15500.0, 15300.0, 0.0, 0.0);
        const auto h = build_two_exciton_hamiltonian(a);
        // pairs (0,0), (0,1), (1,1)
        CHECK(h(0, 0) == 31000.0);
        CHECK(h(1, 1) == 30800.0);
        CHECK(h(2, 2) == 30600.0);
        CHECK((h - Eigen::MatrixXd(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("bosonic factor on hopping into a local double") {
        const auto a = toys::two_sites(15500.0, 15300.0, 100.0, 0.0);
        const auto h = build_two_exciton_hamiltonian(a);
        CHECK(h(1, 0) == doctest::Approx(std::sqrt(2.0) * 100.0).epsilon(1e-14));
        CHECK(h(1, 2) == doctest::Approx(std::sqrt(2.0) * 100.0).epsilon(1e-14));
    }
    SUBCASE("sums of one-exciton eigenvalues when J and Delta vanish") {
        auto a = toys::chain(4, 15000.0, 60.0, 0.0);
        for (auto& s : a.sites) s.delta_cm1 = 0.0;
        const Eigen::VectorXd e1 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(build_one_exciton_hamiltonian(a)).eigenvalues();
        const Eigen::VectorXd e2 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(build_two_exciton_hamiltonian(a)).eigenvalues();
        for (Eigen::Index k = 0; k < e2.size(); ++k) {
            double best = 1e9;
            for (Eigen::Index i = 0; i < e1.size(); ++i)
                for (Eigen::Index j = i; j < e1.size(); ++j) best = std::min(best, std::abs(e2(k) - e1(i) - e1(j)));
            CHECK(best < 1e-9);
        }
    }
    SUBCASE("matches a bosonic occupation-number construction") {
        for (int n = 1; n <= 3; ++n) {
            const auto a = toys::chain(n);
            const auto ref = oracle::bosonic_block(a, nullptr, 2);
            CHECK((build_two_exciton_hamiltonian(a) - ref.hamiltonian).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
    SUBCASE("Hermitian and sized n(n+1)/2") {
        const auto a = toys::chain(14);
        const auto h1 = build_one_exciton_hamiltonian(a);
        const auto h2 = build_two_exciton_hamiltonian(a);
        CHECK(h1.rows() == 14);
        CHECK(h2.rows() == 105);
        CHECK((h2 - h2.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("dipoles") {
    auto one = toys::single_site();
    one.sites[0].kappa = 0.7;
    const auto d = build_dipole_operators(one);
    CHECK(d.d01(0) == 1.0);
    CHECK(d.d12(0, 0) == doctest::Approx(0.7 * std::sqrt(2.0)).epsilon(1e-15));

    auto two = toys::two_sites();
    two.sites[0].mu10 = two.sites[1].mu10 = 1.0;
    const auto d2 = build_dipole_operators(two);
    CHECK(d2.d12(1, 0) == 1.0);
    CHECK(d2.d12(1, 1) == 1.0);

    const auto c = toys::chain(5);
    const auto dc = build_dipole_operators(c);
    const auto basis = ExcitonBasis::make(5);
    for (std::size_t p = 0; p < basis.two_size(); ++p) {
        const auto [m, n] = basis.two[p];
        if (m == n) continue;
        const double mu_m = c.sites[static_cast<std::size_t>(m)].mu10;
        const double mu_n = c.sites[static_cast<std::size_t>(n)].mu10;
        CHECK(dc.d12.row(static_cast<Eigen::Index>(p)).squaredNorm() == doctest::Approx(mu_m * mu_m + mu_n * mu_n));
    }
    const auto fock = oracle::bosonic_dipole(c, oracle::bosonic_block(c, nullptr, 2), oracle::bosonic_block(c, nullptr, 1));
    CHECK((dc.d12 - fock).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("phonon weights by class") {
    auto a = toys::two_sites();   // A, B
    const auto w = build_phonon_couplings(a);
    CHECK(w.one(0) == 1.0);
    CHECK(w.one(1) == 1.4);
    CHECK(w.two(0) == doctest::Approx(1.2));
    CHECK(w.two(1) == doctest::Approx(1.44));
    CHECK(w.two(2) == doctest::Approx(0.6 * 2.8));
}

TEST_CASE("aggregate validation and JSON round trip") {
    auto a = toys::chain(3);
    const auto back = parse_aggregate_json(aggregate_to_json(a));
    CHECK(back.n_sites() == 3);
    CHECK((back.hopping - a.hopping).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.sites[2].energy_cm1 == a.sites[2].energy_cm1);

    a.hopping(0, 1) = 5.0;   // asymmetric
    CHECK_THROWS_AS(a.validate(), ConfigError);
    CHECK_THROWS_AS(parse_aggregate_json(R"({"sites": [], "hopping": [], "bogus": 1})"), ConfigError);

    const auto shipped = load_aggregate_file(toys::data_file("aggregate_placeholder.json"));
    CHECK(shipped.n_sites() == 14);
}
