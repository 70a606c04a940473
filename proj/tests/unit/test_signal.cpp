#include <doctest.h>

#include "toys.hpp"

#include <dqcsim/errors.hpp>
#include <dqcsim/protocol.hpp>
#include <dqcsim/signal.hpp>

#include <cmath>
#include <cstring>

using namespace dqcsim;

namespace {

DephasingTable uniform_table(const PolaritonEigensystem& eig, double g1, double g2) {
    DephasingTable t;
    for (int n = 0; n < 3; ++n) t.energies[n] = eig[n].energies;
    t.rates[0] = Eigen::VectorXd::Zero(1);
    t.rates[1] = Eigen::VectorXd::Constant(eig[1].energies.size(), g1);
    t.rates[2] = Eigen::VectorXd::Constant(eig[2].energies.size(), g2);
    return t;
}

GridSpec small_grid(const DephasingTable& table, int n = 48) {
    return default_grid(table, table.energies[1](0), n, 300.0);
}

double max_abs_signal(const AggregateSpec& agg) {
    const auto ops = build_site_operators(agg);
    const auto eig = solve_polaritons(ops, toys::cavity(25000.0, 0.0));
    const auto po = transform_operators(ops, eig);
    // No two-manifold width: under pair averaging z_kj' then carries the same
    // width as z_j'0, which is what an ideal harmonic ladder requires.
    const auto table = uniform_table(eig, 8.0, 0.0);
    const auto terms = enumerate_pathways(po, table);
    SignalOptions o;
    o.normalize = false;
    const double w1 = table.energies[1](eig[1].energies.size() - 2);   // bright exciton, below the photon
    GridSpec g = default_grid(table, w1, 97, 400.0);
    g.omega2_max = 31500.0;
    g.omega3_max = 15800.0;
    return evaluate_spectrum(terms, FieldSource{FlatField{}}, g, o).modulus().maxCoeff();
}

}  // namespace

TEST_CASE("pathway enumeration") {
    SUBCASE("single site with a cavity") {
        const auto m = build_matter_model(toys::single_site(), toys::cavity(15400.0, 100.0), toys::modest_bath());
        const auto terms = enumerate_pathways(m.operators, m.table);
        CHECK(terms.size() == 2u * 2u * 3u * 2u);   // 12 triples, two pathways each
        CHECK(terms[0].pathway == Pathway::a);
        CHECK(terms[1].pathway == Pathway::b);
        CHECK(terms[0].weight == terms[1].weight);
    }
    SUBCASE("threshold one keeps the strongest triple") {
        const auto m = build_matter_model(toys::chain(3), toys::cavity(), toys::modest_bath());
        const auto all = enumerate_pathways(m.operators, m.table);
        double wmax = 0.0;
        for (const auto& t : all) wmax = std::max(wmax, std::abs(t.weight));
        const auto top = enumerate_pathways(m.operators, m.table, 1.0);
        REQUIRE(top.size() == 2u);
        CHECK(std::abs(top[0].weight) == wmax);
        CHECK_THROWS_AS(enumerate_pathways(m.operators, m.table, 1.5), std::invalid_argument);
    }
    SUBCASE("resonances follow the table") {
        const auto m = build_matter_model(toys::two_sites(), toys::cavity(), toys::modest_bath());
        for (const auto& t : enumerate_pathways(m.operators, m.table)) {
            CHECK(t.z_kjp == m.table.resonance(2, t.k, 1, t.jp));
            CHECK(t.z_j0.imag() < 0.0);
            CHECK(t.omega3_resonance() == (t.pathway == Pathway::a ? t.z_jp0 : t.z_kjp));
        }
        const auto swapped = with_swapped_omega3(enumerate_pathways(m.operators, m.table));
        CHECK(swapped[0].omega3_resonance() == swapped[0].z_kjp);
    }
    SUBCASE("mismatched inputs") {
        const auto m = build_matter_model(toys::two_sites(), toys::cavity(), toys::modest_bath());
        auto table = m.table;
        table.energies[2] = Eigen::VectorXd::Zero(2);
        CHECK_THROWS_AS(enumerate_pathways(m.operators, table), std::invalid_argument);
    }
}

TEST_CASE("single-term Lorentzian along Omega2") {
    PathwayTerm t;
    t.weight = 1.0;
    t.z_j0 = {15000.0, -10.0};
    t.z_jp0 = {15000.0, -10.0};
    t.z_k0 = {30100.0, -25.0};
    t.z_kjp = t.z_kj = {15100.0, -17.5};
    const std::vector<PathwayTerm> terms{t};
    const FieldSource flat = FlatField{};
    const double peak = std::abs(evaluate_point(terms, flat, 15000.0, 30100.0, 15000.0));
    const double half = std::abs(evaluate_point(terms, flat, 15000.0, 30125.0, 15000.0));
    CHECK(half * half == doctest::Approx(0.5 * peak * peak).epsilon(1e-12));
    CHECK(std::abs(evaluate_point(terms, flat, 15000.0, 30075.0, 15000.0)) == doctest::Approx(half).epsilon(1e-12));

    // (Omega - z)^-1 = -i G(Omega), termwise
    const double o3 = 15020.0, o2 = 30090.0, o1 = 14990.0;
    const auto g = -std::complex<double>(0.0, 1.0);
    const auto expected = g * greens_function(o3, t.z_jp0) * g * greens_function(o2, t.z_k0) * g *
                          greens_function(o1, t.z_j0);
    CHECK(std::abs(evaluate_point(terms, flat, o3, o2, o1) - expected) < 1e-14 * std::abs(expected));

    auto pole = t;
    pole.z_k0 = {30100.0, 0.0};
    CHECK_THROWS_AS(evaluate_point({pole}, flat, 15000.0, 30100.0, 15000.0), NumericError);
}

TEST_CASE("grid evaluation") {
    const auto m = build_matter_model(toys::chain(3), toys::cavity(), toys::modest_bath());
    const auto terms = enumerate_pathways(m.operators, m.table);
    const FieldSource field = BiphotonField{BiphotonSource::with_centers(15150.0, 15150.0, 20.0, 10.0),
                                            BiphotonSource::with_centers(15100.0, 15200.0, 20.0, 10.0)};
    const GridSpec g = small_grid(m.table);

    SUBCASE("factorized and direct sums agree") {
        SignalOptions o;
        o.normalize = false;
        const auto fast = evaluate_spectrum(terms, field, g, o);
        const auto slow = evaluate_spectrum_direct(terms, field, g, o);
        const double scale = slow.values.cwiseAbs().maxCoeff();
        CHECK((fast.values - slow.values).cwiseAbs().maxCoeff() / scale < 1e-12);
        const auto point = evaluate_point(terms, field, fast.omega3(11), fast.omega2(7), fast.omega1);
        CHECK(std::abs(fast.values(7, 11) - point) < 1e-12 * scale);
    }
    SUBCASE("normalization") {
        const auto s = evaluate_spectrum(terms, field, g);
        CHECK(s.modulus().maxCoeff() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(s.scale > 0.0);
        CHECK(s.n_terms == terms.size());
    }
    SUBCASE("linear in the weights") {
        auto doubled = terms;
        for (auto& t : doubled) t.weight *= 2.0;
        SignalOptions o;
        o.normalize = false;
        const auto a = evaluate_spectrum(terms, field, g, o);
        const auto b = evaluate_spectrum(doubled, field, g, o);
        CHECK((b.values - 2.0 * a.values).cwiseAbs().maxCoeff() < 1e-13 * a.values.cwiseAbs().maxCoeff());
        const auto an = evaluate_spectrum(terms, field, g);
        const auto bn = evaluate_spectrum(doubled, field, g);
        CHECK((an.values - bn.values).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(bn.scale == doctest::Approx(0.5 * an.scale));
    }
    SUBCASE("bounded by the smallest width") {
        SignalOptions o;
        o.normalize = false;
        const auto s = evaluate_spectrum(terms, FieldSource{FlatField{}}, g, o);
        double wsum = 0.0, gmin = 1e300;
        for (const auto& t : terms) {
            wsum += std::abs(t.weight);
            gmin = std::min({gmin, -t.z_j0.imag(), -t.z_k0.imag(), -t.omega3_resonance().imag()});
        }
        CHECK(s.modulus().maxCoeff() <= wsum / (gmin * gmin * gmin));
    }
    SUBCASE("byte-identical across worker counts") {
        SignalOptions o;
        o.workers = 1;
        const auto ref = evaluate_spectrum(terms, field, g, o);
        for (int w : {2, 4, 8, 13}) {
            o.workers = w;
            const auto s = evaluate_spectrum(terms, field, g, o);
            CHECK(std::memcmp(ref.values.data(), s.values.data(), sizeof(std::complex<double>) * ref.values.size()) == 0);
            CHECK(s.scale == ref.scale);
        }
    }
    SUBCASE("invalid grids") {
        GridSpec bad = g;
        bad.n2 = 0;
        CHECK_THROWS(evaluate_spectrum(terms, field, bad));
    }
}

TEST_CASE("harmonic pathways cancel") {
    auto harmonic = toys::two_sites(15300.0, 15300.0, 80.0, 0.0);
    for (auto& s : harmonic.sites) {
        s.kappa = 1.0;
        s.mu10 = 1.0;
        s.site_class = SiteClass::A;
    }
    auto anharmonic = harmonic;
    for (auto& s : anharmonic.sites) s.delta_cm1 = -200.0;
    const double h = max_abs_signal(harmonic);
    const double a = max_abs_signal(anharmonic);
    MESSAGE("harmonic " << h << " anharmonic " << a);
    CHECK(h < 0.1 * a);
}

TEST_CASE("peak finding") {
    Eigen::MatrixXd layer = Eigen::MatrixXd::Zero(7, 7);
    layer(2, 2) = 1.0;
    layer(4, 5) = 0.5;
    layer(5, 1) = 0.05;
    layer(0, 3) = 2.0;   // edge, ignored
    const Eigen::VectorXd ax = Eigen::VectorXd::LinSpaced(7, 0.0, 6.0);
    const auto peaks = local_maxima(layer, ax, ax, 0.1);
    REQUIRE(peaks.size() == 2u);
    CHECK(peaks[0].i2 == 2);
    CHECK(peaks[1].i3 == 5);

    SpectrumGrid g;
    g.omega2 = Eigen::VectorXd::LinSpaced(7, 30000.0, 30600.0);
    g.omega3 = Eigen::VectorXd::LinSpaced(7, 15000.0, 15600.0);
    g.omega1 = 15200.0;
    g.values = layer.cast<std::complex<double>>();
    // (2,2): O3 = 15200 on the diagonal; (4,5): O3 = 15500, O2 - O1 = 15200
    CHECK(count_off_diagonal_maxima(g, 0.1, 50.0) == 1u);
}
