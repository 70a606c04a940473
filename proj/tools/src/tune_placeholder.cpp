// dqcsim_tune: uniform site offset that places the brightest two-polariton
// state (field-weighted under the panel-a source) on a target energy.
//
//   dqcsim_tune [aggregate.json] [phonon.json] [target_cm1]
//
// Prints the offset to apply to every site energy; feed it to
// data/make_placeholders.py.

#include <dqcsim/errors.hpp>
#include <dqcsim/protocol.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef DQCSIM_DEFAULT_DATA_DIR
#define DQCSIM_DEFAULT_DATA_DIR "data"
#endif

using namespace dqcsim;

namespace {

MatterModel shifted(const AggregateSpec& base, const SpectralDensity& sd, double offset) {
    AggregateSpec a = base;
    for (auto& s : a.sites) s.energy_cm1 += offset;
    return build_matter_model(a, CavitySpec{}, sd);
}

Eigen::Index brightest(const MatterModel& m, const FieldSource& field) {
    const auto terms = enumerate_pathways(m.operators, m.table, 0.0);
    Eigen::VectorXd score = Eigen::VectorXd::Zero(m.table.energies[2].size());
    for (const auto& t : terms) {
        if (t.pathway != Pathway::a) continue;
        score(t.k) += std::abs(t.weight * four_point_correlation(t.z_kjp.real(), t.z_jp0.real(), t.z_kj.real(),
                                                                 t.z_j0.real(), field));
    }
    Eigen::Index k = 0;
    score.maxCoeff(&k);
    return k;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string data = DQCSIM_DEFAULT_DATA_DIR;
    const std::string agg_path = argc > 1 ? argv[1] : data + "/aggregate_placeholder.json";
    const std::string ph_path = argc > 2 ? argv[2] : data + "/phonon_placeholder.json";
    const double target = argc > 3 ? std::atof(argv[3]) : 30550.0;
    try {
        const AggregateSpec agg = load_aggregate_file(agg_path);
        const SpectralDensity sd = load_phonon_file(ph_path);
        SweepSettings s;
        s.target_cm1 = target;
        const FieldSource field = sweep_panel('a', s).field();

        const Eigen::Index k = brightest(shifted(agg, sd, 0.0), field);
        // E_k is continuous and increasing in the offset (exciton content in [0, 2]).
        double lo = -200.0, hi = 200.0;
        for (int it = 0; it < 64; ++it) {
            const double mid = 0.5 * (lo + hi);
            (shifted(agg, sd, mid).table.energies[2](k) > target ? hi : lo) = mid;
        }
        const MatterModel m = shifted(agg, sd, lo);
        std::printf("state %ld  offset %.9f cm^-1  E = %.6f  brightest after shift: %ld\n", static_cast<long>(k), lo,
                    m.table.energies[2](k), static_cast<long>(brightest(m, field)));
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    }
    return 0;
}
