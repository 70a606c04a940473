#include "dqcsim/protocol.hpp"

#include <stdexcept>

namespace dqcsim {

MatterModel build_matter_model(const AggregateSpec& aggregate, const CavitySpec& cavity,
                               const SpectralDensity& bath, const MatterOptions& options) {
    aggregate.validate();
    cavity.validate();
    bath.validate();

    MatterModel m;
    m.aggregate = aggregate;
    m.cavity = cavity;
    m.bath = bath;
    m.options = options;
    m.site_ops = build_site_operators(aggregate);
    m.eigensystem = solve_polaritons(m.site_ops, cavity, options.jacobi);
    m.operators = transform_operators(m.site_ops, m.eigensystem, options.photon_sector);
    m.correlation = ExponentialSumCorrelation::assemble(bath);
    m.table = build_dephasing_table(m.eigensystem, m.operators, m.correlation, options.dephasing);
    return m;
}

BiphotonField PanelSpec::field() const {
    BiphotonField f;
    f.excitation = BiphotonSource::with_centers(omega_a1, omega_b1, pump_width_fs, t_ent_fs);
    f.excitation.pump_cm1 = pump_cm1;
    f.projection = BiphotonSource::with_centers(omega_a2, omega_b2, pump_width_fs, t_ent_fs);
    f.projection.pump_cm1 = pump_cm1;
    return f;
}

PanelSpec sweep_panel(char id, const SweepSettings& s) {
    PanelSpec p;
    p.id = id;
    p.pump_cm1 = s.target_cm1;
    p.pump_width_fs = s.pump_width_fs;
    p.omega_a2 = s.target_cm1 - s.omega_b2;
    p.omega_b2 = s.omega_b2;
    p.sector = "middle";
    p.omega_a1 = s.omega_a1;
    p.omega_b1 = s.omega_b1;

    const auto pick = [](const std::vector<double>& v, std::size_t i) {
        if (i >= v.size()) throw std::invalid_argument("sweep_panel: entanglement-time sweep too short");
        return v[i];
    };
    switch (id) {
        case 'a': case 'b': case 'c':
            p.t_ent_fs = pick(s.upper_t_ent_fs, static_cast<std::size_t>(id - 'a'));
            break;
        case 'd': case 'e':
            p.t_ent_fs = pick(s.middle_t_ent_fs, static_cast<std::size_t>(id - 'd'));
            break;
        case 'f':
            p.sector = "lower";
            p.omega_a1 = s.lower_omega_a1;
            p.omega_b1 = std::isnan(s.lower_omega_b1) ? s.target_cm1 - s.lower_omega_a1 : s.lower_omega_b1;
            p.t_ent_fs = s.lower_t_ent_fs;
            break;
        default:
            throw std::invalid_argument(std::string("sweep_panel: unknown panel '") + id + "'");
    }
    return p;
}

std::vector<PanelSpec> sweep_panels(const SweepSettings& settings) {
    std::vector<PanelSpec> out;
    for (char id : {'a', 'b', 'c', 'd', 'e', 'f'}) out.push_back(sweep_panel(id, settings));
    return out;
}

GridSpec resolve_grid(const MatterModel& model, const std::vector<PathwayTerm>& terms, const FieldSource& field,
                      const ProtocolGrid& grid) {
    const double omega1 = std::isnan(grid.omega1) ? dominant_omega1(terms, field) : grid.omega1;
    GridSpec g = default_grid(model.table, omega1, grid.n);
    if (!std::isnan(grid.omega2_min)) g.omega2_min = grid.omega2_min;
    if (!std::isnan(grid.omega2_max)) g.omega2_max = grid.omega2_max;
    if (!std::isnan(grid.omega3_min)) g.omega3_min = grid.omega3_min;
    if (!std::isnan(grid.omega3_max)) g.omega3_max = grid.omega3_max;
    return g;
}

std::vector<PanelResult> run_panel_sweep(const MatterModel& model, const std::vector<PanelSpec>& panels,
                                              const ProtocolGrid& grid) {
    const auto terms = enumerate_pathways(model.operators, model.table, grid.threshold);
    std::vector<PanelResult> out;
    out.reserve(panels.size());
    for (const auto& p : panels) {
        const FieldSource field = p.field();
        PanelResult r;
        r.panel = p;
        r.grid = evaluate_spectrum(terms, field, resolve_grid(model, terms, field, grid), grid.signal);
        r.table_hash = model.table.hash();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace dqcsim
