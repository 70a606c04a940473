// protocol.hpp: matter pipeline assembly and the six-panel entangled-source
// sweep (excitation sector and entanglement time).

#pragma once

#include "dqcsim/aggregate.hpp"
#include "dqcsim/bath.hpp"
#include "dqcsim/biphoton.hpp"
#include "dqcsim/dephasing.hpp"
#include "dqcsim/polariton.hpp"
#include "dqcsim/signal.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace dqcsim {

struct MatterOptions {
    PhotonSectorDipoles photon_sector = PhotonSectorDipoles::spectator;
    DephasingOptions dephasing;
    JacobiOptions jacobi;
};

// Everything that depends only on the aggregate, cavity and bath.
struct MatterModel {
    AggregateSpec aggregate;
    CavitySpec cavity;
    SpectralDensity bath;
    MatterOptions options;

    SiteOperatorSet site_ops;
    PolaritonEigensystem eigensystem;
    PolaritonOperators operators;
    ExponentialSumCorrelation correlation;
    DephasingTable table;
};

MatterModel build_matter_model(const AggregateSpec& aggregate, const CavitySpec& cavity,
                               const SpectralDensity& bath, const MatterOptions& options = {});

struct PanelSpec {
    char id = 'a';
    std::string sector;           // "middle" or "lower" one-polariton excitation sector
    double pump_cm1 = 30550.0;    // pump of both pairs, placed on the target
    double omega_a1 = 15500.0;
    double omega_b1 = 14500.0;
    double omega_a2 = 14750.0;
    double omega_b2 = 15800.0;
    double t_ent_fs = 60.0;
    double pump_width_fs = 20.0;

    BiphotonField field() const;
};

struct SweepSettings {
    double target_cm1 = 30550.0;
    double pump_width_fs = 20.0;
    double omega_a1 = 15500.0;
    double omega_b1 = 14500.0;
    double omega_b2 = 15800.0;        // omega_a2 = target - omega_b2
    double lower_omega_a1 = 15150.0;
    double lower_omega_b1 = NAN;      // NaN: target - lower_omega_a1
    double lower_t_ent_fs = 10.0;
    std::vector<double> upper_t_ent_fs{60.0, 50.0, 40.0};
    std::vector<double> middle_t_ent_fs{40.0, 10.0};
};

// Panels a-c: middle sector, upper entanglement times; d, e: middle sector,
// second sweep; f: lower sector.
std::vector<PanelSpec> sweep_panels(const SweepSettings& settings = {});
PanelSpec sweep_panel(char id, const SweepSettings& settings = {});

struct ProtocolGrid {
    int n = 256;
    double omega1 = NAN;                 // NaN: dominant one-polariton resonance per panel
    double omega2_min = NAN, omega2_max = NAN;   // NaN: default window
    double omega3_min = NAN, omega3_max = NAN;
    double threshold = 0.0;
    SignalOptions signal;
};

struct PanelResult {
    PanelSpec panel;
    SpectrumGrid grid;
    std::uint64_t table_hash = 0;
};

// Fills the grid defaults from the model and the panel field.
GridSpec resolve_grid(const MatterModel& model, const std::vector<PathwayTerm>& terms, const FieldSource& field,
                      const ProtocolGrid& grid);

// Evaluates every panel against the same matter model; the pathway list is
// enumerated once.
std::vector<PanelResult> run_panel_sweep(const MatterModel& model, const std::vector<PanelSpec>& panels,
                                              const ProtocolGrid& grid = {});

}  // namespace dqcsim
