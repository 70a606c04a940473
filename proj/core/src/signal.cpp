#include "dqcsim/signal.hpp"

#include "dqcsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dqcsim {

namespace {

using cplx = std::complex<double>;

// Per-term data reused at every grid point.
struct PreparedTerm {
    cplx coeff;   // sign * w * D / (O1 - z_j0)
    cplx z3;
    cplx z2;
};

cplx field_factor(const PathwayTerm& t, const FieldSource& source) {
    return four_point_correlation(t.z_kjp.real(), t.z_jp0.real(), t.z_kj.real(), t.z_j0.real(), source);
}

void require_off_pole(double omega, cplx z, const char* axis) {
    if (z.imag() == 0.0 && omega == z.real()) {
        std::ostringstream os;
        os << "signal: exact real pole on the " << axis << " axis at " << omega
           << " cm^-1 (zero dephasing for this resonance)";
        throw NumericError(os.str());
    }
}

void check_grid(const GridSpec& g) {
    if (g.n2 < 1 || g.n3 < 1) {
        throw std::invalid_argument("signal: grid needs at least one point per axis");
    }
    if (!std::isfinite(g.omega1) || !std::isfinite(g.omega2_min) || !std::isfinite(g.omega2_max) ||
        !std::isfinite(g.omega3_min) || !std::isfinite(g.omega3_max)) {
        throw std::invalid_argument("signal: non-finite grid window");
    }
}

Eigen::VectorXd axis(double lo, double hi, int n) {
    if (n == 1) return Eigen::VectorXd::Constant(1, lo);
    return Eigen::VectorXd::LinSpaced(n, lo, hi);
}

SpectrumGrid empty_grid(const GridSpec& g, std::size_t n_terms) {
    SpectrumGrid out;
    out.omega1 = g.omega1;
    out.omega2 = axis(g.omega2_min, g.omega2_max, g.n2);
    out.omega3 = axis(g.omega3_min, g.omega3_max, g.n3);
    out.values = Eigen::MatrixXcd::Zero(g.n2, g.n3);
    out.n_terms = n_terms;
    return out;
}

std::vector<PreparedTerm> prepare(const std::vector<PathwayTerm>& terms, const FieldSource& source,
                                  const SpectrumGrid& grid, double relative_sign) {
    std::vector<PreparedTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        require_off_pole(grid.omega1, t.z_j0, "Omega_1");
        for (Eigen::Index i = 0; i < grid.omega2.size(); ++i) require_off_pole(grid.omega2(i), t.z_k0, "Omega_2");
        const cplx z3 = t.omega3_resonance();
        for (Eigen::Index i = 0; i < grid.omega3.size(); ++i) require_off_pole(grid.omega3(i), z3, "Omega_3");

        const double sign = t.pathway == Pathway::b ? relative_sign : 1.0;
        const cplx coeff = sign * t.weight * field_factor(t, source) / (grid.omega1 - t.z_j0);
        out.push_back({coeff, z3, t.z_k0});
    }
    return out;
}

void finish(SpectrumGrid& grid, bool normalize) {
    if (!grid.values.allFinite()) {
        throw NumericError("signal: non-finite value on the spectrum grid");
    }
    grid.scale = 1.0;
    if (normalize && grid.values.size() > 0) {
        const double peak = grid.values.cwiseAbs().maxCoeff();
        if (peak > 0.0) grid.scale = 1.0 / peak;
    }
    grid.values *= grid.scale;
}

// Runs body(i) for i in [0, n) on up to `workers` threads, static blocks.
template <class F>
void parallel_for(Eigen::Index n, int workers, F body) {
    const Eigen::Index nw = std::clamp<Eigen::Index>(workers, 1, std::max<Eigen::Index>(n, 1));
    if (nw == 1) {
        for (Eigen::Index i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    const Eigen::Index block = (n + nw - 1) / nw;
    for (Eigen::Index w = 0; w < nw; ++w) {
        const Eigen::Index lo = w * block;
        const Eigen::Index hi = std::min(n, lo + block);
        pool.emplace_back([lo, hi, &body] {
            for (Eigen::Index i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<PathwayTerm> enumerate_pathways(const PolaritonOperators& ops, const DephasingTable& table,
                                            double threshold) {
    const Eigen::Index n1 = ops.mu_01.size();
    const Eigen::Index n2 = ops.mu_12.rows();
    if (n1 == 0 || n2 == 0 || ops.mu_12.cols() == 0) {
        throw std::invalid_argument("enumerate_pathways: empty dipole operators");
    }
    if (ops.mu_12.cols() != n1 || table.energies[1].size() != n1 || table.energies[2].size() != n2 ||
        table.energies[0].size() != 1) {
        throw std::invalid_argument("enumerate_pathways: dipole operators do not match the dephasing table");
    }
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("enumerate_pathways: threshold must lie in [0, 1]");
    }

    // Loop products mu_{0j'} mu_{j'k} mu_{kj} mu_{j0}; the one->two dipole
    // operator is Hermitian so mu_{j'k} = conj(mu_{kj'}).
    auto weight = [&](Eigen::Index j, Eigen::Index k, Eigen::Index jp) {
        return std::conj(ops.mu_01(jp)) * std::conj(ops.mu_12(k, jp)) * ops.mu_12(k, j) * ops.mu_01(j);
    };
    double wmax = 0.0;
    for (Eigen::Index j = 0; j < n1; ++j)
        for (Eigen::Index k = 0; k < n2; ++k)
            for (Eigen::Index jp = 0; jp < n1; ++jp) wmax = std::max(wmax, std::abs(weight(j, k, jp)));
    const double cut = threshold * wmax;

    std::vector<PathwayTerm> out;
    out.reserve(static_cast<std::size_t>(2 * n1 * n2 * n1));
    for (Eigen::Index j = 0; j < n1; ++j) {
        for (Eigen::Index k = 0; k < n2; ++k) {
            for (Eigen::Index jp = 0; jp < n1; ++jp) {
                const cplx w = weight(j, k, jp);
                if (std::abs(w) < cut) continue;
                PathwayTerm t;
                t.j = static_cast<int>(j);
                t.k = static_cast<int>(k);
                t.jp = static_cast<int>(jp);
                t.weight = w;
                t.z_j0 = table.resonance(1, j, 0, 0);
                t.z_k0 = table.resonance(2, k, 0, 0);
                t.z_jp0 = table.resonance(1, jp, 0, 0);
                t.z_kjp = table.resonance(2, k, 1, jp);
                t.z_kj = table.resonance(2, k, 1, j);
                t.pathway = Pathway::a;
                out.push_back(t);
                t.pathway = Pathway::b;
                out.push_back(t);
            }
        }
    }
    return out;
}

std::vector<PathwayTerm> with_swapped_omega3(std::vector<PathwayTerm> terms) {
    for (auto& t : terms) t.swapped_omega3 = !t.swapped_omega3;
    return terms;
}

GridSpec default_grid(const DephasingTable& table, double omega1, int n, double padding_cm1) {
    GridSpec g;
    g.omega1 = omega1;
    g.n2 = n;
    g.n3 = n;
    g.omega2_min = table.energies[2].minCoeff() - padding_cm1;
    g.omega2_max = table.energies[2].maxCoeff() + padding_cm1;
    g.omega3_min = table.energies[1].minCoeff() - padding_cm1;
    g.omega3_max = table.energies[1].maxCoeff() + padding_cm1;
    return g;
}

SpectrumGrid evaluate_spectrum(const std::vector<PathwayTerm>& terms, const FieldSource& source,
                               const GridSpec& spec, const SignalOptions& options) {
    check_grid(spec);
    SpectrumGrid grid = empty_grid(spec, terms.size());
    const auto prepared = prepare(terms, source, grid, options.relative_sign);

    // Group by two-polariton state, keeping enumeration order inside a group.
    std::map<int, std::vector<std::size_t>> by_k;
    for (std::size_t i = 0; i < terms.size(); ++i) by_k[terms[i].k].push_back(i);
    std::vector<const std::vector<std::size_t>*> groups;
    std::vector<cplx> z2;
    for (const auto& [k, idx] : by_k) {
        groups.push_back(&idx);
        z2.push_back(prepared[idx.front()].z2);
    }
    const auto ng = static_cast<Eigen::Index>(groups.size());
    const Eigen::Index n2 = grid.omega2.size();
    const Eigen::Index n3 = grid.omega3.size();

    // A(g, i3) = sum_{t in g} coeff_t / (O3 - z3_t)
    Eigen::MatrixXcd a(ng, n3);
    parallel_for(ng, options.workers, [&](Eigen::Index g) {
        for (Eigen::Index i3 = 0; i3 < n3; ++i3) {
            const double o3 = grid.omega3(i3);
            cplx acc(0.0, 0.0);
            for (std::size_t i : *groups[static_cast<std::size_t>(g)]) {
                acc += prepared[i].coeff / (o3 - prepared[i].z3);
            }
            a(g, i3) = acc;
        }
    });

    // S(i2, i3) = sum_g A(g, i3) / (O2 - z_k0)
    parallel_for(n2, options.workers, [&](Eigen::Index i2) {
        const double o2 = grid.omega2(i2);
        for (Eigen::Index i3 = 0; i3 < n3; ++i3) {
            cplx acc(0.0, 0.0);
            for (Eigen::Index g = 0; g < ng; ++g) acc += a(g, i3) / (o2 - z2[static_cast<std::size_t>(g)]);
            grid.values(i2, i3) = acc;
        }
    });

    finish(grid, options.normalize);
    return grid;
}

SpectrumGrid evaluate_spectrum_direct(const std::vector<PathwayTerm>& terms, const FieldSource& source,
                                      const GridSpec& spec, const SignalOptions& options) {
    check_grid(spec);
    SpectrumGrid grid = empty_grid(spec, terms.size());
    for (Eigen::Index i2 = 0; i2 < grid.omega2.size(); ++i2) {
        for (Eigen::Index i3 = 0; i3 < grid.omega3.size(); ++i3) {
            grid.values(i2, i3) = evaluate_point(terms, source, grid.omega3(i3), grid.omega2(i2), grid.omega1,
                                                 options.relative_sign);
        }
    }
    finish(grid, options.normalize);
    return grid;
}

cplx evaluate_point(const std::vector<PathwayTerm>& terms, const FieldSource& source, double omega3,
                    double omega2, double omega1, double relative_sign) {
    cplx sum(0.0, 0.0);
    for (const auto& t : terms) {
        const cplx z3 = t.omega3_resonance();
        require_off_pole(omega3, z3, "Omega_3");
        require_off_pole(omega2, t.z_k0, "Omega_2");
        require_off_pole(omega1, t.z_j0, "Omega_1");
        const double sign = t.pathway == Pathway::b ? relative_sign : 1.0;
        const cplx denom = (omega3 - z3) * (omega2 - t.z_k0) * (omega1 - t.z_j0);
        sum += sign * t.weight * field_factor(t, source) / denom;
    }
    return sum;
}

double dominant_omega1(const std::vector<PathwayTerm>& terms, const FieldSource& source) {
    if (terms.empty()) {
        throw std::invalid_argument("dominant_omega1: no pathway terms");
    }
    std::map<int, double> score;
    std::map<int, double> position;
    for (const auto& t : terms) {
        if (t.pathway != Pathway::a) continue;
        score[t.j] += std::abs(t.weight) * std::abs(field_factor(t, source));
        position[t.j] = t.z_j0.real();
    }
    int best = score.begin()->first;
    for (const auto& [j, s] : score) {
        if (s > score[best]) best = j;
    }
    return position[best];
}

std::vector<GridPeak> local_maxima(const Eigen::MatrixXd& layer, const Eigen::VectorXd& omega2,
                                   const Eigen::VectorXd& omega3, double rel_threshold) {
    std::vector<GridPeak> peaks;
    if (layer.rows() < 3 || layer.cols() < 3) return peaks;
    const double cut = rel_threshold * layer.maxCoeff();
    for (Eigen::Index i = 1; i + 1 < layer.rows(); ++i) {
        for (Eigen::Index j = 1; j + 1 < layer.cols(); ++j) {
            const double v = layer(i, j);
            if (v < cut) continue;
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if ((di != 0 || dj != 0) && layer(i + di, j + dj) >= v) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) peaks.push_back({i, j, omega2(i), omega3(j), v});
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(), [](const GridPeak& x, const GridPeak& y) { return x.value > y.value; });
    return peaks;
}

std::size_t count_off_diagonal_maxima(const SpectrumGrid& grid, double rel_threshold, double tolerance_cm1) {
    const auto peaks = local_maxima(grid.modulus(), grid.omega2, grid.omega3, rel_threshold);
    std::size_t n = 0;
    for (const auto& p : peaks) {
        const double d1 = std::abs(p.omega3 - grid.omega1);
        const double d2 = std::abs(p.omega3 - (p.omega2 - grid.omega1));
        if (d1 > tolerance_cm1 && d2 > tolerance_cm1) ++n;
    }
    return n;
}

}  // namespace dqcsim
