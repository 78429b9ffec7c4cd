#include "qwit/coherence.hpp"

#include "qwit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwit {

double relative_entropy_coherence(const DensityMatrix& rho) {
    return rho.diagonal_part().entropy_bits() - rho.entropy_bits();
}

namespace {

double entropy_bits_of(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p) h -= p_log2_p(v);
    return h;
}

// H(comp) - H(scan at phi); the witness maximizes this over phi.
double witness_at(const DensityMatrix& rho, const std::vector<double>& p_comp, double phi_rad) {
    auto p_scan = born_probabilities(rho, basis_phi(phi_rad));
    return entropy_bits_of(p_comp) - entropy_bits_of(p_scan);
}

}  // namespace

CoherenceReport coherence_vector_relation(const DensityMatrix& rho, const StateSet& set) {
    if (rho.dim() != 2) throw std::invalid_argument("coherence scan is qubit-only");
    const auto p_comp = born_probabilities(rho, computational_basis(2));

    // 1-degree grid over [0, 180), then Nelder-Mead refinement from the best
    // grid angle.
    const double deg = std::numbers::pi / 180.0;
    double best_phi = 0.0;
    double best_val = witness_at(rho, p_comp, 0.0);
    for (int d = 1; d < 180; ++d) {
        const double v = witness_at(rho, p_comp, d * deg);
        if (v > best_val + 1e-15) {
            best_val = v;
            best_phi = d * deg;
        }
    }
    auto neg = [&](std::span<const double> x) { return -witness_at(rho, p_comp, x[0]); };
    auto res = nelder_mead(neg, {best_phi}, 0.5 * deg, 200, 1e-10);
    if (-res.value > best_val) {
        best_val = -res.value;
        best_phi = res.x[0];
    }

    CoherenceReport rep;
    rep.phi_deg = best_phi / deg;
    rep.r_coh = best_val;
    rep.c_r = relative_entropy_coherence(rho);

    Measurement scan = basis_phi(best_phi);
    const auto p_scan = born_probabilities(rho, scan);
    rep.f_table = eval_f_table(coherence_pair(), p_comp, p_scan);

    CumulativeBounds bounds =
        cumulative_bounds(coherence_pair(), computational_basis(2), scan, set);
    SandwichReport sand = check_state_sandwich(bounds, rep.f_table);
    rep.lower_ok = sand.lower_ok;
    rep.upper_ok = sand.upper_ok;
    return rep;
}

MarginalScanResult d_h_from_marginals(const std::vector<double>& p_ref,
                                      const std::vector<double>& phis_deg,
                                      const std::vector<std::vector<double>>& scans) {
    if (phis_deg.size() != scans.size() || scans.empty())
        throw std::invalid_argument("scan angle/marginal lists must match and be non-empty");
    MarginalScanResult out;
    out.h_ref = entropy_bits_of(p_ref);
    out.h_min = entropy_bits_of(scans.front());
    out.phi_at_min_deg = phis_deg.front();
    for (std::size_t i = 1; i < scans.size(); ++i) {
        const double h = entropy_bits_of(scans[i]);
        if (h < out.h_min - 1e-12) {
            out.h_min = h;
            out.phi_at_min_deg = phis_deg[i];
        }
    }
    out.d_h = std::max(out.h_ref - out.h_min, 0.0);
    return out;
}

}  // namespace qwit
