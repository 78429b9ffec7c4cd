#include "qwit/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qwit {

CumulativeBounds cumulative_bounds(const PairFunctional& f, const Measurement& a,
                                   const Measurement& b, const StateSet& set) {
    if (a.dim() != set.dim || b.dim() != set.dim)
        throw std::invalid_argument("measurement/state-set dimension mismatch");
    auto table_fn = [&](const DensityMatrix& rho) {
        auto pa = born_probabilities(rho, a);
        auto pb = born_probabilities(rho, b);
        return eval_f_table(f, pa, pb).components;
    };
    CumulativeBounds out;
    auto up = extremal_levels(table_fn, /*maximize=*/true, set);
    auto lo = extremal_levels(table_fn, /*maximize=*/false, set);
    out.levels_max = up.levels;
    out.levels_min = lo.levels;
    out.functional = f.name;
    out.labels = a.label + "," + b.label;
    out.converged = up.converged && lo.converged;
    return out;
}

CumulativeBounds multi_observable_bounds(const MultiFunctional& f,
                                         const std::vector<Measurement>& obs,
                                         const StateSet& set) {
    if (obs.size() < 2 || obs.size() > 4)
        throw std::invalid_argument("multi-observable bounds support 2..4 measurements");
    std::size_t grid = 1;
    for (const auto& m : obs) grid *= m.outcomes();
    if (grid > 4096) throw std::invalid_argument("outcome grid too large");

    auto table_fn = [&](const DensityMatrix& rho) {
        std::vector<std::vector<double>> probs;
        probs.reserve(obs.size());
        for (const auto& m : obs) probs.push_back(born_probabilities(rho, m));
        std::vector<double> table;
        table.reserve(grid);
        std::vector<std::size_t> idx(obs.size(), 0);
        std::vector<double> args(obs.size());
        while (true) {
            for (std::size_t i = 0; i < obs.size(); ++i) args[i] = probs[i][idx[i]];
            table.push_back(f.eval(args));
            std::size_t s = obs.size();
            while (s-- > 0) {
                if (++idx[s] < probs[s].size()) break;
                idx[s] = 0;
                if (s == 0) return table;
            }
        }
    };

    CumulativeBounds out;
    auto up = extremal_levels(table_fn, true, set);
    auto lo = extremal_levels(table_fn, false, set);
    out.levels_max = up.levels;
    out.levels_min = lo.levels;
    out.functional = f.name;
    for (const auto& m : obs) out.labels += (out.labels.empty() ? "" : ",") + m.label;
    out.converged = up.converged && lo.converged;
    return out;
}

SandwichReport check_state_sandwich(const CumulativeBounds& bounds, const BoundVector& f_table,
                                    double tol) {
    SandwichReport rep;
    BoundVector lower = bounds.lower_vector();
    BoundVector upper = bounds.upper_vector();
    rep.lower_ok = majorized_by(lower, f_table, tol);
    rep.upper_ok = majorized_by(f_table, upper, tol);
    rep.lower_margins = majorization_margins(lower, f_table);
    rep.upper_margins = majorization_margins(f_table, upper);
    return rep;
}

SandwichReport check_state_sandwich(const PairFunctional& f, const Measurement& a,
                                    const Measurement& b, const StateSet& set,
                                    const DensityMatrix& rho, double tol) {
    CumulativeBounds bounds = cumulative_bounds(f, a, b, set);
    auto pa = born_probabilities(rho, a);
    auto pb = born_probabilities(rho, b);
    return check_state_sandwich(bounds, eval_f_table(f, pa, pb), tol);
}

double entropy_of(EntropyKind kind, double order, std::span<const double> probs) {
    switch (kind) {
        case EntropyKind::Shannon: {
            double h = 0.0;
            for (double p : probs) h -= p_log2_p(p);
            return h;
        }
        case EntropyKind::Renyi: {
            if (order <= 0.0 || order == 1.0)
                throw std::invalid_argument("Renyi order must be > 0 and != 1");
            double s = 0.0;
            for (double p : probs) s += std::pow(std::max(p, 0.0), order);
            return std::log2(std::max(s, 1e-300)) / (1.0 - order);
        }
        case EntropyKind::Tsallis: {
            if (order <= 0.0 || order == 1.0)
                throw std::invalid_argument("Tsallis order must be > 0 and != 1");
            double s = 0.0;
            for (double p : probs) s += std::pow(std::max(p, 0.0), order);
            return (s - 1.0) / (1.0 - order);
        }
    }
    throw std::invalid_argument("unknown entropy kind");
}

std::pair<Measurement, Measurement> measurement_pair_with_overlap(double c) {
    if (c < 1.0 / std::sqrt(2.0) - 1e-12 || c > 1.0 + 1e-12)
        throw std::invalid_argument("overlap must lie in [1/sqrt2, 1] for a qubit pair");
    const double alpha = std::acos(std::min(c, 1.0));
    return {z_basis(), basis_phi(alpha)};
}

BoundVector fgg_majorization_vector(const Measurement& a, const Measurement& b) {
    auto table_fn = [&](const DensityMatrix& rho) {
        auto pa = born_probabilities(rho, a);
        auto pb = born_probabilities(rho, b);
        std::vector<double> t;
        t.reserve(pa.size() * pb.size());
        for (double p : pa)
            for (double q : pb) t.push_back(p * q);
        return t;
    };
    auto up = extremal_levels(table_fn, true, StateSet::pure_qubit());
    BoundVector omega = from_cumulative(up.levels);
    // The levels are nondecreasing up to optimizer noise; clamp stray
    // negatives so entropy evaluation stays defined.
    for (double& v : omega.components) v = std::max(v, 0.0);
    return omega;
}

double min_entropy_sum(EntropyKind entropy, double order, const Measurement& a,
                       const Measurement& b) {
    auto obj = [&](const DensityMatrix& rho) {
        auto pa = born_probabilities(rho, a);
        auto pb = born_probabilities(rho, b);
        return entropy_of(entropy, order, pa) + entropy_of(entropy, order, pb);
    };
    return extremal_over_states(obj, /*maximize=*/false, StateSet::all_qubit()).value;
}

std::function<double(double)> vs_numerical_mid_band() {
    return [](double c) {
        auto [a, b] = measurement_pair_with_overlap(c);
        return min_entropy_sum(EntropyKind::Shannon, 0.0, a, b);
    };
}

namespace {

double vs_h1(double c) { return -2.0 * std::log2(c); }

double vs_h3(double c) {
    auto term = [](double t) { return t <= 0.0 ? 0.0 : t * std::log2(t / 2.0); };
    return -term(1.0 + c) - term(1.0 - c);
}

}  // namespace

double entropic_lower_bound(ReferenceBound kind, EntropyKind entropy, double order, double c,
                            const std::function<double(double)>* vs_mid_band) {
    if (c <= 0.0 || c > 1.0 + 1e-12) throw std::invalid_argument("overlap outside (0, 1]");
    c = std::min(c, 1.0);
    switch (kind) {
        case ReferenceBound::MU:
            if (entropy != EntropyKind::Shannon)
                throw std::invalid_argument("MU bound is Shannon-only");
            return vs_h1(c);
        case ReferenceBound::VS:
            if (entropy != EntropyKind::Shannon)
                throw std::invalid_argument("VS bound is Shannon-only");
            if (c <= kVsBandLow + 1e-12) return vs_h1(c);
            if (c >= kVsBandHigh) return vs_h3(c);
            if (vs_mid_band == nullptr || !*vs_mid_band)
                throw std::invalid_argument("VS mid-band requested without a configured rule");
            return (*vs_mid_band)(c);
        case ReferenceBound::FGG: {
            auto [a, b] = measurement_pair_with_overlap(c);
            BoundVector omega = fgg_majorization_vector(a, b);
            return entropy_of(entropy, order, omega.components);
        }
        case ReferenceBound::Optimizer: {
            auto [a, b] = measurement_pair_with_overlap(c);
            return min_entropy_sum(entropy, order, a, b);
        }
    }
    throw std::invalid_argument("unknown reference bound");
}

}  // namespace qwit
