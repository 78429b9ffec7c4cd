#include "qwit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qwit {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, double step, int max_iter, double tol) {
    const std::size_t n = x0.size();
    if (n == 0) throw std::invalid_argument("empty start point");

    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    NelderMeadResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        // Order best..worst.
        std::vector<std::size_t> ord(n + 1);
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        {
            std::vector<std::vector<double>> s2;
            std::vector<double> f2;
            for (std::size_t i : ord) {
                s2.push_back(simplex[i]);
                f2.push_back(fv[i]);
            }
            simplex.swap(s2);
            fv.swap(f2);
        }
        if (std::abs(fv[n] - fv[0]) < tol) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / double(n);

        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j)
                p[j] = centroid[j] + coef * (simplex[n][j] - centroid[j]);
            return p;
        };

        std::vector<double> xr = blend(-1.0);
        double fr = f(xr);
        if (fr < fv[0]) {
            std::vector<double> xe = blend(-2.0);
            double fe = f(xe);
            if (fe < fr) {
                simplex[n] = xe;
                fv[n] = fe;
            } else {
                simplex[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = xr;
            fv[n] = fr;
        } else {
            std::vector<double> xc = blend(fr < fv[n] ? -0.5 : 0.5);
            double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = xc;
                fv[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j)
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    res.iterations = iter;
    std::size_t best = std::size_t(std::min_element(fv.begin(), fv.end()) - fv.begin());
    res.x = simplex[best];
    res.value = fv[best];
    return res;
}

double clip_norm_to_unit(std::array<double, 3>& r) {
    double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (n > 1.0) {
        r[0] /= n;
        r[1] /= n;
        r[2] /= n;
    }
    return n;
}

StateSet StateSet::all_qubit() { return StateSet{}; }

StateSet StateSet::pure_qubit() {
    StateSet s;
    s.kind = Kind::PureStates;
    return s;
}

StateSet StateSet::explicit_list(std::vector<DensityMatrix> list) {
    StateSet s;
    s.kind = Kind::ExplicitList;
    s.states = std::move(list);
    if (s.states.empty()) throw std::invalid_argument("empty explicit state set");
    s.dim = s.states.front().dim();
    return s;
}

namespace {

DensityMatrix state_from_bloch(std::array<double, 3> r) {
    clip_norm_to_unit(r);
    return bloch_state(r[0], r[1], r[2]);
}

/// Grid candidates for the configured search domain. Ball lattice points for
/// mixed-state sets; sphere points always included (extreme points matter for
/// concave objectives, and running both searches guards against
/// parametrization bias).
std::vector<std::array<double, 3>> grid_candidates(const StateSet& set) {
    std::vector<std::array<double, 3>> pts;
    const int res = std::max(set.grid_resolution, 3);
    if (set.kind == StateSet::Kind::AllStates) {
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j)
                for (int k = 0; k < res; ++k) {
                    std::array<double, 3> r{-1.0 + 2.0 * i / (res - 1), -1.0 + 2.0 * j / (res - 1),
                                            -1.0 + 2.0 * k / (res - 1)};
                    if (r[0] * r[0] + r[1] * r[1] + r[2] * r[2] <= 1.0 + 1e-12) pts.push_back(r);
                }
    }
    const int npolar = res;
    const int nazim = 2 * res;
    for (int i = 0; i < npolar; ++i) {
        const double th = M_PI * i / (npolar - 1);
        for (int j = 0; j < nazim; ++j) {
            const double ph = 2.0 * M_PI * j / nazim;
            pts.push_back({std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)});
            if (i == 0 || i == npolar - 1) break;  // poles once
        }
    }
    return pts;
}

}  // namespace

ScalarOptResult extremal_over_states(const std::function<double(const DensityMatrix&)>& objective,
                                     bool maximize, const StateSet& set) {
    const double sign = maximize ? -1.0 : 1.0;
    auto signed_obj = [&](const DensityMatrix& rho) { return sign * objective(rho); };

    ScalarOptResult res;
    if (set.kind == StateSet::Kind::ExplicitList) {
        if (set.states.empty()) throw std::invalid_argument("empty explicit state set");
        double best = signed_obj(set.states.front());
        for (std::size_t i = 1; i < set.states.size(); ++i)
            best = std::min(best, signed_obj(set.states[i]));
        res.value = sign * best;
        return res;
    }
    if (set.dim != 2) throw std::invalid_argument("state search implemented for qubits only");

    // Seed sweep.
    auto pts = grid_candidates(set);
    std::vector<std::pair<double, std::array<double, 3>>> scored;
    scored.reserve(pts.size());
    for (const auto& r : pts) scored.emplace_back(signed_obj(state_from_bloch(r)), r);
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    double best = scored.front().first;
    std::array<double, 3> best_r = scored.front().second;
    bool any_converged = false;

    const bool on_sphere = set.kind == StateSet::Kind::PureStates;
    const int nseeds = std::min<std::size_t>(set.refine_seeds, scored.size());
    for (int s = 0; s < nseeds; ++s) {
        NelderMeadResult nm;
        if (on_sphere) {
            const auto& r = scored[s].second;
            double th = std::acos(std::clamp(r[2], -1.0, 1.0));
            double ph = std::atan2(r[1], r[0]);
            nm = nelder_mead(
                [&](std::span<const double> a) {
                    return signed_obj(bloch_pure(a[0], a[1]).to_density());
                },
                {th, ph}, 0.05, set.refine_iterations, 1e-10);
        } else {
            nm = nelder_mead(
                [&](std::span<const double> a) {
                    std::array<double, 3> r{a[0], a[1], a[2]};
                    return signed_obj(state_from_bloch(r));
                },
                {scored[s].second[0], scored[s].second[1], scored[s].second[2]}, 0.05,
                set.refine_iterations, 1e-10);
        }
        if (nm.value < best) {
            best = nm.value;
            if (on_sphere) {
                best_r = {std::sin(nm.x[0]) * std::cos(nm.x[1]),
                          std::sin(nm.x[0]) * std::sin(nm.x[1]), std::cos(nm.x[0])};
            } else {
                best_r = {nm.x[0], nm.x[1], nm.x[2]};
                clip_norm_to_unit(best_r);
            }
        }
        any_converged = any_converged || nm.converged;
    }

    res.value = sign * best;
    res.bloch = best_r;
    res.converged = any_converged;
    return res;
}

LevelsResult extremal_levels(const std::function<std::vector<double>(const DensityMatrix&)>& table_fn,
                             bool maximize, const StateSet& set) {
    // Per-k objective: prefix-k sum of the sorted table (descending for max,
    // ascending for min).
    auto sorted_prefixes = [&](const DensityMatrix& rho) {
        std::vector<double> t = table_fn(rho);
        if (maximize)
            std::sort(t.begin(), t.end(), std::greater<double>());
        else
            std::sort(t.begin(), t.end());
        double s = 0.0;
        for (auto& v : t) {
            s += v;
            v = s;
        }
        return t;  // now prefix sums
    };

    LevelsResult out;
    if (set.kind == StateSet::Kind::ExplicitList) {
        if (set.states.empty()) throw std::invalid_argument("empty explicit state set");
        out.levels = sorted_prefixes(set.states.front());
        for (std::size_t i = 1; i < set.states.size(); ++i) {
            auto p = sorted_prefixes(set.states[i]);
            for (std::size_t k = 0; k < p.size(); ++k)
                out.levels[k] = maximize ? std::max(out.levels[k], p[k])
                                         : std::min(out.levels[k], p[k]);
        }
        return out;
    }
    if (set.dim != 2) throw std::invalid_argument("state search implemented for qubits only");

    const double sign = maximize ? -1.0 : 1.0;
    auto pts = grid_candidates(set);
    const std::size_t n = sorted_prefixes(state_from_bloch(pts.front())).size();

    // One sweep over the grid scores every k at once.
    std::vector<std::vector<std::pair<double, std::array<double, 3>>>> seeds(n);
    for (const auto& r : pts) {
        auto p = sorted_prefixes(state_from_bloch(r));
        for (std::size_t k = 0; k < n; ++k) seeds[k].emplace_back(sign * p[k], r);
    }

    out.levels.resize(n);
    const bool on_sphere = set.kind == StateSet::Kind::PureStates;
    for (std::size_t k = 0; k < n; ++k) {
        std::stable_sort(seeds[k].begin(), seeds[k].end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        double best = seeds[k].front().first;
        const int nseeds = std::min<std::size_t>(set.refine_seeds, seeds[k].size());
        bool any_converged = false;
        for (int s = 0; s < nseeds; ++s) {
            NelderMeadResult nm;
            if (on_sphere) {
                const auto& r = seeds[k][s].second;
                nm = nelder_mead(
                    [&](std::span<const double> a) {
                        return sign * sorted_prefixes(bloch_pure(a[0], a[1]).to_density())[k];
                    },
                    {std::acos(std::clamp(r[2], -1.0, 1.0)), std::atan2(r[1], r[0])}, 0.05,
                    set.refine_iterations, 1e-10);
            } else {
                nm = nelder_mead(
                    [&](std::span<const double> a) {
                        std::array<double, 3> r{a[0], a[1], a[2]};
                        return sign * sorted_prefixes(state_from_bloch(r))[k];
                    },
                    {seeds[k][s].second[0], seeds[k][s].second[1], seeds[k][s].second[2]}, 0.05,
                    set.refine_iterations, 1e-10);
            }
            best = std::min(best, nm.value);
            any_converged = any_converged || nm.converged;
        }
        out.levels[k] = sign * best;
        out.converged = out.converged && any_converged;
    }
    return out;
}

}  // namespace qwit
