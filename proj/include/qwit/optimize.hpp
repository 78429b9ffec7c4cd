#pragma once

#include "qwit/states.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace qwit {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Minimizes f. Deterministic for a given start point.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, double step = 0.05, int max_iter = 200,
                             double tol = 1e-10);

/// Optimization domain over qubit density matrices.
struct StateSet {
    enum class Kind { AllStates, PureStates, ExplicitList };
    Kind kind = Kind::AllStates;
    std::size_t dim = 2;
    int grid_resolution = 21;   // per-axis Bloch lattice
    int refine_seeds = 5;       // Nelder-Mead multi-starts
    int refine_iterations = 200;
    std::vector<DensityMatrix> states;  // ExplicitList

    static StateSet all_qubit();
    static StateSet pure_qubit();
    static StateSet explicit_list(std::vector<DensityMatrix> list);
};

/// Extremal value of a scalar objective over the state set. Coarse
/// grid (Bloch ball and/or pure-state sphere) multi-started into
/// Nelder-Mead; ties broken by lowest seed index; sequential and
/// deterministic.
struct ScalarOptResult {
    double value = 0.0;
    std::array<double, 3> bloch{};
    bool converged = true;
};
ScalarOptResult extremal_over_states(const std::function<double(const DensityMatrix&)>& objective,
                                     bool maximize, const StateSet& set);

/// Batched per-k extremal prefix sums: for each k in 1..n, the best over
/// states of the sum of the k largest (maximize) or k smallest (minimize)
/// entries of the table returned by table_fn. One state sweep feeds all k.
struct LevelsResult {
    std::vector<double> levels;
    bool converged = true;
};
LevelsResult extremal_levels(const std::function<std::vector<double>(const DensityMatrix&)>& table_fn,
                             bool maximize, const StateSet& set);

double clip_norm_to_unit(std::array<double, 3>& r);

}  // namespace qwit
