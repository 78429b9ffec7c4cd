#pragma once

#include "qwit/functionals.hpp"
#include "qwit/majorization.hpp"
#include "qwit/measurement.hpp"
#include "qwit/optimize.hpp"
#include "qwit/quantum_ops.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwit {

/// Cumulative extremal levels of a joint uncertainty table over a state set:
/// levels_max[k-1] is the largest achievable sum of k table entries,
/// levels_min[k-1] the smallest. The subset choice is exact (sorting); the
/// state search is grid + multi-start Nelder-Mead.
struct CumulativeBounds {
    std::vector<double> levels_max;  // R_1..R_nm
    std::vector<double> levels_min;  // r_1..r_nm
    std::string functional;
    std::string labels;
    bool converged = true;

    BoundVector upper_vector() const { return from_cumulative(levels_max); }
    BoundVector lower_vector() const { return from_cumulative(levels_min); }
};

CumulativeBounds cumulative_bounds(const PairFunctional& f, const Measurement& a,
                                   const Measurement& b, const StateSet& set);

/// Multi-observable generalization over the product outcome grid
/// (2 <= m <= 4 measurements, grid size capped at 4096).
CumulativeBounds multi_observable_bounds(const MultiFunctional& f,
                                         const std::vector<Measurement>& obs,
                                         const StateSet& set);

/// Sandwich check: lower vector < f-table < upper vector (prefix-sum order,
/// table in raw order).
struct SandwichReport {
    bool lower_ok = false;
    bool upper_ok = false;
    std::vector<double> lower_margins;
    std::vector<double> upper_margins;
};
SandwichReport check_state_sandwich(const CumulativeBounds& bounds, const BoundVector& f_table,
                                    double tol = 1e-9);
SandwichReport check_state_sandwich(const PairFunctional& f, const Measurement& a,
                                    const Measurement& b, const StateSet& set,
                                    const DensityMatrix& rho, double tol = 1e-9);

enum class EntropyKind { Shannon, Renyi, Tsallis };
enum class ReferenceBound { MU, VS, FGG, Optimizer };

/// Entropy of a probability vector, base-2 logs throughout.
double entropy_of(EntropyKind kind, double order, std::span<const double> probs);

/// A qubit measurement pair (Z basis, rotated basis) with maximal eigenstate
/// overlap c.
std::pair<Measurement, Measurement> measurement_pair_with_overlap(double c);

/// Flattened-product majorization vector: cumulative level k is the maximum
/// over pure states of the sum of the k largest entries of the outer product
/// of the two Born distributions.
BoundVector fgg_majorization_vector(const Measurement& a, const Measurement& b);

/// Lower bound on the entropy sum for a qubit pair with overlap c.
/// MU and VS are Shannon-only. VS inside the band (1/sqrt2, 0.834) requires
/// an explicitly configured mid-band rule and throws without one.
double entropic_lower_bound(ReferenceBound kind, EntropyKind entropy, double order, double c,
                            const std::function<double(double)>* vs_mid_band = nullptr);

/// Direct minimization of the entropy sum over all qubit states.
double min_entropy_sum(EntropyKind entropy, double order, const Measurement& a,
                       const Measurement& b);

/// Mid-band rule backed by direct numerical minimization (how the original
/// mid-band values were produced).
std::function<double(double)> vs_numerical_mid_band();

constexpr double kVsBandLow = 0.7071067811865476;  // 1/sqrt(2)
constexpr double kVsBandHigh = 0.834;

}  // namespace qwit
