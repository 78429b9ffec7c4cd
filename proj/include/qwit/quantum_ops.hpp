#pragma once

#include "qwit/measurement.hpp"
#include "qwit/states.hpp"

#include <vector>

namespace qwit {

/// tr(M_a rho) per effect. Components clamped to [0,1] after a 1e-9
/// tolerance check; the vector sums to 1 within 1e-8.
std::vector<double> born_probabilities(const DensityMatrix& state, const Measurement& m);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Trace out all subsystems except `keep`. dims lists subsystem dimensions
/// in tensor order; their product must equal rho.dim().
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep,
                            const std::vector<std::size_t>& dims);

/// Uhlmann fidelity (tr sqrt(sqrt(r1) r2 sqrt(r1)))^2, in [0,1].
double fidelity(const DensityMatrix& r1, const DensityMatrix& r2);

/// Maximal overlap c = max_{a,b} |<phi_a|psi_b>| of two rank-1 projective
/// measurements.
double max_overlap(const Measurement& a, const Measurement& b);

double expectation(const DensityMatrix& rho, const ComplexMatrix& op);

}  // namespace qwit
