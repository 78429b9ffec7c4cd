#pragma once

#include "qwit/bounds.hpp"
#include "qwit/functionals.hpp"
#include "qwit/majorization.hpp"
#include "qwit/measurement.hpp"
#include "qwit/quantum_ops.hpp"
#include "qwit/states.hpp"

#include <optional>
#include <vector>

namespace qwit {

// Report produced when relating a state's coherence to the cumulative
// majorization envelope of the coherence functional.
struct CoherenceReport {
    BoundVector f_table;          // coherence f-table for the best scan setting
    double r_coh = 0.0;           // entropy difference witnessed by the scan
    std::optional<double> c_r;    // relative entropy of coherence, when computed
    double phi_deg = 0.0;         // scan angle achieving the extremum (degrees)
    bool lower_ok = false;
    bool upper_ok = false;
};

// S(diag(rho)) - S(rho) in bits.
double relative_entropy_coherence(const DensityMatrix& rho);

// Entropy-difference coherence witness from a family of scanned bases:
// maximizes H(computational) - H(scan basis) over phi via a 1-degree grid
// followed by local refinement. Also checks the witnessing f-table against
// the cumulative bounds of the coherence functional.
CoherenceReport coherence_vector_relation(const DensityMatrix& rho, const StateSet& set);

// D_H = H(pZ) - min_phi H(scan(phi)) from measured marginals; the phi grid is
// supplied by the caller (degrees). Ties break toward the smallest angle.
struct MarginalScanResult {
    double d_h = 0.0;
    double phi_at_min_deg = 0.0;
    double h_ref = 0.0;
    double h_min = 0.0;
};
MarginalScanResult d_h_from_marginals(const std::vector<double>& p_ref,
                                      const std::vector<double>& phis_deg,
                                      const std::vector<std::vector<double>>& scans);

}  // namespace qwit
