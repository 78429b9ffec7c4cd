#pragma once

#include "qwit/majorization.hpp"
#include "qwit/measurement.hpp"
#include "qwit/states.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qwit {

/// Two-party, two-setting, two-outcome behavior P(a,b|x,y).
/// Indexing: p[x][y][a][b].
struct CorrelationTable {
    std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> p{};

    /// Born behavior of a bipartite state under per-setting observables
    /// (outcome a/b = eigenvector index, descending eigenvalues).
    static CorrelationTable from_state(const DensityMatrix& rho,
                                       const std::array<Observable, 2>& alice,
                                       const std::array<Observable, 2>& bob);
    /// Local deterministic box: outputs fixed by (a0, a1, b0, b1).
    static CorrelationTable deterministic(int a0, int a1, int b0, int b1);
    static std::vector<CorrelationTable> all_deterministic();  // 16 boxes
    /// Quantum box saturating Tsirelson: P = (1 + (-1)^{a+b+xy}/sqrt2)/4.
    static CorrelationTable tsirelson();
    /// Popescu-Rohrlich box: P = 1/2 iff a+b = xy mod 2.
    static CorrelationTable pr_box();
    static CorrelationTable mixture(const std::vector<CorrelationTable>& boxes,
                                    const std::vector<double>& weights);

    bool is_valid(double tol = 1e-9) const;        // normalized, nonnegative
    bool is_no_signaling(double tol = 1e-9) const;
    double marginal_a(int x, int a) const;
    double marginal_b(int y, int b) const;
};

enum class CorrelatorSign {
    OutcomeSum,      // (-1)^{a+b}
    OutcomeProduct,  // (-1)^{ab}
};

/// <A_x B_y> under the chosen outcome-sign convention.
double correlator(const CorrelationTable& t, int x, int y,
                  CorrelatorSign sign = CorrelatorSign::OutcomeSum);

/// Per-outcome-pair CHSH table f(a,b) = sum_xy (-1)^{xy} P(a,b|x,y).
/// Raw order (a,b) = 00, 01, 10, 11; entries always total 2.
BoundVector chsh_f_vector(const CorrelationTable& t);

/// CHSH combination S = <A0B0> + <A0B1> + <A1B0> - <A1B1>.
double chsh_value(const CorrelationTable& t,
                  CorrelatorSign sign = CorrelatorSign::OutcomeSum);

/// Cumulative CHSH hierarchy: classical [2,0,0,0] (cumulative 2,2,2,2),
/// quantum [2 sqrt2, ...] and no-signaling [3, ...] ceilings.
struct ChshHierarchy {
    std::vector<double> classical;    // cumulative levels
    std::vector<double> quantum;
    std::vector<double> no_signaling;
};
ChshHierarchy chsh_hierarchy();

struct ChshReport {
    double s = 0.0;
    BoundVector f;                 // sorted descending
    bool classical_ok = false;     // f < classical vector
    bool quantum_ok = false;       // f < quantum vector
    bool no_signaling_ok = false;  // f < no-signaling vector
};
ChshReport check_chsh_relation(const CorrelationTable& t,
                               CorrelatorSign sign = CorrelatorSign::OutcomeSum);

/// S for the partially entangled state sin(theta)|HH> + cos(theta)|VV>
/// at the optimal xz-plane settings: gamma(theta) = 2 sqrt(1 + sin^2 2theta).
double quantum_chsh_value(double theta_rad);
/// The optimal xz-plane observables for that state (Alice Z/X; Bob at
/// +-chi with tan(chi) = sin 2theta).
std::pair<std::array<Observable, 2>, std::array<Observable, 2>> optimal_chsh_settings(
    double theta_rad);

/// Covariance CHSH table: f(a,b) = sum_xy (-1)^{xy}
/// (alpha_a - <A_x>)(alpha_b - <B_y>) P(a,b|x,y) with alpha_a = (-1)^a.
BoundVector covariance_chsh_f_vector(const CorrelationTable& t);
double covariance_chsh_value(const CorrelationTable& t);
/// Classical cumulative levels of the covariance CHSH bound vector
/// (4/7, 4/7, 4/7, 4/7): {4/7, 8/7, 12/7, 16/7}.
std::vector<double> covariance_chsh_classical_levels();

struct CovarianceChshReport {
    double sum = 0.0;
    BoundVector f;
    bool classical_ok = false;
    bool degenerate_marginal = false;  // some setting has zero outcome variance
};
CovarianceChshReport covariance_chsh(const CorrelationTable& t);

/// Three-party behavior P(a,b,c|x,y,z), p[x][y][z][a][b][c].
struct CorrelationTable3 {
    double p[2][2][2][2][2][2] = {};

    static CorrelationTable3 from_state(const DensityMatrix& rho,
                                        const std::array<Observable, 2>& alice,
                                        const std::array<Observable, 2>& bob,
                                        const std::array<Observable, 2>& charlie);
    static CorrelationTable3 deterministic(const std::array<int, 6>& outputs);  // a0 a1 b0 b1 c0 c1
    /// No-signaling box: P = 1/4 on the outcome-parity class that makes every
    /// Svetlichny term contribute +1 (a+b+c odd iff x=y=z), reaching S3 = 8.
    static CorrelationTable3 svetlichny_ns_box();
};

/// Svetlichny per-outcome table
/// f(a,b,c) = (-1)^{a+b+c} sum_xyz delta_xyz P(a,b,c|x,y,z) with
/// delta_xyz = -1 iff x=y=z. Raw order (a,b,c) = 000..111; the entries total
/// the scalar Svetlichny value, and every local deterministic box keeps all
/// prefix sums at or below the classical ceiling 4.
BoundVector svetlichny_f_vector(const CorrelationTable3& t);
/// Scalar Svetlichny combination S3 = sum_xyz delta_xyz <A_x B_y C_z>.
double svetlichny_value(const CorrelationTable3& t,
                        CorrelatorSign sign = CorrelatorSign::OutcomeSum);

struct SvetlichnyReport {
    double s = 0.0;
    BoundVector f;               // sorted descending
    bool classical_ok = false;   // f < [4, 0, ..., 0]
    bool quantum_ok = false;     // f < [4 sqrt2, 0, ..., 0]
    bool ns_ok = false;          // f < [8, 0, ..., 0]
};
SvetlichnyReport svetlichny_check(const CorrelationTable3& t);

/// Maximal Svetlichny value of the GHZ state over xy-plane observables
/// (6-angle multi-start search); the optimum is 4 sqrt2.
struct GhzSvetlichnyResult {
    double value = 0.0;
    std::array<double, 6> angles_rad{};
};
GhzSvetlichnyResult ghz_optimal_svetlichny();

/// Entanglement witness decomposed into local observables,
/// E = sum_xy alpha_xy A_x (x) B_y; the decomposition is checked against the
/// stored matrix at tolerance 1e-9 by validate().
struct WitnessOperator {
    std::string label;
    ComplexMatrix op;  // E
    std::vector<Observable> alice;
    std::vector<Observable> bob;
    std::vector<std::vector<double>> alpha;  // alpha[x][y]

    void validate() const;

    /// f(a,b) = sum_xy alpha_xy mu_{a|x} nu_{b|y} P(a,b|x,y) where mu, nu are
    /// the observable eigenvalues for the outcomes. The entries total
    /// tr(rho E).
    BoundVector f_vector(const DensityMatrix& rho) const;
    double expectation_value(const DensityMatrix& rho) const;

    /// E = |Phi+><Phi+| - I/2 = (XX - YY + ZZ - II)/4; positive expectation
    /// only on entangled states.
    static WitnessOperator bell_phi_plus();
};

struct WitnessReport {
    BoundVector f;                       // sorted descending
    std::vector<double> c_s_levels;      // separable prefix-sum ceiling
    double value = 0.0;                  // c_q(rho) = tr(rho E)
    double c_separable = 0.0;            // max tr(rho_prod E) over product states
    bool violated = false;               // f exceeds the separable ceiling
    bool converged = true;
};
/// Separable ceilings via product-pure-state search (4 angles, multi-start
/// Nelder-Mead over a deterministic grid).
WitnessReport witness_uncertainty_relation(const WitnessOperator& w, const DensityMatrix& rho);

}  // namespace qwit
