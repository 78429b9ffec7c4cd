#pragma once

#include "qwit/nonlocality.hpp"
#include "qwit/states.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qwit {

/// One coincidence-counter cell N_{x,y}^{a,b}.
struct CoincidenceRecord {
    int x = 0, y = 0, a = 0, b = 0;
    double count = 0.0;  // nonnegative integer value
};

struct Table1Record {
    double theta_deg = 0.0;
    double two_qubit_fidelity = 0.0;
    double one_qubit_fidelity = 0.0;
};

/// Measured marginal pair for one basis block and theta. Raw values are kept
/// verbatim; renormalized pairs are what entropy evaluation consumes.
struct Table2Record {
    std::string block;  // DA_HV, DA_GK, HV_GK
    double theta_deg = 0.0;
    double p_a0 = 0.0, p_a1 = 0.0;
    double p_b0 = 0.0, p_b1 = 0.0;
    bool flagged_inconsistent = false;  // pair sum far from 1

    std::array<double, 2> renormalized_a() const;
    std::array<double, 2> renormalized_b() const;
};

struct Table3Record {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double p_a0 = 0.0, p_a1 = 0.0;
    bool flagged_inconsistent = false;

    std::array<double, 2> renormalized() const;
};

/// One coincidence row of the CHSH test, with one count column per theta.
struct Table4Record {
    int x = 0, y = 0, a = 0, b = 0;
    std::array<double, 4> counts{};  // theta = 15, 30, 45, 60 degrees
};

inline constexpr std::array<double, 4> kTable4Thetas = {15.0, 30.0, 45.0, 60.0};

std::vector<Table1Record> load_table1(const std::string& path);
std::vector<Table2Record> load_table2(const std::string& path);
std::vector<Table3Record> load_table3(const std::string& path);
std::vector<Table4Record> load_table4(const std::string& path);

/// Counts for one theta column as 16 CoincidenceRecords.
std::vector<CoincidenceRecord> chsh_counts_at(const std::vector<Table4Record>& rows,
                                              double theta_deg);
/// P(a,b|x,y) = N^{ab}_{xy} / sum_ab N^{ab}_{xy}.
CorrelationTable table_from_counts(const std::vector<CoincidenceRecord>& records);

/// Four-cell count vector (a,b) = 00,01,10,11 to probabilities; throws on a
/// zero total or a missing cell.
std::array<double, 4> probs_from_counts(const std::array<double, 4>& counts);

/// Poisson bootstrap of a statistic of a count vector. Counter-based seeding:
/// resample i uses an engine seeded from (seed, i), so any subset of the
/// resamples can be regenerated independently and the result is
/// order-independent.
std::vector<double> poisson_resample(const std::vector<double>& counts,
                                     const std::function<double(const std::vector<double>&)>& stat,
                                     std::size_t n_samples, std::uint64_t seed);

struct ResampleReport {
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t n_samples = 0;
    double p_value = 0.0;          // fraction of resamples not beating the bound
    bool below_resolution = false; // no resample failed; true p < 1/n
    double gaussian_tail_p = 0.0;  // normal-approximation supplement
};
/// Summary against a classical bound that the statistic should exceed.
ResampleReport summarize_above_bound(const std::vector<double>& samples, double bound);

inline constexpr std::size_t kDefaultResamples = 100000;

/// Labeled single-qubit polarization projectors H, V, D, A, R, L.
struct LabeledProjector {
    std::string label;
    ComplexMatrix projector;
};
const std::vector<LabeledProjector>& polarization_projectors();

/// The 36 two-qubit product projectors used for tomography, grouped in 9
/// complete 4-outcome settings (HH, HV, VH, VV, HD, ...).
struct TomographyInput {
    std::vector<std::string> labels;      // e.g. "HD"
    std::vector<ComplexMatrix> projectors;
    std::vector<double> values;           // probabilities (or group-normalized counts)
};

/// Exact Born probabilities of rho for the 36-projector set.
TomographyInput simulate_tomography(const DensityMatrix& rho);
/// Poisson-noised counts at the given mean scale, normalized per 4-outcome
/// group.
TomographyInput simulate_tomography_noisy(const DensityMatrix& rho, double mean_counts,
                                          std::uint64_t seed);

/// Least-squares linear inversion in the two-qubit Pauli basis, then
/// eigenvalue clipping and trace renormalization.
DensityMatrix tomography_reconstruct(const TomographyInput& input);

}  // namespace qwit
