#include "qwit/experiment.hpp"

#include "qwit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qwit {

namespace {

std::array<double, 2> renorm_pair(double p0, double p1) {
    const double s = p0 + p1;
    if (s <= 0.0) throw std::domain_error("cannot renormalize a nonpositive pair");
    return {p0 / s, p1 / s};
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::vector<std::string>& header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (lineno == 1) {
            if (cells != header)
                throw std::runtime_error(path + ": unexpected header on line 1");
            continue;
        }
        if (cells.size() != header.size())
            throw std::runtime_error(path + ": wrong field count on line " +
                                     std::to_string(lineno));
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw std::runtime_error(path + ": no data rows");
    return rows;
}

double to_number(const std::string& s, const std::string& path) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::runtime_error(path + ": malformed number '" + s + "'");
    }
    if (used != s.size()) throw std::runtime_error(path + ": malformed number '" + s + "'");
    return v;
}

int to_bit(const std::string& s, const std::string& path) {
    if (s == "0") return 0;
    if (s == "1") return 1;
    throw std::runtime_error(path + ": expected a 0/1 field, got '" + s + "'");
}

// SplitMix64: mixes (seed, counter) into an independent engine seed per
// resample so the bootstrap is splittable and order-independent.
std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t counter) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(counter)));
}

}  // namespace

std::array<double, 2> Table2Record::renormalized_a() const { return renorm_pair(p_a0, p_a1); }
std::array<double, 2> Table2Record::renormalized_b() const { return renorm_pair(p_b0, p_b1); }
std::array<double, 2> Table3Record::renormalized() const { return renorm_pair(p_a0, p_a1); }

std::vector<Table1Record> load_table1(const std::string& path) {
    auto rows = read_csv(path, {"theta_deg", "two_qubit_fidelity", "one_qubit_fidelity"});
    std::vector<Table1Record> out;
    for (const auto& r : rows)
        out.push_back({to_number(r[0], path), to_number(r[1], path), to_number(r[2], path)});
    return out;
}

std::vector<Table2Record> load_table2(const std::string& path) {
    auto rows = read_csv(path, {"block", "theta_deg", "p_a0", "p_a1", "p_b0", "p_b1"});
    std::vector<Table2Record> out;
    for (const auto& r : rows) {
        Table2Record rec;
        rec.block = r[0];
        if (rec.block != "DA_HV" && rec.block != "DA_GK" && rec.block != "HV_GK")
            throw std::runtime_error(path + ": unknown block '" + rec.block + "'");
        rec.theta_deg = to_number(r[1], path);
        rec.p_a0 = to_number(r[2], path);
        rec.p_a1 = to_number(r[3], path);
        rec.p_b0 = to_number(r[4], path);
        rec.p_b1 = to_number(r[5], path);
        rec.flagged_inconsistent = std::abs(rec.p_a0 + rec.p_a1 - 1.0) > 0.05 ||
                                   std::abs(rec.p_b0 + rec.p_b1 - 1.0) > 0.05;
        out.push_back(rec);
    }
    return out;
}

std::vector<Table3Record> load_table3(const std::string& path) {
    auto rows = read_csv(path, {"theta_deg", "phi_deg", "p_a0", "p_a1"});
    std::vector<Table3Record> out;
    for (const auto& r : rows) {
        Table3Record rec;
        rec.theta_deg = to_number(r[0], path);
        rec.phi_deg = to_number(r[1], path);
        rec.p_a0 = to_number(r[2], path);
        rec.p_a1 = to_number(r[3], path);
        rec.flagged_inconsistent = std::abs(rec.p_a0 + rec.p_a1 - 1.0) > 0.05;
        out.push_back(rec);
    }
    return out;
}

std::vector<Table4Record> load_table4(const std::string& path) {
    auto rows = read_csv(path, {"x", "y", "a", "b", "theta15", "theta30", "theta45", "theta60"});
    std::vector<Table4Record> out;
    for (const auto& r : rows) {
        Table4Record rec;
        rec.x = to_bit(r[0], path);
        rec.y = to_bit(r[1], path);
        rec.a = to_bit(r[2], path);
        rec.b = to_bit(r[3], path);
        for (int i = 0; i < 4; ++i) {
            rec.counts[i] = to_number(r[4 + i], path);
            if (rec.counts[i] < 0 || rec.counts[i] != std::floor(rec.counts[i]))
                throw std::runtime_error(path + ": counts must be nonnegative integers");
        }
        out.push_back(rec);
    }
    if (out.size() != 16) throw std::runtime_error(path + ": expected 16 coincidence rows");
    return out;
}

std::vector<CoincidenceRecord> chsh_counts_at(const std::vector<Table4Record>& rows,
                                              double theta_deg) {
    int col = -1;
    for (int i = 0; i < 4; ++i)
        if (std::abs(kTable4Thetas[i] - theta_deg) < 1e-9) col = i;
    if (col < 0) throw std::invalid_argument("no count column for the requested theta");
    std::vector<CoincidenceRecord> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back({r.x, r.y, r.a, r.b, r.counts[col]});
    return out;
}

CorrelationTable table_from_counts(const std::vector<CoincidenceRecord>& records) {
    double counts[2][2][2][2];
    bool seen[2][2][2][2] = {};
    for (const auto& r : records) {
        counts[r.x][r.y][r.a][r.b] = r.count;
        seen[r.x][r.y][r.a][r.b] = true;
    }
    CorrelationTable t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            std::array<double, 4> c{};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    if (!seen[x][y][a][b])
                        throw std::invalid_argument("missing coincidence cell");
                    c[2 * a + b] = counts[x][y][a][b];
                }
            auto p = probs_from_counts(c);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) t.p[x][y][a][b] = p[2 * a + b];
        }
    return t;
}

std::array<double, 4> probs_from_counts(const std::array<double, 4>& counts) {
    double total = 0.0;
    for (double c : counts) {
        if (c < 0.0) throw std::invalid_argument("negative count");
        total += c;
    }
    if (total <= 0.0) throw std::invalid_argument("zero total count");
    return {counts[0] / total, counts[1] / total, counts[2] / total, counts[3] / total};
}

std::vector<double> poisson_resample(const std::vector<double>& counts,
                                     const std::function<double(const std::vector<double>&)>& stat,
                                     std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("need at least one resample");
    std::vector<double> samples(n_samples);
    std::vector<double> draw(counts.size());
    for (std::size_t i = 0; i < n_samples; ++i) {
        auto rng = engine_for(seed, i);
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (counts[j] <= 0.0) {
                draw[j] = 0.0;  // zero-mean Poisson is identically zero
                continue;
            }
            std::poisson_distribution<long long> dist(counts[j]);
            draw[j] = static_cast<double>(dist(rng));
        }
        samples[i] = stat(draw);
    }
    return samples;
}

ResampleReport summarize_above_bound(const std::vector<double>& samples, double bound) {
    ResampleReport rep;
    rep.n_samples = samples.size();
    double sum = 0.0;
    std::size_t fails = 0;
    for (double s : samples) {
        sum += s;
        if (s <= bound) ++fails;
    }
    rep.mean = sum / static_cast<double>(samples.size());
    double var = 0.0;
    for (double s : samples) var += (s - rep.mean) * (s - rep.mean);
    rep.stddev = std::sqrt(var / static_cast<double>(samples.size()));
    rep.p_value = static_cast<double>(fails) / static_cast<double>(samples.size());
    rep.below_resolution = fails == 0;
    if (rep.below_resolution) rep.p_value = 1.0 / static_cast<double>(samples.size());
    rep.gaussian_tail_p =
        rep.stddev > 0.0
            ? 0.5 * std::erfc((rep.mean - bound) / (rep.stddev * std::numbers::sqrt2))
            : (rep.mean > bound ? 0.0 : 1.0);
    return rep;
}

const std::vector<LabeledProjector>& polarization_projectors() {
    static const std::vector<LabeledProjector> projs = [] {
        const double s = 1.0 / std::numbers::sqrt2;
        const cplx i(0.0, 1.0);
        auto proj = [](const std::vector<cplx>& v) { return ComplexMatrix::outer(v, v); };
        std::vector<LabeledProjector> out;
        out.push_back({"H", proj({1.0, 0.0})});
        out.push_back({"V", proj({0.0, 1.0})});
        out.push_back({"D", proj({s, s})});
        out.push_back({"A", proj({s, -s})});
        out.push_back({"R", proj({s, -i * s})});
        out.push_back({"L", proj({s, i * s})});
        return out;
    }();
    return projs;
}

namespace {

// The 9 settings pair one basis {P, P_perp} per side; each setting's four
// product projectors form a complete measurement.
constexpr int kBasisPairs[3][2] = {{0, 1}, {2, 3}, {4, 5}};  // H/V, D/A, R/L

TomographyInput tomography_projector_set() {
    const auto& pol = polarization_projectors();
    TomographyInput input;
    for (const auto& ga : kBasisPairs)
        for (const auto& gb : kBasisPairs)
            for (int ia : ga)
                for (int ib : gb) {
                    input.labels.push_back(pol[ia].label + pol[ib].label);
                    input.projectors.push_back(kron(pol[ia].projector, pol[ib].projector));
                }
    return input;
}

// Two-qubit Pauli basis sigma_i (x) sigma_j, i,j in {I,X,Y,Z}.
std::vector<ComplexMatrix> pauli_products() {
    std::vector<ComplexMatrix> singles = {ComplexMatrix::identity(2), pauli_x().matrix,
                                          pauli_y().matrix, pauli_z().matrix};
    std::vector<ComplexMatrix> out;
    for (const auto& a : singles)
        for (const auto& b : singles) out.push_back(kron(a, b));
    return out;
}

// Solve the 16x16 normal equations by Gaussian elimination with partial
// pivoting.
std::vector<double> solve_normal(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12)
            throw std::runtime_error("rank-deficient tomography projector set");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace

TomographyInput simulate_tomography(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("tomography set is two-qubit");
    TomographyInput input = tomography_projector_set();
    input.values.reserve(input.projectors.size());
    for (const auto& proj : input.projectors)
        input.values.push_back((proj * rho.matrix()).trace().real());
    return input;
}

TomographyInput simulate_tomography_noisy(const DensityMatrix& rho, double mean_counts,
                                          std::uint64_t seed) {
    TomographyInput input = simulate_tomography(rho);
    // Draw Poisson counts per projector, then renormalize per 4-outcome
    // setting group so the values stay probabilities.
    for (std::size_t g = 0; g < input.values.size(); g += 4) {
        auto rng = engine_for(seed, g / 4);
        double total = 0.0;
        for (std::size_t j = g; j < g + 4; ++j) {
            const double mean = input.values[j] * mean_counts;
            double c = 0.0;
            if (mean > 0.0) {
                std::poisson_distribution<long long> dist(mean);
                c = static_cast<double>(dist(rng));
            }
            input.values[j] = c;
            total += c;
        }
        if (total <= 0.0) throw std::runtime_error("empty tomography setting group");
        for (std::size_t j = g; j < g + 4; ++j) input.values[j] /= total;
    }
    return input;
}

DensityMatrix tomography_reconstruct(const TomographyInput& input) {
    if (input.projectors.size() < 16)
        throw std::invalid_argument("tomography needs at least 16 projectors");
    if (input.projectors.size() != input.values.size())
        throw std::invalid_argument("projector/value length mismatch");

    // rho = sum_k r_k S_k / 4 over the Pauli products S_k; least squares on
    // tr(P_j rho) = m_j.
    const auto basis = pauli_products();
    const std::size_t n = basis.size();
    const std::size_t m = input.projectors.size();
    std::vector<std::vector<double>> design(m, std::vector<double>(n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k)
            design[j][k] = (input.projectors[j] * basis[k]).trace().real() / 4.0;

    std::vector<std::vector<double>> ata(n, std::vector<double>(n, 0.0));
    std::vector<double> atb(n, 0.0);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            atb[k] += design[j][k] * input.values[j];
            for (std::size_t l = 0; l < n; ++l) ata[k][l] += design[j][k] * design[j][l];
        }
    const std::vector<double> r = solve_normal(std::move(ata), std::move(atb));

    ComplexMatrix lin(4, 4);
    for (std::size_t k = 0; k < n; ++k) lin = lin + basis[k] * cplx(r[k] / 4.0, 0.0);

    // Project onto the PSD trace-1 cone: clip negative eigenvalues, rebuild,
    // renormalize the trace.
    ComplexMatrix herm = (lin + lin.adjoint()) * cplx(0.5, 0.0);
    EigenSystem sys = hermitian_eigensystem(herm);
    ComplexMatrix psd(4, 4);
    double tr = 0.0;
    for (std::size_t k = 0; k < sys.values.size(); ++k) {
        const double lam = std::max(sys.values[k], 0.0);
        if (lam == 0.0) continue;
        auto v = sys.vector(k);
        psd = psd + ComplexMatrix::outer(v, v) * cplx(lam, 0.0);
        tr += lam;
    }
    if (tr <= 0.0) throw std::runtime_error("tomography reconstruction collapsed to zero");
    return DensityMatrix(psd * cplx(1.0 / tr, 0.0));
}

}  // namespace qwit
