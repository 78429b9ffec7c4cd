#include "qwit/nonlocality.hpp"

#include "qwit/optimize.hpp"
#include "qwit/quantum_ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwit {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

int svetlichny_delta(int x, int y, int z) { return (x == y && y == z) ? -1 : 1; }

double outcome_sign(int a, int b, CorrelatorSign sign) {
    if (sign == CorrelatorSign::OutcomeSum) return ((a + b) % 2 == 0) ? 1.0 : -1.0;
    return (a * b % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

CorrelationTable CorrelationTable::from_state(const DensityMatrix& rho,
                                              const std::array<Observable, 2>& alice,
                                              const std::array<Observable, 2>& bob) {
    if (rho.dim() != 4) throw std::invalid_argument("bipartite table needs a two-qubit state");
    CorrelationTable t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    ComplexMatrix eff = kron(alice[x].projectors[a], bob[y].projectors[b]);
                    t.p[x][y][a][b] = (eff * rho.matrix()).trace().real();
                }
    return t;
}

CorrelationTable CorrelationTable::deterministic(int a0, int a1, int b0, int b1) {
    CorrelationTable t;
    const int as[2] = {a0, a1};
    const int bs[2] = {b0, b1};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) t.p[x][y][as[x]][bs[y]] = 1.0;
    return t;
}

std::vector<CorrelationTable> CorrelationTable::all_deterministic() {
    std::vector<CorrelationTable> boxes;
    boxes.reserve(16);
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1)
            for (int b0 = 0; b0 < 2; ++b0)
                for (int b1 = 0; b1 < 2; ++b1) boxes.push_back(deterministic(a0, a1, b0, b1));
    return boxes;
}

CorrelationTable CorrelationTable::tsirelson() {
    CorrelationTable t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const double s = ((a + b + x * y) % 2 == 0) ? 1.0 : -1.0;
                    t.p[x][y][a][b] = (1.0 + s / kSqrt2) / 4.0;
                }
    return t;
}

CorrelationTable CorrelationTable::pr_box() {
    CorrelationTable t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    t.p[x][y][a][b] = ((a + b) % 2 == (x * y) % 2) ? 0.5 : 0.0;
    return t;
}

CorrelationTable CorrelationTable::mixture(const std::vector<CorrelationTable>& boxes,
                                           const std::vector<double>& weights) {
    if (boxes.size() != weights.size() || boxes.empty())
        throw std::invalid_argument("mixture needs matching non-empty box/weight lists");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < -1e-12) throw std::invalid_argument("mixture weights must be nonnegative");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9) throw std::invalid_argument("mixture weights must sum to 1");
    CorrelationTable t;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) t.p[x][y][a][b] += weights[i] * boxes[i].p[x][y][a][b];
    return t;
}

bool CorrelationTable::is_valid(double tol) const {
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            double s = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    if (p[x][y][a][b] < -tol) return false;
                    s += p[x][y][a][b];
                }
            if (std::abs(s - 1.0) > 1e-8) return false;
        }
    return true;
}

bool CorrelationTable::is_no_signaling(double tol) const {
    for (int x = 0; x < 2; ++x)
        for (int a = 0; a < 2; ++a) {
            double m0 = p[x][0][a][0] + p[x][0][a][1];
            double m1 = p[x][1][a][0] + p[x][1][a][1];
            if (std::abs(m0 - m1) > tol) return false;
        }
    for (int y = 0; y < 2; ++y)
        for (int b = 0; b < 2; ++b) {
            double m0 = p[0][y][0][b] + p[0][y][1][b];
            double m1 = p[1][y][0][b] + p[1][y][1][b];
            if (std::abs(m0 - m1) > tol) return false;
        }
    return true;
}

double CorrelationTable::marginal_a(int x, int a) const {
    // Averaged over y; for signaling experimental tables this is the symmetric
    // estimate.
    return 0.5 * (p[x][0][a][0] + p[x][0][a][1] + p[x][1][a][0] + p[x][1][a][1]);
}

double CorrelationTable::marginal_b(int y, int b) const {
    return 0.5 * (p[0][y][0][b] + p[0][y][1][b] + p[1][y][0][b] + p[1][y][1][b]);
}

double correlator(const CorrelationTable& t, int x, int y, CorrelatorSign sign) {
    double e = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) e += outcome_sign(a, b, sign) * t.p[x][y][a][b];
    return e;
}

BoundVector chsh_f_vector(const CorrelationTable& t) {
    BoundVector f;
    f.tag = VectorTag::Raw;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double v = 0.0;
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) v += ((x * y) % 2 == 0 ? 1.0 : -1.0) * t.p[x][y][a][b];
            f.components.push_back(v);
        }
    return f;
}

double chsh_value(const CorrelationTable& t, CorrelatorSign sign) {
    return correlator(t, 0, 0, sign) + correlator(t, 0, 1, sign) + correlator(t, 1, 0, sign) -
           correlator(t, 1, 1, sign);
}

ChshHierarchy chsh_hierarchy() {
    ChshHierarchy h;
    h.classical = {2.0, 2.0, 2.0, 2.0};
    h.quantum = {2.0 * kSqrt2, 2.0 * kSqrt2, 2.0 * kSqrt2, 2.0 * kSqrt2};
    h.no_signaling = {3.0, 3.0, 3.0, 3.0};
    return h;
}

ChshReport check_chsh_relation(const CorrelationTable& t, CorrelatorSign sign) {
    ChshReport rep;
    rep.s = chsh_value(t, sign);
    rep.f = sort_desc(chsh_f_vector(t));
    ChshHierarchy h = chsh_hierarchy();
    BoundVector classical = from_cumulative(h.classical);
    BoundVector quantum = from_cumulative(h.quantum);
    BoundVector ns = from_cumulative(h.no_signaling);
    rep.classical_ok = majorized_by(rep.f, classical);
    rep.quantum_ok = majorized_by(rep.f, quantum);
    rep.no_signaling_ok = majorized_by(rep.f, ns);
    return rep;
}

double quantum_chsh_value(double theta_rad) {
    const double s = std::sin(2.0 * theta_rad);
    return 2.0 * std::sqrt(1.0 + s * s);
}

std::pair<std::array<Observable, 2>, std::array<Observable, 2>> optimal_chsh_settings(
    double theta_rad) {
    // Alice measures Z and X; Bob measures cos(chi) Z +- sin(chi) X with
    // tan(chi) = sin(2 theta).
    const double chi = std::atan(std::sin(2.0 * theta_rad));
    std::array<Observable, 2> alice = {pauli_z(), pauli_x()};
    std::array<Observable, 2> bob = {xz_plane_observable(chi, "B0"),
                                     xz_plane_observable(-chi, "B1")};
    return {alice, bob};
}

BoundVector covariance_chsh_f_vector(const CorrelationTable& t) {
    double mean_a[2], mean_b[2];
    for (int x = 0; x < 2; ++x) mean_a[x] = t.marginal_a(x, 0) - t.marginal_a(x, 1);
    for (int y = 0; y < 2; ++y) mean_b[y] = t.marginal_b(y, 0) - t.marginal_b(y, 1);
    BoundVector f;
    f.tag = VectorTag::Raw;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const double alpha_a = (a == 0) ? 1.0 : -1.0;
            const double alpha_b = (b == 0) ? 1.0 : -1.0;
            double v = 0.0;
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    v += ((x * y) % 2 == 0 ? 1.0 : -1.0) * (alpha_a - mean_a[x]) *
                         (alpha_b - mean_b[y]) * t.p[x][y][a][b];
            f.components.push_back(v);
        }
    return f;
}

double covariance_chsh_value(const CorrelationTable& t) {
    return covariance_chsh_f_vector(t).total();
}

std::vector<double> covariance_chsh_classical_levels() {
    return {4.0 / 7.0, 8.0 / 7.0, 12.0 / 7.0, 16.0 / 7.0};
}

CovarianceChshReport covariance_chsh(const CorrelationTable& t) {
    CovarianceChshReport rep;
    rep.f = covariance_chsh_f_vector(t);
    rep.sum = rep.f.total();
    rep.f = sort_desc(rep.f);
    rep.classical_ok = majorized_by(rep.f, from_cumulative(covariance_chsh_classical_levels()));
    for (int x = 0; x < 2 && !rep.degenerate_marginal; ++x)
        if (std::abs(std::abs(t.marginal_a(x, 0) - t.marginal_a(x, 1)) - 1.0) < 1e-12)
            rep.degenerate_marginal = true;
    for (int y = 0; y < 2 && !rep.degenerate_marginal; ++y)
        if (std::abs(std::abs(t.marginal_b(y, 0) - t.marginal_b(y, 1)) - 1.0) < 1e-12)
            rep.degenerate_marginal = true;
    return rep;
}

CorrelationTable3 CorrelationTable3::from_state(const DensityMatrix& rho,
                                                const std::array<Observable, 2>& alice,
                                                const std::array<Observable, 2>& bob,
                                                const std::array<Observable, 2>& charlie) {
    if (rho.dim() != 8) throw std::invalid_argument("tripartite table needs a three-qubit state");
    CorrelationTable3 t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int c = 0; c < 2; ++c) {
                            ComplexMatrix eff = kron(
                                kron(alice[x].projectors[a], bob[y].projectors[b]),
                                charlie[z].projectors[c]);
                            t.p[x][y][z][a][b][c] = (eff * rho.matrix()).trace().real();
                        }
    return t;
}

CorrelationTable3 CorrelationTable3::deterministic(const std::array<int, 6>& outputs) {
    CorrelationTable3 t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                t.p[x][y][z][outputs[x]][outputs[2 + y]][outputs[4 + z]] = 1.0;
    return t;
}

CorrelationTable3 CorrelationTable3::svetlichny_ns_box() {
    CorrelationTable3 t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                const int want = (x == y && y == z) ? 1 : 0;  // parity of a+b+c
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int c = 0; c < 2; ++c)
                            if ((a + b + c) % 2 == want) t.p[x][y][z][a][b][c] = 0.25;
            }
    return t;
}

BoundVector svetlichny_f_vector(const CorrelationTable3& t) {
    BoundVector f;
    f.tag = VectorTag::Raw;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const double sgn = ((a + b + c) % 2 == 0) ? 1.0 : -1.0;
                double v = 0.0;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y)
                        for (int z = 0; z < 2; ++z)
                            v += svetlichny_delta(x, y, z) * t.p[x][y][z][a][b][c];
                f.components.push_back(sgn * v);
            }
    return f;
}

double svetlichny_value(const CorrelationTable3& t, CorrelatorSign sign) {
    double s = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                double e = 0.0;
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int c = 0; c < 2; ++c) {
                            double sgn;
                            if (sign == CorrelatorSign::OutcomeSum)
                                sgn = ((a + b + c) % 2 == 0) ? 1.0 : -1.0;
                            else
                                sgn = (a * b * c % 2 == 0) ? 1.0 : -1.0;
                            e += sgn * t.p[x][y][z][a][b][c];
                        }
                s += svetlichny_delta(x, y, z) * e;
            }
    return s;
}

SvetlichnyReport svetlichny_check(const CorrelationTable3& t) {
    SvetlichnyReport rep;
    rep.s = svetlichny_value(t);
    rep.f = sort_desc(svetlichny_f_vector(t));
    auto level = [&](double c0) {
        std::vector<double> lv(8, c0);
        return majorized_by(rep.f, from_cumulative(lv));
    };
    rep.classical_ok = level(4.0);
    rep.quantum_ok = level(4.0 * kSqrt2);
    rep.ns_ok = level(8.0);
    return rep;
}

GhzSvetlichnyResult ghz_optimal_svetlichny() {
    DensityMatrix ghz = ghz3().to_density();
    auto s3_of = [&](std::span<const double> ang) {
        std::array<Observable, 2> a = {xy_plane_observable(ang[0]), xy_plane_observable(ang[1])};
        std::array<Observable, 2> b = {xy_plane_observable(ang[2]), xy_plane_observable(ang[3])};
        std::array<Observable, 2> c = {xy_plane_observable(ang[4]), xy_plane_observable(ang[5])};
        return svetlichny_value(CorrelationTable3::from_state(ghz, a, b, c));
    };

    const double pi = std::numbers::pi;
    GhzSvetlichnyResult best;
    best.value = -1e300;
    // A coarse deterministic seed sweep over quarter-turn offsets, each
    // refined by Nelder-Mead.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<double> x0 = {0.0,          pi / 4 + i * pi / 8, pi / 8,
                                      3 * pi / 8,   j * pi / 8,          pi / 2 + j * pi / 8};
            auto neg = [&](std::span<const double> x) { return -s3_of(x); };
            auto res = nelder_mead(neg, x0, 0.2, 400, 1e-12);
            if (-res.value > best.value + 1e-12) {
                best.value = -res.value;
                for (int k = 0; k < 6; ++k) best.angles_rad[k] = res.x[k];
            }
        }
    return best;
}

void WitnessOperator::validate() const {
    if (alice.empty() || alice.size() != alpha.size())
        throw std::invalid_argument("witness coefficient/observable shape mismatch");
    for (const auto& row : alpha)
        if (row.size() != bob.size())
            throw std::invalid_argument("witness coefficient/observable shape mismatch");
    ComplexMatrix sum(op.rows(), op.cols());
    for (std::size_t x = 0; x < alice.size(); ++x)
        for (std::size_t y = 0; y < bob.size(); ++y)
            sum = sum + kron(alice[x].matrix, bob[y].matrix) * cplx(alpha[x][y], 0.0);
    if (sum.max_abs_diff(op) > 1e-9)
        throw std::invalid_argument("witness decomposition does not reconstruct the operator");
}

BoundVector WitnessOperator::f_vector(const DensityMatrix& rho) const {
    BoundVector f;
    f.tag = VectorTag::Raw;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double v = 0.0;
            for (std::size_t x = 0; x < alice.size(); ++x)
                for (std::size_t y = 0; y < bob.size(); ++y) {
                    ComplexMatrix eff = kron(alice[x].projectors[a], bob[y].projectors[b]);
                    const double p = (eff * rho.matrix()).trace().real();
                    v += alpha[x][y] * alice[x].eigenvalues[a] * bob[y].eigenvalues[b] * p;
                }
            f.components.push_back(v);
        }
    return f;
}

double WitnessOperator::expectation_value(const DensityMatrix& rho) const {
    return (op * rho.matrix()).trace().real();
}

WitnessOperator WitnessOperator::bell_phi_plus() {
    WitnessOperator w;
    w.label = "bell-phi-plus";
    Observable id = Observable::from_matrix("I", ComplexMatrix::identity(2));
    w.alice = {id, pauli_x(), pauli_y(), pauli_z()};
    w.bob = w.alice;
    w.alpha.assign(4, std::vector<double>(4, 0.0));
    w.alpha[0][0] = -0.25;
    w.alpha[1][1] = 0.25;
    w.alpha[2][2] = -0.25;
    w.alpha[3][3] = 0.25;
    PureState phi = phi_theta(std::numbers::pi / 4.0);  // |Phi+>
    ComplexMatrix proj = phi.to_density().matrix();
    w.op = proj - ComplexMatrix::identity(4) * cplx(0.5, 0.0);
    w.validate();
    return w;
}

WitnessReport witness_uncertainty_relation(const WitnessOperator& w, const DensityMatrix& rho) {
    w.validate();
    WitnessReport rep;
    rep.f = sort_desc(w.f_vector(rho));
    rep.value = w.expectation_value(rho);

    const std::size_t n = rep.f.components.size();
    auto product_table = [&](std::span<const double> ang) {
        PureState a = bloch_pure(ang[0], ang[1]);
        PureState b = bloch_pure(ang[2], ang[3]);
        DensityMatrix prod = tensor(a.to_density(), b.to_density());
        return w.f_vector(prod);
    };

    // Per-level separable maxima over product pure states: deterministic
    // angle grid multi-started into Nelder-Mead on each prefix objective.
    const double pi = std::numbers::pi;
    rep.c_s_levels.assign(n, -1e300);
    rep.c_separable = -1e300;
    std::vector<std::vector<double>> seeds;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    seeds.push_back({(i + 0.5) * pi / 4, j * pi / 2, (k + 0.5) * pi / 4, l * pi / 2});
    for (std::size_t lvl = 1; lvl <= n; ++lvl) {
        auto objective = [&](std::span<const double> ang) {
            auto table = sort_desc(product_table(ang)).components;
            double s = 0.0;
            for (std::size_t i = 0; i < lvl; ++i) s += table[i];
            return -s;
        };
        double best = -1e300;
        for (const auto& s0 : seeds) {
            auto res = nelder_mead(objective, s0, 0.3, 200, 1e-10);
            best = std::max(best, -res.value);
        }
        rep.c_s_levels[lvl - 1] = best;
    }
    // Total tr(rho_prod E) ceiling is the full-level objective.
    rep.c_separable = rep.c_s_levels.back();

    rep.violated = !majorized_by(rep.f, from_cumulative(rep.c_s_levels), 1e-7);
    return rep;
}

}  // namespace qwit
