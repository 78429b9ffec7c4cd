#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwit/eig.hpp"
#include "qwit/measurement.hpp"
#include "qwit/quantum_ops.hpp"
#include "qwit/states.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace qwit;

namespace {

const double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return (m + m.adjoint()) * cplx(0.5, 0.0);
}

PureState random_pure(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<cplx> v(n);
    double norm = 0.0;
    for (auto& a : v) {
        a = cplx(dist(rng), dist(rng));
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : v) a /= norm;
    return PureState(v);
}

}  // namespace

TEST_CASE("complex matrix basics") {
    ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(id.trace() == cplx(3.0, 0.0));
    CHECK(id.is_hermitian());

    ComplexMatrix a = ComplexMatrix::from_rows({{cplx(0, 0), cplx(0, -1)}, {cplx(0, 1), cplx(0, 0)}});
    CHECK(a.is_hermitian());
    CHECK((a * a).max_abs_diff(ComplexMatrix::identity(2)) < 1e-15);

    auto u = std::vector<cplx>{1.0, 0.0};
    ComplexMatrix p = ComplexMatrix::outer(u, u);
    CHECK(p(0, 0) == cplx(1.0, 0.0));
    CHECK(p(1, 1) == cplx(0.0, 0.0));

    ComplexMatrix k = kron(ComplexMatrix::identity(2), a);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == cplx(0, -1));
    CHECK(k(2, 3) == cplx(0, -1));
    CHECK(k(0, 3) == cplx(0, 0));
}

TEST_CASE("Jacobi eigensolver matches known spectra") {
    EigenSystem sx = hermitian_eigensystem(pauli_x().matrix);
    REQUIRE(sx.values.size() == 2);
    CHECK(sx.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sx.values[1] == doctest::Approx(1.0).epsilon(1e-12));

    EigenSystem sw = hermitian_eigensystem(w_observable().matrix);
    CHECK(sw.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sw.values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Jacobi eigensolver reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(7);
    for (std::size_t n : {2u, 3u, 4u, 8u}) {
        for (int trial = 0; trial < 20; ++trial) {
            ComplexMatrix h = random_hermitian(n, rng);
            EigenSystem sys = hermitian_eigensystem(h);
            ComplexMatrix rebuilt(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                auto v = sys.vector(k);
                rebuilt = rebuilt + ComplexMatrix::outer(v, v) * cplx(sys.values[k], 0.0);
            }
            CHECK(rebuilt.max_abs_diff(h) < 1e-10);
            for (std::size_t k = 0; k + 1 < n; ++k) CHECK(sys.values[k] <= sys.values[k + 1]);
            // Orthonormality of eigenvectors.
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const double expected = (k == l) ? 1.0 : 0.0;
                    CHECK(std::abs(inner(sys.vector(k), sys.vector(l))) ==
                          doctest::Approx(expected).epsilon(1e-9));
                }
        }
    }
}

TEST_CASE("density matrix validation") {
    CHECK_NOTHROW(DensityMatrix::maximally_mixed(4));
    CHECK_NOTHROW(phi_theta(kPi / 3).to_density());

    ComplexMatrix bad = ComplexMatrix::identity(2);  // trace 2
    CHECK_THROWS(DensityMatrix(bad));

    ComplexMatrix nonherm = ComplexMatrix::from_rows({{cplx(0.5, 0), cplx(0.3, 0)},
                                                      {cplx(0.0, 0), cplx(0.5, 0)}});
    CHECK_THROWS(DensityMatrix(nonherm));

    ComplexMatrix indefinite = ComplexMatrix::from_rows({{cplx(1.5, 0), cplx(0, 0)},
                                                         {cplx(0, 0), cplx(-0.5, 0)}});
    CHECK_THROWS(DensityMatrix(indefinite));
}

TEST_CASE("phi_theta state amplitudes and marginals") {
    const double theta = kPi / 6;  // 30 degrees
    PureState psi = phi_theta(theta);
    CHECK(std::abs(psi.amplitudes()[0] - cplx(std::sin(theta), 0)) < 1e-15);
    CHECK(std::abs(psi.amplitudes()[3] - cplx(std::cos(theta), 0)) < 1e-15);
    CHECK(std::abs(psi.amplitudes()[1]) == 0.0);

    DensityMatrix rho = psi.to_density();
    DensityMatrix reduced = partial_trace(rho, 0, {2, 2});
    auto pz = born_probabilities(reduced, z_basis());
    CHECK(pz[0] == doctest::Approx(std::sin(theta) * std::sin(theta)).epsilon(1e-12));
    CHECK(pz[1] == doctest::Approx(std::cos(theta) * std::cos(theta)).epsilon(1e-12));
    // The reduced state is diagonal: both subsystems agree.
    DensityMatrix reduced_b = partial_trace(rho, 1, {2, 2});
    CHECK(reduced.matrix().max_abs_diff(reduced_b.matrix()) < 1e-12);
}

TEST_CASE("measurement factories are rank-1 projective POVMs") {
    for (const Measurement& m : {z_basis(), x_basis(), gk_basis(), basis_phi(0.3)}) {
        CHECK_NOTHROW(m.validate());
        CHECK(m.is_rank_one_projective());
    }
    // A non-POVM set fails validation.
    Measurement bad;
    bad.label = "bad";
    bad.effects = {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
    CHECK_THROWS(bad.validate());
}

TEST_CASE("observable eigenvalue ordering: outcome 0 carries +1") {
    for (const Observable& o : {pauli_x(), pauli_z(), w_observable()}) {
        REQUIRE(o.eigenvalues.size() == 2);
        CHECK(o.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(o.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
    }
    // K = (sqrt3|H> + |V>)/2 is the +1 eigenvector of W and outcome 0 of gk_basis.
    Observable w = w_observable();
    auto vk = std::vector<cplx>{std::sqrt(3.0) / 2.0, 0.5};
    ComplexMatrix pk = ComplexMatrix::outer(vk, vk);
    CHECK(w.projectors[0].max_abs_diff(pk) < 1e-10);
    CHECK(gk_basis().effects[0].max_abs_diff(pk) < 1e-10);
}

TEST_CASE("Born probabilities") {
    DensityMatrix plus = bloch_pure(kPi / 2, 0.0).to_density();
    auto pz = born_probabilities(plus, z_basis());
    CHECK(pz[0] == doctest::Approx(0.5).epsilon(1e-12));
    auto px = born_probabilities(plus, x_basis());
    CHECK(px[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(px[1] == doctest::Approx(0.0).epsilon(1e-10));

    // Dimension mismatch.
    CHECK_THROWS(born_probabilities(DensityMatrix::maximally_mixed(4), z_basis()));
}

TEST_CASE("max_overlap of the measurement pairs") {
    CHECK(max_overlap(x_basis(), z_basis()) == doctest::Approx(kInvSqrt2).epsilon(1e-10));
    // Z and W eigenbases are 30 degrees apart on the Bloch sphere.
    CHECK(max_overlap(z_basis(), gk_basis()) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-10));
    CHECK(max_overlap(x_basis(), gk_basis()) ==
          doctest::Approx(std::abs(std::cos(kPi / 12))).epsilon(1e-10));
}

TEST_CASE("fidelity") {
    std::mt19937_64 rng(11);
    DensityMatrix a = phi_theta(kPi / 4).to_density();
    CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-10));
    DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
    CHECK(fidelity(a, mixed) == doctest::Approx(0.25).epsilon(1e-9));
    // Pure-state fidelity equals squared overlap.
    for (int i = 0; i < 10; ++i) {
        PureState u = random_pure(4, rng);
        PureState v = random_pure(4, rng);
        const double overlap2 = std::norm(inner(u.amplitudes(), v.amplitudes()));
        CHECK(fidelity(u.to_density(), v.to_density()) ==
              doctest::Approx(overlap2).epsilon(1e-7));
    }
}

TEST_CASE("expectation and tensor") {
    DensityMatrix phi = phi_theta(kPi / 4).to_density();
    CHECK(expectation(phi, kron(pauli_z().matrix, pauli_z().matrix)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(expectation(phi, kron(pauli_x().matrix, pauli_x().matrix)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    DensityMatrix prod = tensor(bloch_state(0, 0, 1), bloch_state(1, 0, 0));
    CHECK(expectation(prod, kron(pauli_z().matrix, pauli_x().matrix)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ghz state") {
    DensityMatrix ghz = ghz3().to_density();
    CHECK(ghz.dim() == 8);
    CHECK(expectation(ghz, kron(kron(pauli_x().matrix, pauli_x().matrix), pauli_x().matrix)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}
