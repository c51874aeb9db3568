#include "rr1/linalg.hpp"

#include "rr1/errors.hpp"
#include "rr1/gallery.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace rr1;
using namespace rr1::testing;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("svd of identity has unit singular values") {
    SvdResult dec = svd(ComplexMatrix::Identity(3, 3));
    for (int i = 0; i < 3; ++i) CHECK(dec.sigma(i) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("svd of diag(3, 4i) sorts singular values") {
    ComplexMatrix A = ComplexMatrix::Zero(2, 2);
    A(0, 0) = 3.0;
    A(1, 1) = Complex(0.0, 4.0);
    SvdResult dec = svd(A);
    CHECK(dec.sigma(0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(dec.sigma(1) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("svd of a Jordan block: n-1 ones and one zero") {
    SvdResult dec = svd(jordan(10, 0.0));
    for (int i = 0; i < 9; ++i) CHECK(dec.sigma(i) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(dec.sigma(9) <= 1e-13);
}

TEST_CASE("svd invariants on random matrices") {
    auto gen = rng(101);
    for (int n : {3, 8, 20, 50}) {
        ComplexMatrix A = random_matrix(n, gen);
        SvdResult dec = svd(A);
        double tol = 1e-12 * n;
        CHECK((dec.U.adjoint() * dec.U - ComplexMatrix::Identity(n, n)).norm() <= tol);
        CHECK((dec.V.adjoint() * dec.V - ComplexMatrix::Identity(n, n)).norm() <= tol);
        CHECK((A - dec.U * dec.sigma.asDiagonal() * dec.V.adjoint()).norm() <=
              tol * dec.sigma(0));
        for (int i = 0; i + 1 < n; ++i) CHECK(dec.sigma(i) >= dec.sigma(i + 1));
        CHECK(dec.sigma(n - 1) >= 0.0);
    }
}

TEST_CASE("svd phase convention: dominant component of each v_j is real positive") {
    auto gen = rng(7);
    ComplexMatrix A = random_matrix(12, gen);
    SvdResult dec = svd(A);
    for (int j = 0; j < 12; ++j) {
        Eigen::Index p;
        dec.V.col(j).cwiseAbs().maxCoeff(&p);
        CHECK(dec.V(p, j).imag() == doctest::Approx(0.0).epsilon(1e-16));
        CHECK(dec.V(p, j).real() > 0.0);
    }
}

TEST_CASE("svd is deterministic") {
    auto gen = rng(55);
    ComplexMatrix A = random_matrix(9, gen);
    SvdResult a = svd(A), b = svd(A);
    CHECK((a.U - b.U).norm() == 0.0);
    CHECK((a.sigma - b.sigma).norm() == 0.0);
    CHECK((a.V - b.V).norm() == 0.0);
}

TEST_CASE("svd rejects non-finite input") {
    ComplexMatrix A = ComplexMatrix::Zero(2, 2);
    A(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(svd(A), InputError);
}

TEST_CASE("eigen_with_conditions on a normal matrix: all condition numbers 1") {
    std::vector<Complex> d{1.0, 2.0, 3.0};
    auto eigs = eigen_with_conditions(normal_from_eigenvalues(d));
    REQUIRE(eigs.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(eigs[i].lambda.real() == doctest::Approx(static_cast<double>(i + 1)));
        CHECK(eigs[i].cond == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("eigen_with_conditions: residuals, norms and biorthogonality") {
    ComplexMatrix A = sampling(10);
    auto eigs = eigen_with_conditions(A);
    REQUIRE(eigs.size() == 10);
    double scale = A.norm();
    for (const auto& e : eigs) {
        CHECK(e.right.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(e.left.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((A * e.right - e.lambda * e.right).norm() <= 1e-12 * scale);
        CHECK((A.adjoint() * e.left - std::conj(e.lambda) * e.left).norm() <= 1e-10 * scale);
        CHECK(e.cond >= 1.0);
    }
    for (size_t i = 0; i < eigs.size(); ++i)
        for (size_t j = 0; j < eigs.size(); ++j) {
            if (i == j) continue;
            CHECK(std::abs(eigs[i].left.dot(eigs[j].right)) <= 1e-8);
        }
}

TEST_CASE("eigen_with_conditions spans the reported ranges for the gallery matrices") {
    auto conds = [](const ComplexMatrix& A) {
        auto eigs = eigen_with_conditions(A);
        double lo = eigs.front().cond, hi = lo;
        for (const auto& e : eigs) {
            lo = std::min(lo, e.cond);
            hi = std::max(hi, e.cond);
        }
        return std::pair{lo, hi};
    };
    auto [slo, shi] = conds(sampling(10));
    CHECK(slo > 1e2);
    CHECK(slo < 1e4);
    CHECK(shi > 1e5);
    CHECK(shi < 1e7);
    auto [glo, ghi] = conds(grcar(50));
    CHECK(glo > 10.0);
    CHECK(glo < 1e3);
    CHECK(ghi > 1e6);
    CHECK(ghi < 1e8);
}

TEST_CASE("eigen_with_conditions rejects a defective matrix") {
    CHECK_THROWS_AS(eigen_with_conditions(jordan(5, 0.0)), DegeneracyError);
}

TEST_CASE("pinv_apply walks the unit vectors of a Jordan block") {
    SvdResult dec = svd(jordan(10, 0.0));
    ComplexVector vn = dec.v_last();
    // v_n is the first unit vector under the phase convention.
    CHECK(std::abs(vn(0) - 1.0) <= 1e-12);
    for (int j = 1; j <= 9; ++j) {
        ComplexVector x = pinv_apply(dec, vn, j);
        for (int i = 0; i < 10; ++i) {
            double expect = (i == j) ? 1.0 : 0.0;
            CHECK(std::abs(x(i) - expect) <= 1e-12);
        }
    }
}

TEST_CASE("pinv_apply with power zero is the identity") {
    auto gen = rng(3);
    SvdResult dec = svd(planted_zero_matrix(6, gen));
    ComplexVector w = random_complex(6, 1, gen).col(0);
    ComplexVector x = pinv_apply(dec, w, 0);
    CHECK((x - w).norm() == 0.0);
}

TEST_CASE("pinv of diag(2, 0) against the hand-computed pseudoinverse") {
    ComplexMatrix A = ComplexMatrix::Zero(2, 2);
    A(0, 0) = 2.0;
    SvdResult dec = svd(A);
    CHECK(dec.sigma(0) == doctest::Approx(2.0));
    CHECK(dec.sigma(1) == doctest::Approx(0.0));
    // Oracle: pinv(diag(2,0)) = diag(0.5, 0).
    ComplexMatrix P = pinv_dense(dec);
    CHECK(std::abs(P(0, 0) - 0.5) <= 1e-15);
    CHECK(std::abs(P(0, 1)) <= 1e-15);
    CHECK(std::abs(P(1, 0)) <= 1e-15);
    CHECK(std::abs(P(1, 1)) <= 1e-15);
    // A0^+ v_2 vanishes (hence orthogonal to v_2); A0^+ u_1 = v_1 / 2.
    CHECK(pinv_apply(dec, dec.v_last(), 1).norm() <= 1e-15);
    ComplexVector x = pinv_apply(dec, dec.U.col(0), 1);
    CHECK((x - dec.V.col(0) * 0.5).norm() <= 1e-15);
}

TEST_CASE("pinv_apply rejects a double rank deficiency") {
    ComplexMatrix A = ComplexMatrix::Zero(3, 3);
    A(0, 0) = 1.0;
    A(1, 1) = 1e-14;
    SvdResult dec = svd(A);
    ComplexVector w = ComplexVector::Ones(3);
    CHECK_THROWS_AS(pinv_apply(dec, w, 1), RankDeficiencyError);
}

TEST_CASE("pinv range is orthogonal to v_n") {
    auto gen = rng(909);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 4 + rep % 5;
        SvdResult dec = svd(planted_zero_matrix(n, gen));
        ComplexVector w = random_complex(n, 1, gen).col(0);
        ComplexVector x = pinv_apply(dec, w, 1);
        CHECK(std::abs(dec.v_last().dot(x)) <= 1e-10 * x.norm());
    }
}

TEST_SUITE_END();
