#include "rr1/bounds.hpp"

#include "rr1/errors.hpp"
#include "rr1/field.hpp"
#include "rr1/gallery.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace rr1;
using namespace rr1::testing;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("jordan_disk_radius solves r^n/(1-r) = eps") {
    double r = jordan_disk_radius(10, 1e-3);
    CHECK(r == doctest::Approx(0.470).epsilon(0.002));
    CHECK(std::pow(r, 10) / (1.0 - r) == doctest::Approx(1e-3).epsilon(1e-8));
    // sandwich against the closed-form anchors
    CHECK(0.5 * std::pow(1e-3, 0.1) < r);
    CHECK(r < std::pow(1e-3, 0.1));
}

TEST_CASE("jordan_disk_radius always dominates eps^{1/n}/2") {
    auto gen = rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 2 + static_cast<int>(gen() % 20);
        double eps = std::pow(10.0, -6.0 * u(gen)) * 0.999;
        double r = jordan_disk_radius(n, eps);
        CHECK(r >= 0.5 * std::pow(eps, 1.0 / n) - 1e-12);
        CHECK(r > 0.0);
        CHECK(r < 1.0);
    }
}

TEST_CASE("jordan_ratio_bound formula and domain") {
    CHECK(jordan_ratio_bound(Complex(0.0), 10) == 0.0);
    double r = 0.470;
    CHECK(jordan_ratio_bound(Complex(r, 0.0), 10) == doctest::Approx(1e-3).epsilon(0.01));
    CHECK_THROWS_AS(jordan_ratio_bound(Complex(1.0, 0.0), 5), DomainError);
    CHECK_THROWS_AS(jordan_ratio_bound(Complex(0.8, 0.8), 5), DomainError);
}

TEST_CASE("jordan_ratio_bound dominates the measured ratio") {
    ComplexMatrix J = jordan(8, 0.0);
    auto gen = rng(17);
    std::uniform_real_distribution<double> rad(0.05, 0.9);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int rep = 0; rep < 100; ++rep) {
        Complex z = std::polar(rad(gen), ang(gen));
        CHECK(rank1_ratio(J, z) <= jordan_ratio_bound(z, 8) + 1e-12);
    }
}

TEST_CASE("thm4_bounds on a Jordan block reduce to powers of |z|") {
    SvdResult dec = svd(jordan(10, 0.0));
    auto gen = rng(23);
    std::uniform_real_distribution<double> rad(0.05, 0.9);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int rep = 0; rep < 20; ++rep) {
        Complex z = std::polar(rad(gen), ang(gen));
        Thm4Bounds b = thm4_bounds(dec, z, 12);
        REQUIRE(b.inf_bound.has_value());
        CHECK(std::abs(*b.inf_bound - std::pow(std::abs(z), 10)) <= 1e-12);
    }
}

TEST_CASE("thm4_bounds vanish at z = 0") {
    auto gen = rng(29);
    SvdResult dec = svd(planted_zero_matrix(7, gen));
    Thm4Bounds b = thm4_bounds(dec, Complex(0.0), 5);
    CHECK(b.vec_bound <= 1e-15);
    CHECK(b.scalar_bound == 0.0);
    REQUIRE(b.inf_bound.has_value());
    CHECK(*b.inf_bound == 0.0);
}

TEST_CASE("thm4_bounds are upper bounds and ordered, against the SVD oracle") {
    auto gen = rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int rep = 0; rep < 60; ++rep) {
        ComplexMatrix A0 = planted_zero_matrix(8, gen);
        SvdResult dec = svd(A0);
        Complex z = std::polar(0.5 * dec.sigma_second() * u(gen), ang(gen));
        int k = 1 + static_cast<int>(gen() % 6);
        Thm4Bounds b = thm4_bounds(dec, z, k);

        // Oracle: smallest singular value of A0 - zI computed directly.
        ComplexMatrix M = A0;
        M.diagonal().array() -= z;
        double truth = svd(M).sigma.minCoeff();

        CHECK(truth <= b.vec_bound + 1e-12);
        CHECK(b.vec_bound <= b.scalar_bound + 1e-12);
        REQUIRE(b.inf_bound.has_value());
        CHECK(truth <= *b.inf_bound + 1e-12);
    }
}

TEST_CASE("thm4_bounds omit the resolvent form outside its guard") {
    auto gen = rng(37);
    SvdResult dec = svd(planted_zero_matrix(6, gen));
    Complex z(dec.sigma_second() * 1.5, 0.0);
    Thm4Bounds b = thm4_bounds(dec, z, 3);
    CHECK_FALSE(b.inf_bound.has_value());
    CHECK(b.scalar_bound > 0.0);
}

TEST_CASE("thm4_bounds reject a double rank deficiency") {
    ComplexMatrix A = ComplexMatrix::Zero(4, 4);
    A(0, 0) = 1.0;
    A(1, 1) = 0.5;
    SvdResult dec = svd(A); // two zero singular values
    CHECK_THROWS_AS(thm4_bounds(dec, Complex(0.1), 2), RankDeficiencyError);
}

TEST_CASE("Wielandt-Hoffman sandwich for sigma_{n-1}") {
    auto gen = rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 4 + static_cast<int>(gen() % 5);
        ComplexMatrix B = random_matrix(n, gen);
        Complex z(u(gen), u(gen));
        ComplexMatrix Bz = B;
        Bz.diagonal().array() -= z;
        double s_base = svd(B).sigma_second();
        double s_shift = svd(Bz).sigma_second();
        CHECK(std::abs(s_shift - s_base) <= std::abs(z) + 1e-12);
    }
}

TEST_CASE("orthogonality_profile of grcar(50) reproduces the reported numbers") {
    ComplexMatrix A = grcar(50);
    auto eigs = eigen_with_conditions(A);
    size_t best = 0;
    for (size_t i = 0; i < eigs.size(); ++i)
        if (eigs[i].cond > eigs[best].cond) best = i;
    OrthogonalityProfile p = orthogonality_profile(A, eigs[best].lambda, 5);
    CHECK(p.sigma_second == doctest::Approx(0.81).epsilon(0.03));
    CHECK(p.raw[0] == doctest::Approx(4.6e-8).epsilon(0.5));
    REQUIRE(p.raw.size() == 6);
    REQUIRE(p.normalized.size() == 6);
    double lo = p.normalized[1], hi = p.normalized[1];
    for (int j = 1; j <= 5; ++j) {
        lo = std::min(lo, p.normalized[static_cast<size_t>(j)]);
        hi = std::max(hi, p.normalized[static_cast<size_t>(j)]);
    }
    CHECK(lo == doctest::Approx(1.1e-7).epsilon(0.7));
    CHECK(hi == doctest::Approx(4.0e-3).epsilon(0.7));
}

TEST_CASE("orthogonality_profile of a Jordan block is exactly the unit-vector walk") {
    OrthogonalityProfile p = orthogonality_profile(jordan(10, 0.0), Complex(0.0), 9);
    REQUIRE(p.raw.size() == 10);
    for (int j = 0; j <= 8; ++j) CHECK(p.raw[static_cast<size_t>(j)] <= 1e-12);
    CHECK(p.raw[9] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.normalized[9] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("profile raw[0] equals the reciprocal eigenvalue condition number") {
    // Modestly conditioned instances: the two routes (SVD null vectors vs
    // left/right eigenvectors) agree to full precision.
    auto gen = rng(43);
    for (int rep = 0; rep < 8; ++rep) {
        int n = 5 + static_cast<int>(gen() % 3);
        ComplexMatrix A = random_matrix(n, gen);
        auto eigs = eigen_with_conditions(A);
        const EigenInfo& e = eigs[static_cast<size_t>(rep) % eigs.size()];
        OrthogonalityProfile p = orthogonality_profile(A, e.lambda, 0);
        CHECK(p.raw[0] == doctest::Approx(1.0 / e.cond).epsilon(1e-8));
    }
}

TEST_CASE("orthogonality_profile rejects a non-eigenvalue shift") {
    CHECK_THROWS_AS(orthogonality_profile(grcar(10), Complex(40.0, 0.0), 3), InputError);
}

TEST_CASE("region_memberships at the eigenvalue itself") {
    RegionFlags f = region_memberships(sampling(10), Complex(5.0), 1e-3, Complex(5.0));
    CHECK(f.ineq1);
    CHECK(f.ineq2);
    CHECK(f.pseudo_ineq);
}

TEST_CASE("region_memberships on a Jordan block matches the disk radius") {
    ComplexMatrix J = jordan(10, 0.0);
    EigenvalueBoundsContext ctx(J, Complex(0.0), 100);
    // ineq1 holds up to the root of r^10 = 1e-3 (1 - r), about 0.470.
    for (double radius : {0.10, 0.25, 0.40, 0.46}) {
        RegionFlags f = ctx.flags(1e-3, Complex(radius, 0.0));
        CHECK(f.ineq1);
        // soundness against the direct SVD
        CHECK(rank1_ratio(J, Complex(radius, 0.0)) < 1e-3);
    }
    CHECK_FALSE(ctx.flags(1e-3, Complex(0.48, 0.0)).ineq1);
    // the one-shot wrapper agrees with the cached context
    RegionFlags direct = region_memberships(J, Complex(0.0), 1e-3, Complex(0.25, 0.0));
    CHECK(direct.ineq1 == ctx.flags(1e-3, Complex(0.25, 0.0)).ineq1);
}

TEST_CASE("ineq2 certifies at least as much as ineq1 on sampled disks") {
    ComplexMatrix A = grcar(50);
    auto eigs = eigen_with_conditions(A);
    size_t best = 0;
    for (size_t i = 0; i < eigs.size(); ++i)
        if (eigs[i].cond > eigs[best].cond) best = i;
    EigenvalueBoundsContext ctx(A, eigs[best].lambda, 100);

    auto gen = rng(47);
    std::uniform_real_distribution<double> rad(0.0, 0.75);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    int count1 = 0, count2 = 0;
    for (int rep = 0; rep < 200; ++rep) {
        Complex z = ctx.lambda() + std::polar(rad(gen), ang(gen));
        RegionFlags f = ctx.flags(1e-3, z);
        count1 += f.ineq1;
        count2 += f.ineq2;
        if (f.ineq2) CHECK(rank1_ratio(A, z) < 1e-3);
    }
    CHECK(count1 > 0);
    CHECK(count2 > count1);
}

TEST_CASE("relation_disks with unit second singular values") {
    // diag(0,1,2,3): every A - lambda_j I has second smallest singular value 1.
    ComplexMatrix D = normal_from_eigenvalues({0.0, 1.0, 2.0, 3.0});
    auto disks = relation_disks(D, 2.0);
    REQUIRE(disks.size() == 4);
    for (const auto& d : disks) {
        CHECK(d.disk.radius == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(d.eps_forward_factor == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(d.eps_backward_factor == doctest::Approx(1.5).epsilon(1e-12));
    }
}

TEST_CASE("a Jordan shift has unit second singular value (disk radius 1/r)") {
    SvdResult dec = svd(jordan(12, 0.0));
    CHECK(dec.sigma_second() == doctest::Approx(1.0).epsilon(1e-12));
    // relation_disks itself must refuse the defective matrix
    CHECK_THROWS_AS(relation_disks(jordan(12, 0.0), 2.0), DegeneracyError);
}

TEST_CASE("relation_disks inclusions hold pointwise inside the disks") {
    ComplexMatrix A = grcar(12);
    auto disks = relation_disks(A, 2.0);
    double fwd = disks.front().eps_forward_factor;
    double bwd = disks.front().eps_backward_factor;

    auto gen = rng(53);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int rep = 0; rep < 200; ++rep) {
        const auto& d = disks[static_cast<size_t>(rep) % disks.size()];
        Complex z = d.disk.center + std::polar(d.disk.radius * u(gen) * 0.999, ang(gen));
        double ratio = rank1_ratio(A, z);
        double sn = inv_resolvent_norm(A, z);
        CHECK(ratio <= sn * fwd * (1.0 + 1e-9) + 1e-15);
        CHECK(sn <= ratio * bwd * (1.0 + 1e-9) + 1e-15);
    }
}

TEST_CASE("relation_disks rejects r <= 1") {
    CHECK_THROWS_AS(relation_disks(grcar(5), 1.0), DomainError);
}

TEST_SUITE_END();
