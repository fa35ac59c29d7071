#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "primephase/lattice.hpp"

using namespace primephase;

namespace {

// Oracle: the reciprocal vectors are the rows of (A^T)^{-1} where A has the
// primitive vectors as rows; computed here with Eigen, independent of the
// cross-product route the implementation takes.
ReciprocalBasis2D oracle_reciprocal(const LatticeBasis2D& basis) {
    Eigen::Matrix2d a;
    a << basis.a1().x, basis.a1().y, basis.a2().x, basis.a2().y;
    const Eigen::Matrix2d b = a.transpose().inverse();
    return {{b(0, 0), b(0, 1)}, {b(1, 0), b(1, 1)}};
}

ReciprocalBasis3D oracle_reciprocal(const LatticeBasis3D& basis) {
    Eigen::Matrix3d a;
    a << basis.a1().x, basis.a1().y, basis.a1().z,
         basis.a2().x, basis.a2().y, basis.a2().z,
         basis.a3().x, basis.a3().y, basis.a3().z;
    const Eigen::Matrix3d b = a.transpose().inverse();
    return {{b(0, 0), b(0, 1), b(0, 2)}, {b(1, 0), b(1, 1), b(1, 2)}, {b(2, 0), b(2, 1), b(2, 2)}};
}

double vec_diff(Vec2 a, Vec2 b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }
double vec_diff(Vec3 a, Vec3 b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

Vec3 rotate(const Eigen::Matrix3d& r, Vec3 v) {
    const Eigen::Vector3d w = r * Eigen::Vector3d(v.x, v.y, v.z);
    return {w(0), w(1), w(2)};
}

}  // namespace

TEST_CASE("2-D reciprocal vectors: identity and scaled bases") {
    const LatticeBasis2D identity({1, 0}, {0, 1});
    const ReciprocalBasis2D ri = reciprocal(identity);
    CHECK(vec_diff(ri.b1, {1, 0}) == 0.0);
    CHECK(vec_diff(ri.b2, {0, 1}) == 0.0);

    const LatticeBasis2D scaled({2, 0}, {0, 1});
    const ReciprocalBasis2D rs = reciprocal(scaled);
    CHECK(vec_diff(rs.b1, {0.5, 0}) == 0.0);
    CHECK(vec_diff(rs.b2, {0, 1}) == 0.0);
}

TEST_CASE("2-D hexagonal basis matches the matrix-inverse oracle") {
    const LatticeBasis2D hex({1, 0}, {0.5, std::sqrt(3.0) / 2.0});
    const ReciprocalBasis2D r = reciprocal(hex);
    const ReciprocalBasis2D o = oracle_reciprocal(hex);
    CHECK(vec_diff(r.b1, o.b1) < 1e-14);
    CHECK(vec_diff(r.b2, o.b2) < 1e-14);
    // closed form: b1 = (1, -1/sqrt(3)), b2 = (0, 2/sqrt(3))
    CHECK(vec_diff(r.b1, {1.0, -1.0 / std::sqrt(3.0)}) < 1e-14);
    CHECK(vec_diff(r.b2, {0.0, 2.0 / std::sqrt(3.0)}) < 1e-14);
}

TEST_CASE("2-D perpendicularity holds exactly") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec2 a1{dist(rng), dist(rng)};
        const Vec2 a2{dist(rng), dist(rng)};
        if (std::abs(cross(a1, a2)) < 0.1) continue;
        const LatticeBasis2D basis(a1, a2);
        const ReciprocalBasis2D r = reciprocal(basis);
        CHECK(std::abs(dot(r.b1, a2)) < 1e-12);
        CHECK(std::abs(dot(r.b2, a1)) < 1e-12);
    }
}

TEST_CASE("3-D reciprocal vectors: cubic, scaled, and FCC") {
    const LatticeBasis3D cubic({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    const ReciprocalBasis3D rc = reciprocal(cubic);
    CHECK(vec_diff(rc.b1, {1, 0, 0}) == 0.0);
    CHECK(vec_diff(rc.b2, {0, 1, 0}) == 0.0);
    CHECK(vec_diff(rc.b3, {0, 0, 1}) == 0.0);

    const LatticeBasis3D doubled({2, 0, 0}, {0, 2, 0}, {0, 0, 2});
    const ReciprocalBasis3D rd = reciprocal(doubled);
    CHECK(vec_diff(rd.b1, {0.5, 0, 0}) == 0.0);
    CHECK(vec_diff(rd.b2, {0, 0.5, 0}) == 0.0);
    CHECK(vec_diff(rd.b3, {0, 0, 0.5}) == 0.0);

    // FCC primitive cell; the reciprocal basis is BCC-like
    const LatticeBasis3D fcc({0, 0.5, 0.5}, {0.5, 0, 0.5}, {0.5, 0.5, 0});
    const ReciprocalBasis3D rf = reciprocal(fcc);
    const ReciprocalBasis3D of = oracle_reciprocal(fcc);
    CHECK(vec_diff(rf.b1, of.b1) < 1e-12);
    CHECK(vec_diff(rf.b2, of.b2) < 1e-12);
    CHECK(vec_diff(rf.b3, of.b3) < 1e-12);
    CHECK(vec_diff(rf.b1, {-1, 1, 1}) < 1e-12);
    CHECK(vec_diff(rf.b2, {1, -1, 1}) < 1e-12);
    CHECK(vec_diff(rf.b3, {1, 1, -1}) < 1e-12);
}

TEST_CASE("biorthogonality residual") {
    const LatticeBasis3D cubic({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    CHECK(biorthogonality_residual(cubic, reciprocal(cubic)) == 0.0);
    // pairing the cubic basis with itself scaled by 2 leaves a_i.b_i = 2
    CHECK(biorthogonality_residual(cubic, ReciprocalBasis3D{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}) == 1.0);

    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    int tested = 0;
    while (tested < 1000) {
        const Vec3 a1{dist(rng), dist(rng), dist(rng)};
        const Vec3 a2{dist(rng), dist(rng), dist(rng)};
        const Vec3 a3{dist(rng), dist(rng), dist(rng)};
        if (std::abs(dot(a1, cross(a2, a3))) < 1e-2) continue;
        const LatticeBasis3D basis(a1, a2, a3);
        CHECK(biorthogonality_residual(basis, reciprocal(basis)) < 1e-10);
        ++tested;
    }
}

TEST_CASE("reciprocal of the reciprocal reproduces the basis") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    int tested = 0;
    while (tested < 200) {
        const Vec3 a1{dist(rng), dist(rng), dist(rng)};
        const Vec3 a2{dist(rng), dist(rng), dist(rng)};
        const Vec3 a3{dist(rng), dist(rng), dist(rng)};
        if (std::abs(dot(a1, cross(a2, a3))) < 1e-2) continue;
        const LatticeBasis3D basis(a1, a2, a3);
        const ReciprocalBasis3D r = reciprocal(basis);
        const ReciprocalBasis3D rr = reciprocal(LatticeBasis3D(r.b1, r.b2, r.b3));
        const double scale = std::max({norm(a1), norm(a2), norm(a3)});
        CHECK(vec_diff(rr.b1, a1) < 1e-10 * scale);
        CHECK(vec_diff(rr.b2, a2) < 1e-10 * scale);
        CHECK(vec_diff(rr.b3, a3) < 1e-10 * scale);
        ++tested;
    }

    const LatticeBasis2D hex({1, 0}, {0.5, std::sqrt(3.0) / 2.0});
    const ReciprocalBasis2D r2 = reciprocal(hex);
    const ReciprocalBasis2D rr2 = reciprocal(LatticeBasis2D(r2.b1, r2.b2));
    CHECK(vec_diff(rr2.b1, hex.a1()) < 1e-12);
    CHECK(vec_diff(rr2.b2, hex.a2()) < 1e-12);
}

TEST_CASE("reciprocal vectors rotate with the basis") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    int tested = 0;
    while (tested < 100) {
        const Vec3 a1{dist(rng), dist(rng), dist(rng)};
        const Vec3 a2{dist(rng), dist(rng), dist(rng)};
        const Vec3 a3{dist(rng), dist(rng), dist(rng)};
        if (std::abs(dot(a1, cross(a2, a3))) < 1e-2) continue;

        const Eigen::Vector3d axis = Eigen::Vector3d(dist(rng), dist(rng), dist(rng)).normalized();
        const Eigen::Matrix3d rot = Eigen::AngleAxisd(dist(rng) * 3.0, axis).toRotationMatrix();

        const ReciprocalBasis3D plain = reciprocal(LatticeBasis3D(a1, a2, a3));
        const ReciprocalBasis3D rotated =
            reciprocal(LatticeBasis3D(rotate(rot, a1), rotate(rot, a2), rotate(rot, a3)));
        CHECK(vec_diff(rotated.b1, rotate(rot, plain.b1)) < 1e-10);
        CHECK(vec_diff(rotated.b2, rotate(rot, plain.b2)) < 1e-10);
        CHECK(vec_diff(rotated.b3, rotate(rot, plain.b3)) < 1e-10);
        ++tested;
    }
}

TEST_CASE("degenerate bases are rejected") {
    CHECK_THROWS_AS(LatticeBasis2D({1, 0}, {2, 0}), DegenerateBasisError);
    CHECK_THROWS_AS(LatticeBasis2D({1, 1}, {1e-14, 1e-14}), DegenerateBasisError);
    CHECK_THROWS_AS(LatticeBasis3D({1, 0, 0}, {0, 1, 0}, {1, 1, 0}), DegenerateBasisError);
}
