#include "primephase/lattice.hpp"

namespace primephase {

namespace {
constexpr double kDegenerateTol = 1e-12;
}

LatticeBasis2D::LatticeBasis2D(Vec2 a1, Vec2 a2) : a1_(a1), a2_(a2) {
    const double area = std::abs(cross(a1, a2));
    if (area <= kDegenerateTol * norm(a1) * norm(a2)) {
        throw DegenerateBasisError("a1 and a2 are (nearly) collinear");
    }
}

LatticeBasis3D::LatticeBasis3D(Vec3 a1, Vec3 a2, Vec3 a3) : a1_(a1), a2_(a2), a3_(a3) {
    const double volume = std::abs(dot(a1, cross(a2, a3)));
    if (volume <= kDegenerateTol * norm(a1) * norm(a2) * norm(a3)) {
        throw DegenerateBasisError("cell volume a1.(a2 x a3) is (nearly) zero");
    }
}

ReciprocalBasis2D reciprocal(const LatticeBasis2D& basis) {
    const Vec2 a1 = basis.a1();
    const Vec2 a2 = basis.a2();
    // n . (a1 x a2) with n = +z is the signed area; the formulas stay valid
    // for either orientation of the pair.
    const double signed_area = cross(a1, a2);
    // a2 x n = (a2.y, -a2.x), n x a1 = (-a1.y, a1.x)
    return {{a2.y / signed_area, -a2.x / signed_area},
            {-a1.y / signed_area, a1.x / signed_area}};
}

ReciprocalBasis3D reciprocal(const LatticeBasis3D& basis) {
    const Vec3 a1 = basis.a1();
    const Vec3 a2 = basis.a2();
    const Vec3 a3 = basis.a3();
    const double volume = dot(a1, cross(a2, a3));
    const Vec3 c1 = cross(a2, a3);
    const Vec3 c2 = cross(a3, a1);
    const Vec3 c3 = cross(a1, a2);
    return {{c1.x / volume, c1.y / volume, c1.z / volume},
            {c2.x / volume, c2.y / volume, c2.z / volume},
            {c3.x / volume, c3.y / volume, c3.z / volume}};
}

double biorthogonality_residual(const LatticeBasis2D& basis, const ReciprocalBasis2D& recip) {
    const Vec2 a[2] = {basis.a1(), basis.a2()};
    const Vec2 b[2] = {recip.b1, recip.b2};
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot(a[i], b[j]) - target));
        }
    }
    return worst;
}

double biorthogonality_residual(const LatticeBasis3D& basis, const ReciprocalBasis3D& recip) {
    const Vec3 a[3] = {basis.a1(), basis.a2(), basis.a3()};
    const Vec3 b[3] = {recip.b1, recip.b2, recip.b3};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot(a[i], b[j]) - target));
        }
    }
    return worst;
}

}  // namespace primephase
