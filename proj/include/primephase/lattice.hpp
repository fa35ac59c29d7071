#pragma once

#include <cmath>

#include "primephase/errors.hpp"

namespace primephase {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
inline double dot(Vec3 a, Vec3 b) noexcept { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// z-component of the 3-D cross product of two in-plane vectors.
inline double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }

inline Vec3 cross(Vec3 a, Vec3 b) noexcept {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec2 a) noexcept { return std::sqrt(dot(a, a)); }
inline double norm(Vec3 a) noexcept { return std::sqrt(dot(a, a)); }

/// Primitive vectors of a 2-D Bravais lattice.  The lattice plane is
/// embedded in 3-D with unit normal +z.  Construction rejects (near-)
/// collinear pairs; the tolerance is relative to |a1||a2| so the check is
/// independent of the length unit.
class LatticeBasis2D {
  public:
    LatticeBasis2D(Vec2 a1, Vec2 a2);

    Vec2 a1() const noexcept { return a1_; }
    Vec2 a2() const noexcept { return a2_; }

  private:
    Vec2 a1_, a2_;
};

/// Primitive vectors of a 3-D Bravais lattice; the cell volume
/// a1.(a2 x a3) must be nonzero (same relative tolerance).
class LatticeBasis3D {
  public:
    LatticeBasis3D(Vec3 a1, Vec3 a2, Vec3 a3);

    Vec3 a1() const noexcept { return a1_; }
    Vec3 a2() const noexcept { return a2_; }
    Vec3 a3() const noexcept { return a3_; }

  private:
    Vec3 a1_, a2_, a3_;
};

/// Reciprocal vectors satisfying a_i . b_j = delta_ij (no 2*pi factor).
struct ReciprocalBasis2D {
    Vec2 b1, b2;
};

struct ReciprocalBasis3D {
    Vec3 b1, b2, b3;
};

/// b1 = (a2 x n) / (n . (a1 x a2)), b2 = (n x a1) / (n . (a1 x a2)),
/// with n the +z unit normal.  b1 is perpendicular to a2 and b2 to a1.
ReciprocalBasis2D reciprocal(const LatticeBasis2D& basis);

/// b1 = (a2 x a3) / (a1 . (a2 x a3)) and cyclic permutations.
ReciprocalBasis3D reciprocal(const LatticeBasis3D& basis);

/// max over i,j of |a_i . b_j - delta_ij|.
double biorthogonality_residual(const LatticeBasis2D& basis, const ReciprocalBasis2D& recip);
double biorthogonality_residual(const LatticeBasis3D& basis, const ReciprocalBasis3D& recip);

}  // namespace primephase
