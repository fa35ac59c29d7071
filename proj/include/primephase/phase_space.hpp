#pragma once

#include <cstdint>
#include <vector>

#include "primephase/finite_field.hpp"
#include "primephase/linalg.hpp"
#include "primephase/weyl.hpp"

namespace primephase {

/// One of the N^2 points of the discrete phase space: position q and
/// momentum p, both GF(N) residues of the same prime modulus.
struct PhasePoint {
    FieldElement q;
    FieldElement p;

    PhasePoint(FieldElement q_, FieldElement p_);

    std::int64_t dim() const noexcept { return q.modulus().value(); }
};

/// Real N x N table over phase space, W(q, p).
class WignerFunction {
  public:
    explicit WignerFunction(std::int64_t dim)
        : dim_(dim), values_(static_cast<std::size_t>(dim * dim), 0.0) {}

    std::int64_t dim() const noexcept { return dim_; }
    double& operator()(std::int64_t q, std::int64_t p) noexcept { return values_[q * dim_ + p]; }
    double operator()(std::int64_t q, std::int64_t p) const noexcept { return values_[q * dim_ + p]; }
    const std::vector<double>& values() const noexcept { return values_; }

    double sum() const noexcept;

  private:
    std::int64_t dim_;
    std::vector<double> values_;
};

/// Complex N x N table of expansion coefficients; same shape as the Wigner
/// table (the Wigner function is this table for a Hermitian operator, where
/// the coefficients are real).
class CoefficientTable {
  public:
    explicit CoefficientTable(std::int64_t dim)
        : dim_(dim), values_(static_cast<std::size_t>(dim * dim), cplx(0.0)) {}

    std::int64_t dim() const noexcept { return dim_; }
    cplx& operator()(std::int64_t q, std::int64_t p) noexcept { return values_[q * dim_ + p]; }
    cplx operator()(std::int64_t q, std::int64_t p) const noexcept { return values_[q * dim_ + p]; }
    cplx* data() noexcept { return values_.data(); }
    const cplx* data() const noexcept { return values_.data(); }

  private:
    std::int64_t dim_;
    std::vector<cplx> values_;
};

/// Parity operator, |x> -> |-x mod N>.
CMatrix parity_operator(std::int64_t n);

/// Phase-space point operator A(q,p).  Hermitian, Tr A = 1, and the N^2 of
/// them are Hilbert-Schmidt orthogonal: Tr[A(x) A(y)] = N delta_xy.
///
/// Odd N: displaced parity, A(q,p) = D(q,p) P D(q,p)^dag.
/// N = 2: the line-based qubit construction
///     A(q,p) = (I + (-1)^q Z + (-1)^p X + (-1)^{q+p} Y) / 2,  Y = i X Z.
CMatrix point_operator(const PhasePoint& point);

/// All N^2 point operators, built once (in parallel) and shared read-only.
class PointOperatorCache {
  public:
    explicit PointOperatorCache(std::int64_t dim);

    std::int64_t dim() const noexcept { return dim_; }

    /// Contiguous N^2-entry block of A(q,p), row-major.
    const cplx* raw(std::int64_t q, std::int64_t p) const noexcept {
        return slab_.data() + static_cast<std::size_t>((q * dim_ + p) * dim_ * dim_);
    }
    const cplx* slab() const noexcept { return slab_.data(); }

    CMatrix matrix(std::int64_t q, std::int64_t p) const;

  private:
    std::int64_t dim_;
    std::vector<cplx> slab_;
};

/// Expansion coefficients o(q,p) = Tr[O A(q,p)] / N, so that
/// O = sum_{q,p} o(q,p) A(q,p).
CoefficientTable weyl_expand(const CMatrix& op, const PointOperatorCache& cache);
CoefficientTable weyl_expand(const CMatrix& op);

/// Reassemble sum_{q,p} coeffs(q,p) A(q,p).
CMatrix reconstruct(const CoefficientTable& coeffs, const PointOperatorCache& cache);
CMatrix reconstruct(const CoefficientTable& coeffs);

/// W(q,p) = Tr[rho A(q,p)] / N.  Requires Hermitian input
/// (NonHermitianInput otherwise); the result is real with
/// sum_{q,p} W(q,p) = Tr rho.
WignerFunction wigner_transform(const CMatrix& rho, const PointOperatorCache& cache);
WignerFunction wigner_transform(const CMatrix& rho);

struct Marginals {
    std::vector<double> position;  // sum_p W(q,p) = <q|rho|q>
    std::vector<double> momentum;  // sum_q W(q,p) = <p|rho|p>
};

Marginals marginals(const WignerFunction& w);

}  // namespace primephase
