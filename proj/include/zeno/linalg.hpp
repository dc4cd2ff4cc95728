#ifndef ZENO_LINALG_HPP
#define ZENO_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno {

using complexd = std::complex<double>;

/// Dense complex matrix, row-major. Carrier of every density operator.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), a_(dim * dim, complexd{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

    std::size_t dim() const { return dim_; }

    complexd& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const complexd& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    bool is_hermitian(double tol = 1e-12) const;
    complexd trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(complexd s, ComplexMatrix a);

private:
    std::size_t dim_;
    std::vector<complexd> a_;
};

/// Normalized state vector; feeds the pure-state construction and the
/// full-state partial-trace checks.
class PureState {
public:
    explicit PureState(std::vector<complexd> amplitudes);

    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amp_.size(); }
    const complexd& operator[](std::size_t i) const { return amp_[i]; }
    std::span<const complexd> amplitudes() const { return amp_; }
    double norm() const;

    /// |psi><psi|
    ComplexMatrix projector() const;

private:
    std::vector<complexd> amp_;
};

/// Hermitian, unit-trace, PSD matrix (all within numerical floors),
/// validated on construction.
class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPsdFloor = -1e-10;

    explicit DensityMatrix(ComplexMatrix m, std::string label = "");

    const ComplexMatrix& matrix() const { return m_; }
    const std::string& label() const { return label_; }
    std::size_t dim() const { return m_.dim(); }

private:
    ComplexMatrix m_;
    std::string label_;
};

struct EigenResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns; M = V diag(values) V^dagger
};

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
/// rotations; sweep budget 100, off-diagonal threshold 1e-14 * ||M||_F.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);
EigenResult eigen_hermitian(const ComplexMatrix& m);

/// D = (1/2) sum_k |lambda_k(rho1 - rho2)|.
double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2);

/// Kronecker product; first factor owns the most significant index.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
PureState tensor_product(const PureState& a, const PureState& b);

/// Trace out the factors not listed in `keep`. Subsystem 0 is the most
/// significant digit of the composite basis index; `keep` order follows
/// the original factor order.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep,
                            std::string label = "");

} // namespace zeno

#endif
