#include "zeno/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zeno {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

complexd ComplexMatrix::trace() const {
    complexd t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw DimensionMismatch("matrix sum: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw DimensionMismatch("matrix difference: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product: dimension mismatch");
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const complexd aik = a(i, k);
            if (aik == complexd{}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrix operator*(complexd s, ComplexMatrix a) {
    for (auto& z : a.a_) z *= s;
    return a;
}

PureState::PureState(std::vector<complexd> amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.empty()) throw InvalidState("pure state: empty amplitude vector");
    double n2 = 0.0;
    for (const auto& z : amp_) n2 += std::norm(z);
    if (std::abs(n2 - 1.0) > 1e-12)
        throw InvalidState("pure state: norm deviates from 1 by more than 1e-12");
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    std::vector<complexd> a(dim, complexd{});
    a.at(index) = 1.0;
    return PureState(std::move(a));
}

double PureState::norm() const {
    double n2 = 0.0;
    for (const auto& z : amp_) n2 += std::norm(z);
    return std::sqrt(n2);
}

ComplexMatrix PureState::projector() const {
    const std::size_t n = amp_.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = amp_[i] * std::conj(amp_[j]);
    return m;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, std::string label)
    : m_(std::move(m)), label_(std::move(label)) {
    if (!m_.is_hermitian(kHermitianTol))
        throw NonHermitianInput("density matrix '" + label_ + "': not Hermitian within 1e-12");
    const complexd tr = m_.trace();
    if (std::abs(tr - complexd{1.0, 0.0}) > kTraceTol)
        throw InvalidState("density matrix '" + label_ + "': trace deviates from 1");
    const auto ev = eigenvalues_hermitian(m_);
    if (ev.front() < kPsdFloor)
        throw InvalidState("density matrix '" + label_ + "': negative eigenvalue below floor");
}

namespace {

// One cyclic complex Jacobi sweep: A <- U^dagger A U with U a plane
// rotation zeroing A(p,q). V accumulates U so that M = V diag V^dagger.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
    const complexd apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const complexd phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    double t;
    if (theta >= 0.0)
        t = 1.0 / (theta + std::sqrt(1.0 + theta * theta));
    else
        t = 1.0 / (theta - std::sqrt(1.0 + theta * theta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const std::size_t n = a.dim();

    // columns: A <- A U
    for (std::size_t k = 0; k < n; ++k) {
        const complexd akp = a(k, p);
        const complexd akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
    }
    // rows: A <- U^dagger A
    for (std::size_t k = 0; k < n; ++k) {
        const complexd apk = a(p, k);
        const complexd aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * std::conj(phase) * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = complexd{a(p, p).real(), 0.0};
    a(q, q) = complexd{a(q, q).real(), 0.0};

    if (v) {
        for (std::size_t k = 0; k < n; ++k) {
            const complexd vkp = (*v)(k, p);
            const complexd vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * std::conj(phase) * vkq;
            (*v)(k, q) = s * phase * vkp + c * vkq;
        }
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

EigenResult jacobi_eigen(const ComplexMatrix& m, bool want_vectors) {
    if (m.dim() > 64) throw InvalidState("eigensolver: dim > 64 unsupported");
    if (!m.is_hermitian(1e-12))
        throw NonHermitianInput("eigensolver: input not Hermitian within 1e-12");
    const std::size_t n = m.dim();

    // symmetrize to kill round-off asymmetry before rotating
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double thresh = 1e-14 * a.frobenius_norm();
    constexpr int kSweepBudget = 100;

    bool converged = n < 2;
    for (int sweep = 0; sweep < kSweepBudget && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= thresh) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, want_vectors ? &v : nullptr, p, q);
    }
    if (!converged && off_diagonal_norm(a) > thresh)
        throw NoConvergence("eigensolver: sweep budget exhausted");

    EigenResult res{std::vector<double>(n), want_vectors ? std::move(v) : ComplexMatrix(0)};
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    ComplexMatrix sorted_v(want_vectors ? n : 0);
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = a(order[k], order[k]).real();
        if (want_vectors)
            for (std::size_t i = 0; i < n; ++i) sorted_v(i, k) = res.vectors(i, order[k]);
    }
    if (want_vectors) res.vectors = std::move(sorted_v);
    return res;
}

} // namespace

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
    return jacobi_eigen(m, false).values;
}

EigenResult eigen_hermitian(const ComplexMatrix& m) { return jacobi_eigen(m, true); }

double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim())
        throw DimensionMismatch("trace_distance: dimension mismatch");
    const ComplexMatrix diff = r1.matrix() - r2.matrix();
    double d = 0.0;
    for (double lambda : eigenvalues_hermitian(diff)) d += std::abs(lambda);
    return 0.5 * d;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const complexd aij = a(i, j);
            if (aij == complexd{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

PureState tensor_product(const PureState& a, const PureState& b) {
    std::vector<complexd> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
    return PureState(std::move(out));
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep) {
    std::size_t prod = 1;
    for (std::size_t d : subsystem_dims) prod *= d;
    if (prod != m.dim())
        throw BadFactorization("partial_trace: subsystem dims do not multiply to matrix dim");
    if (keep.empty()) throw BadFactorization("partial_trace: keep set is empty");

    const std::size_t nsub = subsystem_dims.size();
    std::vector<bool> kept(nsub, false);
    for (std::size_t k : keep) {
        if (k >= nsub) throw BadFactorization("partial_trace: keep index out of range");
        kept[k] = true;
    }
    // strides with subsystem 0 most significant
    std::vector<std::size_t> stride(nsub, 1);
    for (std::size_t i = nsub; i-- > 1;) stride[i - 1] = stride[i] * subsystem_dims[i];

    std::vector<std::size_t> keep_idx, drop_idx;
    for (std::size_t i = 0; i < nsub; ++i) (kept[i] ? keep_idx : drop_idx).push_back(i);

    std::size_t keep_dim = 1, drop_dim = 1;
    for (std::size_t i : keep_idx) keep_dim *= subsystem_dims[i];
    for (std::size_t i : drop_idx) drop_dim *= subsystem_dims[i];

    auto compose = [&](std::size_t kc, std::size_t dc) {
        std::size_t full = 0;
        for (std::size_t i = keep_idx.size(); i-- > 0;) {
            const std::size_t d = subsystem_dims[keep_idx[i]];
            full += (kc % d) * stride[keep_idx[i]];
            kc /= d;
        }
        for (std::size_t i = drop_idx.size(); i-- > 0;) {
            const std::size_t d = subsystem_dims[drop_idx[i]];
            full += (dc % d) * stride[drop_idx[i]];
            dc /= d;
        }
        return full;
    };

    ComplexMatrix out(keep_dim);
    for (std::size_t i = 0; i < keep_dim; ++i)
        for (std::size_t j = 0; j < keep_dim; ++j) {
            complexd s{0.0, 0.0};
            for (std::size_t e = 0; e < drop_dim; ++e)
                s += m(compose(i, e), compose(j, e));
            out(i, j) = s;
        }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep, std::string label) {
    return DensityMatrix(partial_trace(rho.matrix(), subsystem_dims, keep), std::move(label));
}

} // namespace zeno
