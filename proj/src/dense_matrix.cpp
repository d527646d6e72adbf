#include "gadqec/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gadqec {

namespace {
constexpr std::size_t kMaxDim = std::size_t(1) << 24;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("DenseMatrix: entries.size != rows*cols");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("DenseMatrix: shape mismatch");
    DenseMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("DenseMatrix: shape mismatch");
    DenseMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("DenseMatrix: product shape mismatch");
    DenseMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            cplx a = at(i, k);
            if (a == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

DenseMatrix DenseMatrix::scaled(cplx f) const {
    DenseMatrix r = *this;
    for (cplx& e : r.entries_) e *= f;
    return r;
}

DenseMatrix DenseMatrix::dagger() const {
    DenseMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

cplx DenseMatrix::trace() const {
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double DenseMatrix::frobenius_distance(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("DenseMatrix: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) s += std::norm(entries_[i] - o.entries_[i]);
    return std::sqrt(s);
}

bool DenseMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() * b.rows() > kMaxDim || a.cols() * b.cols() > kMaxDim)
        throw std::invalid_argument("tensor_product: result exceeds size limit");
    DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cplx f = a.at(i, j);
            if (f == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = f * b.at(k, l);
        }
    return r;
}

EigResult hermitian_eig(const DenseMatrix& m) {
    if (!m.is_hermitian(1e-12)) throw std::invalid_argument("hermitian_eig: input not Hermitian");
    const std::size_t n = m.rows();
    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);

    // Cyclic Jacobi: annihilate a[p][q] with a phased plane rotation until
    // the off-diagonal mass is negligible.
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
        double ma = a.max_abs();
        if (off < 1e-28 * std::max(1.0, ma * ma)) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cplx apq = a.at(p, q);
                double r = std::abs(apq);
                if (r < 1e-300) continue;
                cplx phase = apq / r;
                double app = a.at(p, p).real();
                double aqq = a.at(q, q).real();
                double tau = (aqq - app) / (2.0 * r);
                double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // Columns p,q transform by [[c, s*phase], [-s*conj(phase), c]].
                cplx jpp(c, 0.0), jpq = s * phase, jqp = -s * std::conj(phase), jqq(c, 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    cplx akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = akp * jpp + akq * jqp;
                    a.at(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    cplx apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a.at(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    cplx vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = vkp * jpp + vkq * jqp;
                    v.at(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a.at(i, i).real();
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

    EigResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.eigenvalues[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) res.eigenvectors.at(i, j) = v.at(i, order[j]);
    }
    return res;
}

DenseMatrix inv_sqrt_psd(const DenseMatrix& m, double rank_tol) {
    EigResult e = hermitian_eig(m);
    const std::size_t n = m.rows();
    for (double lam : e.eigenvalues)
        if (lam < -rank_tol) throw std::invalid_argument("inv_sqrt_psd: negative eigenvalue");
    DenseMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (e.eigenvalues[k] < rank_tol) continue;
        double f = 1.0 / std::sqrt(e.eigenvalues[k]);
        for (std::size_t i = 0; i < n; ++i) {
            cplx vi = e.eigenvectors.at(i, k);
            if (vi == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) += f * vi * std::conj(e.eigenvectors.at(j, k));
        }
    }
    return r;
}

DenseMatrix matrix_exp(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exp: square matrix required");
    const std::size_t n = m.rows();
    double scale = m.max_abs() * n;
    int s = 0;
    while (scale > 0.5 && s < 60) {
        scale *= 0.5;
        ++s;
    }
    DenseMatrix b = m.scaled(cplx(std::ldexp(1.0, -s), 0.0));
    DenseMatrix result = DenseMatrix::identity(n);
    DenseMatrix term = DenseMatrix::identity(n);
    for (int k = 1; k <= 12; ++k) {
        term = term * b;
        term = term.scaled(cplx(1.0 / k, 0.0));
        result = result + term;
    }
    for (int k = 0; k < s; ++k) result = result * result;
    return result;
}

}  // namespace gadqec
