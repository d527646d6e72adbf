#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace gadqec {

using cplx = std::complex<double>;

/// Amplitudes below this magnitude are dropped when pruning sparse states.
inline constexpr double kPruneTol = 1e-14;

/// A vector in a 2^n-dimensional Hilbert space stored as sorted
/// (basis index, amplitude) pairs. Immutable by convention after
/// construction; all operations return new values.
class SparseState {
  public:
    struct Term {
        uint32_t index;
        cplx amp;
    };

    SparseState() : dim_(0) {}
    SparseState(std::size_t dim, std::vector<Term> terms);

    /// Zero vector of the given dimension.
    static SparseState zero(std::size_t dim) { return SparseState(dim, {}); }

    /// Computational basis vector e_index.
    static SparseState basis(std::size_t dim, uint32_t index);

    /// Builds from possibly unsorted/duplicated terms; merges duplicates,
    /// sorts by index and prunes amplitudes below kPruneTol.
    static SparseState from_terms(std::size_t dim, std::vector<Term> terms);

    std::size_t dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    double norm() const;
    double norm_sq() const;
    SparseState normalized() const;
    SparseState scaled(cplx factor) const;

    /// this + factor * other
    SparseState axpy(cplx factor, const SparseState& other) const;

    std::vector<cplx> to_dense() const;
    static SparseState from_dense(std::size_t dim, const std::vector<cplx>& v);

  private:
    std::size_t dim_;
    std::vector<Term> terms_;
};

/// <a|b> with the conjugate on the first argument.
cplx inner(const SparseState& a, const SparseState& b);

/// <dense|sparse> where `dense` holds the conjugand coordinates.
cplx inner_dense(const std::vector<cplx>& dense_a, const SparseState& b);

}  // namespace gadqec
