#include "gadqec/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gadqec {

SparseState::SparseState(std::size_t dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].index >= dim_)
            throw std::invalid_argument("SparseState: index out of range");
        if (i > 0 && terms_[i - 1].index >= terms_[i].index)
            throw std::invalid_argument("SparseState: indices must be strictly increasing");
    }
}

SparseState SparseState::basis(std::size_t dim, uint32_t index) {
    return SparseState(dim, {{index, cplx(1.0, 0.0)}});
}

SparseState SparseState::from_terms(std::size_t dim, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (const Term& t : terms) {
        if (!merged.empty() && merged.back().index == t.index)
            merged.back().amp += t.amp;
        else
            merged.push_back(t);
    }
    std::vector<Term> pruned;
    pruned.reserve(merged.size());
    for (const Term& t : merged)
        if (std::abs(t.amp) >= kPruneTol) pruned.push_back(t);
    return SparseState(dim, std::move(pruned));
}

double SparseState::norm_sq() const {
    double s = 0.0;
    for (const Term& t : terms_) s += std::norm(t.amp);
    return s;
}

double SparseState::norm() const { return std::sqrt(norm_sq()); }

SparseState SparseState::normalized() const {
    double n = norm();
    if (n == 0.0) throw std::invalid_argument("SparseState: cannot normalize zero vector");
    return scaled(cplx(1.0 / n, 0.0));
}

SparseState SparseState::scaled(cplx factor) const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.amp *= factor;
    SparseState s;
    s.dim_ = dim_;
    s.terms_ = std::move(out);
    return s;
}

SparseState SparseState::axpy(cplx factor, const SparseState& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("SparseState: dimension mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() ||
            (i < terms_.size() && terms_[i].index < other.terms_[j].index)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || other.terms_[j].index < terms_[i].index) {
            out.push_back({other.terms_[j].index, factor * other.terms_[j].amp});
            ++j;
        } else {
            cplx a = terms_[i].amp + factor * other.terms_[j].amp;
            if (std::abs(a) >= kPruneTol) out.push_back({terms_[i].index, a});
            ++i;
            ++j;
        }
    }
    SparseState s;
    s.dim_ = dim_;
    s.terms_ = std::move(out);
    return s;
}

std::vector<cplx> SparseState::to_dense() const {
    std::vector<cplx> v(dim_, cplx(0.0, 0.0));
    for (const Term& t : terms_) v[t.index] = t.amp;
    return v;
}

SparseState SparseState::from_dense(std::size_t dim, const std::vector<cplx>& v) {
    if (v.size() != dim) throw std::invalid_argument("from_dense: size mismatch");
    std::vector<Term> terms;
    for (uint32_t i = 0; i < dim; ++i)
        if (std::abs(v[i]) >= kPruneTol) terms.push_back({i, v[i]});
    return SparseState(dim, std::move(terms));
}

cplx inner(const SparseState& a, const SparseState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s(0.0, 0.0);
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        if (ta[i].index < tb[j].index)
            ++i;
        else if (tb[j].index < ta[i].index)
            ++j;
        else {
            s += std::conj(ta[i].amp) * tb[j].amp;
            ++i;
            ++j;
        }
    }
    return s;
}

cplx inner_dense(const std::vector<cplx>& dense_a, const SparseState& b) {
    cplx s(0.0, 0.0);
    for (const auto& t : b.terms()) s += std::conj(dense_a[t.index]) * t.amp;
    return s;
}

}  // namespace gadqec
