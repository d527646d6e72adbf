#include "gadqec/gram_schmidt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gadqec {

namespace {
constexpr double kResidualTol = 1e-10;

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm_of(const std::vector<cplx>& a) {
    double s = 0.0;
    for (const cplx& x : a) s += std::norm(x);
    return std::sqrt(s);
}
}  // namespace

std::vector<SparseState> gram_schmidt_complete(const std::vector<SparseState>& given,
                                               std::size_t dim, double tol) {
    if (given.size() > dim)
        throw std::invalid_argument("gram_schmidt_complete: more vectors than dimensions");
    for (std::size_t i = 0; i < given.size(); ++i) {
        if (given[i].dim() != dim)
            throw std::invalid_argument("gram_schmidt_complete: dimension mismatch");
        for (std::size_t j = i; j < given.size(); ++j) {
            cplx g = inner(given[i], given[j]);
            double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - cplx(expect, 0.0)) > tol)
                throw std::invalid_argument(
                    "gram_schmidt_complete: given vectors not orthonormal at pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }

    std::vector<std::vector<cplx>> basis;
    basis.reserve(dim);
    for (const SparseState& s : given) basis.push_back(s.to_dense());

    const std::size_t wanted = dim - given.size();
    std::vector<SparseState> result;
    result.reserve(wanted);

    for (uint32_t cand = 0; cand < dim && result.size() < wanted; ++cand) {
        std::vector<cplx> w(dim, cplx(0.0, 0.0));
        w[cand] = cplx(1.0, 0.0);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                cplx c = dot(b, w);
                if (c == cplx(0.0, 0.0)) continue;
                for (std::size_t i = 0; i < dim; ++i) w[i] -= c * b[i];
            }
        }
        double nw = norm_of(w);
        if (nw < kResidualTol) continue;
        for (cplx& x : w) x /= nw;
        basis.push_back(w);
        result.push_back(SparseState::from_dense(dim, w));
    }

    if (result.size() != wanted)
        throw std::runtime_error("gram_schmidt_complete: failed to span the space");
    return result;
}

}  // namespace gadqec
