#include "gadqec/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gadqec {

namespace {

constexpr std::size_t kShardSize = 2048;

/// Dense image tables and codespace couplings, laid out for the per-error
/// trace evaluations.
struct TraceKernel {
    const QuantumCode* code;
    int K;
    std::size_t dim;
    int n_ops;
    std::vector<std::vector<cplx>> images;  // flat, dense
    std::vector<int> image_op;
    std::vector<int> image_cw;
    std::vector<std::vector<cplx>> cw_dense;
    struct Coupling {
        int flat;
        int cw;
        cplx w;  // <cw_L | v_flat>
    };
    std::vector<Coupling> couplings;

    TraceKernel(const QuantumCode& c, const RecoverySet& rec) : code(&c), K(c.K), dim(c.dim()) {
        n_ops = static_cast<int>(rec.operators.size());
        for (int r = 0; r < n_ops; ++r) {
            const auto& op = rec.operators[r];
            for (std::size_t t = 0; t < op.images.size(); ++t) {
                images.push_back(op.images[t].to_dense());
                image_op.push_back(r);
                image_cw.push_back(op.codeword_index[t]);
            }
        }
        for (int i = 0; i < K; ++i) cw_dense.push_back(c.codewords[i].to_dense());
        for (std::size_t f = 0; f < images.size(); ++f)
            for (int i = 0; i < K; ++i) {
                cplx w = inner_dense(images[f], c.codewords[i]);
                w = std::conj(w);  // want <i_L | v_f>
                if (std::abs(w) > 1e-15) couplings.push_back({static_cast<int>(f), i, w});
            }
    }

    /// sum_r |Tr(R_r A')_C|^2 + |Tr(O A')_C|^2 for one error word.
    double error_contribution(const EnlargedError& op, std::vector<SparseState>& xs,
                              std::vector<cplx>& tr) const {
        for (int i = 0; i < K; ++i) xs[i] = apply_enlarged_error(op, code->codewords[i]);
        std::fill(tr.begin(), tr.end(), cplx(0.0, 0.0));
        for (std::size_t f = 0; f < images.size(); ++f)
            tr[image_op[f]] += inner_dense(images[f], xs[image_cw[f]]);
        double sum = 0.0;
        for (int r = 0; r < n_ops; ++r) sum += std::norm(tr[r]);

        cplx tro(0.0, 0.0);
        for (int i = 0; i < K; ++i) tro += inner_dense(cw_dense[i], xs[i]);
        for (const Coupling& c : couplings)
            tro -= c.w * inner_dense(images[c.flat], xs[c.cw]);
        return sum + std::norm(tro);
    }
};

std::vector<int> allowed_digits_for(const GadParams& params) {
    if (params.epsilon == 0.0) return {1};  // A2, A3 vanish identically at p = 1
    return {1, 2, 3};
}

FidelityResult finish_result(const QuantumCode& code, const GadParams& params,
                             std::vector<double> weight_sums, int cap, bool full) {
    FidelityResult res;
    res.max_weight = cap;
    res.full = full;
    const double k2 = static_cast<double>(code.K) * code.K;
    double total = 0.0;
    double covered = 0.0;
    for (int q = 0; q <= cap; ++q) {
        double w = weight_sums[q] / k2;
        res.per_weight.emplace_back(q, w);
        total += w;
        covered += weight_probability(code.codewords, params, q);
    }
    res.value = total;
    res.remainder_bound = full ? 0.0 : std::max(0.0, 1.0 - covered);
    return res;
}

FidelityResult fidelity_impl(const QuantumCode& code, const RecoverySet& recovery,
                             const GadParams& params, int max_weight, bool sharded) {
    if (recovery.params.gamma != params.gamma || recovery.params.epsilon != params.epsilon)
        throw std::invalid_argument(
            "entanglement_fidelity: params differ from the recovery snapshot");
    const int cap = (max_weight < 0) ? code.n : std::min(max_weight, code.n);
    const bool full = cap == code.n;
    ErrorSpace space(code.n, cap, allowed_digits_for(params));
    TraceKernel kernel(code, recovery);

    std::vector<double> weight_sums(cap + 1, 0.0);
    if (!sharded) {
        std::vector<SparseState> xs(code.K);
        std::vector<cplx> tr(kernel.n_ops);
        for (std::size_t a = 0; a < space.size(); ++a) {
            ErrorIndex idx = space.get(a);
            EnlargedError op(idx, params);
            if (!op.is_nonzero()) continue;
            weight_sums[idx.weight()] += kernel.error_contribution(op, xs, tr);
        }
        return finish_result(code, params, std::move(weight_sums), cap, full);
    }

    const std::size_t n_shards = (space.size() + kShardSize - 1) / kShardSize;
    std::vector<std::vector<double>> shard_sums(n_shards, std::vector<double>(cap + 1, 0.0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t s = 0; s < n_shards; ++s) {
        std::vector<SparseState> xs(code.K);
        std::vector<cplx> tr(kernel.n_ops);
        const std::size_t begin = s * kShardSize;
        const std::size_t end = std::min(space.size(), begin + kShardSize);
        for (std::size_t a = begin; a < end; ++a) {
            ErrorIndex idx = space.get(a);
            EnlargedError op(idx, params);
            if (!op.is_nonzero()) continue;
            shard_sums[s][idx.weight()] += kernel.error_contribution(op, xs, tr);
        }
    }
    for (const auto& sums : shard_sums)
        for (int q = 0; q <= cap; ++q) weight_sums[q] += sums[q];
    return finish_result(code, params, std::move(weight_sums), cap, full);
}

}  // namespace

FidelityResult entanglement_fidelity(const QuantumCode& code, const RecoverySet& recovery,
                                     const GadParams& params, int max_weight) {
    return fidelity_impl(code, recovery, params, max_weight, true);
}

FidelityResult entanglement_fidelity_serial(const QuantumCode& code, const RecoverySet& recovery,
                                            const GadParams& params, int max_weight) {
    return fidelity_impl(code, recovery, params, max_weight, false);
}

double fidelity_no_qec(const GadParams& params, int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("fidelity_no_qec: n_qubits < 1");
    const double base = 0.25 * std::pow(1.0 + std::sqrt(1.0 - params.gamma), 2);
    return std::pow(base, n_qubits);
}

double normalized_fidelity(double f, int K) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("normalized_fidelity: f outside [0,1]");
    if (K < 2) throw std::invalid_argument("normalized_fidelity: K < 2");
    return std::pow(f, 1.0 / std::log2(static_cast<double>(K)));
}

double ohat_contribution(const QuantumCode& code, const RecoverySet& recovery,
                         const ErrorIndex& error, const GadParams& params) {
    TraceKernel kernel(code, recovery);
    EnlargedError op(error, params);
    if (!op.is_nonzero()) return 0.0;
    std::vector<SparseState> xs(code.K);
    for (int i = 0; i < code.K; ++i) xs[i] = apply_enlarged_error(op, code.codewords[i]);
    cplx tro(0.0, 0.0);
    for (int i = 0; i < code.K; ++i) tro += inner_dense(kernel.cw_dense[i], xs[i]);
    for (const auto& c : kernel.couplings) tro -= c.w * inner_dense(kernel.images[c.flat], xs[c.cw]);
    return std::norm(tro) / (static_cast<double>(code.K) * code.K);
}

std::vector<SweepRow> run_sweep(const QuantumCode& code, const CorrectableSet& set,
                                const SweepGrid& grid, int max_weight) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.gammas.size());
    for (double g : grid.gammas) {
        GadParams params(g, grid.epsilon_for(g));
        RecoverySet rec = build_recovery(code, set, params);
        SweepRow row;
        row.gamma = g;
        row.epsilon = params.epsilon;
        row.result = entanglement_fidelity(code, rec, params, max_weight);
        rows.push_back(std::move(row));
    }
    return rows;
}

double entanglement_fidelity_tc(const QuantumCode& code, const TransposeChannel& tc,
                                const GadParams& params, int max_weight) {
    const int cap = (max_weight < 0) ? code.n : std::min(max_weight, code.n);
    ErrorSpace space(code.n, cap, allowed_digits_for(params));
    const std::size_t m = tc.q_basis.size();
    const std::size_t s = tc.errors.size();

    double total = 0.0;
    std::vector<cplx> qx(m);
    for (std::size_t a = 0; a < space.size(); ++a) {
        EnlargedError op(space.get(a), params);
        if (!op.is_nonzero()) continue;
        std::vector<cplx> tr(s, cplx(0.0, 0.0));
        cplx tro(0.0, 0.0);
        for (int i = 0; i < code.K; ++i) {
            SparseState x = apply_enlarged_error(op, code.codewords[i]);
            for (std::size_t b = 0; b < m; ++b) qx[b] = inner(tc.q_basis[b], x);
            // Tr(R_k A') accumulates <x_k[i], Lambda^{-1/2} x>.
            std::vector<cplx> y(m, cplx(0.0, 0.0));
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t c = 0; c < m; ++c) y[b] += tc.inv_sqrt.at(b, c) * qx[c];
            for (std::size_t k = 0; k < s; ++k) {
                const auto& ck = tc.x_coeffs[k * tc.K + i];
                cplx g(0.0, 0.0);
                for (std::size_t b = 0; b < m; ++b) g += std::conj(ck[b]) * y[b];
                tr[k] += g;
            }
            cplx oi = inner(code.codewords[i], x);
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t c = 0; c < m; ++c)
                    oi -= std::conj(tc.cw_coeffs[i][b]) * tc.support_proj.at(b, c) * qx[c];
            tro += oi;
        }
        for (std::size_t k = 0; k < s; ++k) total += std::norm(tr[k]);
        total += std::norm(tro);
    }
    return total / (static_cast<double>(code.K) * code.K);
}

double weight_probability(const QuantumCode& code, const GadParams& params, int q) {
    return weight_probability(code.codewords, params, q);
}

}  // namespace gadqec
