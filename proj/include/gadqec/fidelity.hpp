#pragma once

#include <vector>

#include "gadqec/channel.hpp"
#include "gadqec/codes.hpp"
#include "gadqec/recovery.hpp"

namespace gadqec {

/// Entanglement fidelity of recovery-after-noise, with the per-weight
/// breakdown of the summed contributions and a bound on the probability
/// mass of the omitted weights.
struct FidelityResult {
    double value = 0.0;
    std::vector<std::pair<int, double>> per_weight;
    double remainder_bound = 0.0;
    int max_weight = 0;
    bool full = false;
};

struct SweepGrid {
    enum class EpsRule { Fixed, Proportional };
    std::vector<double> gammas;
    EpsRule rule = EpsRule::Fixed;
    double value = 0.0;  // fixed epsilon, or the constant c in eps = c * gamma

    double epsilon_for(double gamma) const {
        return rule == EpsRule::Fixed ? value : value * gamma;
    }
};

struct SweepRow {
    double gamma = 0.0;
    double epsilon = 0.0;
    FidelityResult result;
};

/// F = (1/K^2) sum_{errors up to max_weight} [ sum_r |Tr(R_r A')_C|^2 +
/// |Tr(O A')_C|^2 ]. max_weight = -1 sums the full error space. The
/// parallel path shards the deterministic error enumeration into
/// fixed-size blocks reduced in block order, so results are identical
/// for any thread count.
FidelityResult entanglement_fidelity(const QuantumCode& code, const RecoverySet& recovery,
                                     const GadParams& params, int max_weight = -1);

/// Plain single-loop reference implementation kept for validating the
/// sharded kernel.
FidelityResult entanglement_fidelity_serial(const QuantumCode& code, const RecoverySet& recovery,
                                            const GadParams& params, int max_weight = -1);

/// Entanglement fidelity with no error correction: N^{-2} sum_k |Tr A'_k|^2
/// over the n-fold tensor channel. Only words of diagonal factors have
/// nonzero trace, so the sum collapses to ((1+sqrt(1-gamma))^2/4)^n.
double fidelity_no_qec(const GadParams& params, int n_qubits);

/// f^{1/log2 K}, comparing codes of different encoded dimension.
double normalized_fidelity(double f, int K);

/// The single-error complement term (1/K^2) |sum_i <i_L| O A' |i_L>|^2.
double ohat_contribution(const QuantumCode& code, const RecoverySet& recovery,
                         const ErrorIndex& error, const GadParams& params);

/// Fidelity table over a gamma grid; the recovery is rebuilt at every
/// grid point.
std::vector<SweepRow> run_sweep(const QuantumCode& code, const CorrectableSet& set,
                                const SweepGrid& grid, int max_weight);

/// Entanglement fidelity under the transpose-channel recovery.
double entanglement_fidelity_tc(const QuantumCode& code, const TransposeChannel& tc,
                                const GadParams& params, int max_weight = -1);

/// Convenience overload over a code's codewords.
double weight_probability(const QuantumCode& code, const GadParams& params, int q);

}  // namespace gadqec
