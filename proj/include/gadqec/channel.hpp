#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gadqec/dense_matrix.hpp"
#include "gadqec/sparse_state.hpp"

namespace gadqec {

/// Channel point (gamma, epsilon) with p = 1 - epsilon. The damping
/// probability gamma lies in [0,1]; the temperature parameter epsilon
/// in [0, 1/2] so that p stays in [1/2, 1].
struct GadParams {
    double gamma;
    double epsilon;

    GadParams(double gamma_, double epsilon_);
    double p() const { return 1.0 - epsilon; }
};

/// Physical temperature point; converts to GadParams via the Planck
/// occupation N_th = 1/(e^{hw/kT} - 1).
struct TemperaturePoint {
    double gamma0;                // spontaneous emission rate, 1/time
    double t;                     // elapsed time
    double hbar_omega_over_kBT;   // dimensionless; 0 means infinite temperature

    double n_thermal() const;
};

/// p = (N_th+1)/(2N_th+1), gamma = 1 - exp(-gamma0 (2N_th+1) t).
/// Infinite temperature (hw/kT = 0) with t > 0 drives gamma to 1 and is
/// rejected unless allow_boundary is set.
GadParams params_from_temperature(const TemperaturePoint& tp, bool allow_boundary = false);

/// gamma_eps(t) = 1 - exp(-gamma0 t / (1 - 2 eps)), strictly increasing in eps.
double gamma_epsilon(double gamma0_t, double epsilon);

/// The four GAD Kraus matrices (A0, A1, A2, A3) at a channel point.
std::array<DenseMatrix, 4> gad_kraus(const GadParams& params);

/// Base-4 word over n qubits selecting one single-qubit Kraus factor per
/// position; weight counts the non-A0 factors. Qubit 1 is the most
/// significant bit of a basis index.
struct ErrorIndex {
    uint8_t n = 0;
    std::array<uint8_t, 16> digits{};

    static ErrorIndex from_digits(const std::vector<int>& ds);
    static ErrorIndex from_string(const std::string& s);

    int weight() const;
    std::string to_string() const;
    bool operator==(const ErrorIndex& o) const;
};

/// An ErrorIndex compiled against a channel point for fast application:
/// per-digit bit masks plus the scalar prefactor of every surviving term.
struct EnlargedError {
    ErrorIndex index;
    uint32_t mask0 = 0, mask1 = 0, mask2 = 0, mask3 = 0;
    double base = 0.0;                 // gathers sqrt(p), sqrt(1-p), sqrt(gamma) powers
    std::array<double, 17> xpow{};     // sqrt(1-gamma)^k lookup

    EnlargedError(const ErrorIndex& idx, const GadParams& params);

    /// True when every Kraus factor annihilates nothing for at least one
    /// basis state; false iff base == 0 (the operator is identically zero).
    bool is_nonzero() const { return base != 0.0; }
};

/// Applies the n-fold tensor Kraus factor to a state. Every basis term
/// maps to at most one term; the result may be the zero state.
SparseState apply_enlarged_error(const EnlargedError& err, const SparseState& state);
SparseState apply_enlarged_error(const ErrorIndex& idx, const GadParams& params,
                                 const SparseState& state);

/// Deterministic weight-major lexicographic enumeration of error words with
/// random ordinal access, shardable for parallel reduction.
class ErrorSpace {
  public:
    ErrorSpace(int n, int max_weight, std::vector<int> allowed_digits = {1, 2, 3});

    std::size_t size() const { return total_; }
    ErrorIndex get(std::size_t ordinal) const;
    int n() const { return n_; }
    int max_weight() const { return max_weight_; }

  private:
    int n_, max_weight_;
    std::vector<int> allowed_;
    std::vector<std::vector<std::vector<int>>> combos_;  // per weight, position tuples
    std::vector<std::size_t> weight_offset_;             // prefix sums
    std::vector<std::size_t> digits_per_combo_;          // |allowed|^q
    std::size_t total_;
};

/// Sum over all weight-q error words of the mean corrupted-image norm:
/// (1/K) sum_i <i_L| A'^dag A' |i_L>. Sums to 1 over q = 0..n.
double weight_probability(const std::vector<SparseState>& codewords, const GadParams& params,
                          int q);

/// Kraus operators of the GAD channel derived from a beam splitter acting
/// on a truncated two-mode Fock space, returned in (A0, A1, A2, A3) order.
/// gamma = sin^2(chi). Requires n_truncation >= 2.
std::array<DenseMatrix, 4> beam_splitter_kraus(double chi, double p, int n_truncation);

/// Two-mode truncated-Fock beam splitter unitary exp(chi (a^dag b - b^dag a)),
/// plus the mode operators, for oracle checks.
struct BeamSplitterSpace {
    int levels;       // Fock levels per mode, 0..n_truncation
    DenseMatrix u;    // unitary on the two-mode space
    DenseMatrix a;    // annihilation operator, system mode
    DenseMatrix b;    // annihilation operator, environment mode
};
BeamSplitterSpace beam_splitter_space(double chi, int n_truncation);

/// Closed-form concurrence of (GAD x I)|beta><beta|, clamped at zero.
double concurrence_gad(double gamma, double p);

/// Closed-form eigenvalues of the partial transpose of (GAD x I)|beta><beta|.
std::array<double, 4> ppt_eigenvalues(double gamma, double p);

/// Same eigenvalues computed numerically from the 4x4 partial transpose.
std::array<double, 4> ppt_eigenvalues_numeric(double gamma, double p);

/// The (p_min, p_max) band where the channel is entanglement breaking,
/// present iff gamma^4 + 4 gamma^3 - 4 gamma^2 >= 0.
std::optional<std::pair<double, double>> entanglement_breaking_region(double gamma);

}  // namespace gadqec
