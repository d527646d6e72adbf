#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gadqec/channel.hpp"
#include "gadqec/codes.hpp"
#include "gadqec/dense_matrix.hpp"

namespace gadqec {

enum class ExclusionReason { OverlapWithWeight0, IncompatiblePair, Truncated };
enum class ChannelRegime { GAD, AD_only };

const char* to_string(ExclusionReason r);

/// The per-code error sets admitted to (or barred from) dedicated
/// recovery operators.
struct CorrectableSet {
    struct Excluded {
        ErrorIndex err;
        ExclusionReason reason;
        std::optional<ErrorIndex> partner;  // accepted error it collides with
    };
    std::string code;
    std::vector<ErrorIndex> accepted;
    std::vector<Excluded> excluded;
};

/// Static per-code sets. Accepted counts: five_qubit 11, css_seven 15,
/// eight_concat 37, six_degenerate 21, shor_nine 136, nonadd_11_2_3 23,
/// nonadd_9_12_3 19, nonadd_6_5 7, nonadd_8_12 9, gottesman_833 9.
CorrectableSet default_correctable_set(const QuantumCode& code, ChannelRegime regime);

/// Restriction of a set to its weight <= 1 accepted errors.
CorrectableSet first_order_subset(const CorrectableSet& set);

class RecoveryConstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RecoveryOptions {
    double ortho_tol = 1e-8;
    double norm_tol = 1e-12;
    // Image overlaps above this are treated as colliding syndromes and
    // rejected; smaller ones are projected out.
    double max_orthogonalizable_overlap = 1e-2;
};

/// Recovery superoperator {R_r, O}: each operator holds the normalized
/// corrupted images v_r^{i_L} per codeword; O is the projector onto the
/// orthogonal complement of all images. Errors whose images are exactly
/// parallel to an existing operator's (degenerate action on the codespace)
/// share that operator; errors whose images all vanish at this channel
/// point are skipped.
struct RecoverySet {
    struct Operator {
        std::vector<ErrorIndex> errors;   // > 1 entry iff degenerate duplicates merged
        std::vector<int> codeword_index;  // codewords with surviving images
        std::vector<SparseState> images;  // normalized, same order
    };

    std::string code;
    GadParams params{0.0, 0.0};
    int n = 0;
    int K = 0;
    std::vector<Operator> operators;
    std::vector<ErrorIndex> skipped;  // zero corrupted image at these params

    std::size_t dim() const { return std::size_t(1) << n; }
    std::size_t image_count() const;
    std::vector<SparseState> all_images() const;

    /// Largest deviation of the image Gram matrix from the identity.
    double gram_defect() const;

    /// Orthonormal basis of the complement, via Gram-Schmidt completion.
    std::vector<SparseState> complete_ohat_basis(double tol = 1e-8) const;

    /// || (sum_r R_r^dag R_r + O^dag O) psi - psi ||; zero up to the Gram
    /// defect of the images.
    double trace_preservation_defect(const SparseState& psi) const;
};

RecoverySet build_recovery(const QuantumCode& code, const CorrectableSet& set,
                           const GadParams& params, const RecoveryOptions& opts = {});

/// Knill-Laflamme diagnostics over the codespace Gram blocks
/// <i_L| A_l^dag A_m |j_L>.
struct KlReport {
    struct Diagonal {
        ErrorIndex err;
        double p_max;          // largest eigenvalue of the codespace block
        double p_min;          // smallest eigenvalue
        double spread;         // p_max - p_min, the non-deformation violation
        double residue_bound;  // sqrt(p_max) - sqrt(p_min), bounds |pi_l|
        double max_offdiag;    // off-diagonal magnitude within the block
    };
    struct Pair {
        ErrorIndex l, m;
        double max_entry;  // largest |<i|A_l^dag A_m|j>| over all i, j
    };
    std::vector<Diagonal> diagonals;
    std::vector<Pair> pairs;
};

KlReport check_kl_conditions(const QuantumCode& code, const std::vector<ErrorIndex>& errors,
                             const GadParams& params);

/// Transpose-channel recovery {P_C A_k^dag Lambda(P_C)^{-1/2}} completed
/// with the projector onto the complement of supp Lambda(P_C). All actions
/// are evaluated through an orthonormal basis Q of span{A_k |i_L>}.
struct TransposeChannel {
    std::string code;
    GadParams params{0.0, 0.0};
    int K = 0;
    std::size_t dim = 0;
    std::vector<ErrorIndex> errors;
    std::vector<SparseState> q_basis;
    DenseMatrix inv_sqrt;       // Lambda(P_C)^{-1/2} in Q coordinates
    DenseMatrix support_proj;   // projector onto supp Lambda(P_C) in Q coordinates
    std::vector<std::vector<cplx>> x_coeffs;   // Q^dag A_k|i_L>, flattened k*K+i
    std::vector<std::vector<cplx>> cw_coeffs;  // Q^dag |i_L>

    std::vector<cplx> q_coords(const SparseState& psi) const;
    SparseState from_q_coords(const std::vector<cplx>& c, const SparseState& residual) const;
    SparseState apply_inv_sqrt(const SparseState& psi) const;
    SparseState apply_rk(int k, const SparseState& psi, const QuantumCode& code) const;
    SparseState apply_complement(const SparseState& psi) const;
    double trace_preservation_defect(const SparseState& psi, const QuantumCode& code) const;
};

TransposeChannel transpose_channel_recovery(const QuantumCode& code,
                                            const std::vector<ErrorIndex>& errors,
                                            const GadParams& params, double rank_tol = 1e-12);

/// Re-derives per-code exclusion lists from Gram overlaps at a channel
/// point, independent of the static tables.
struct AuditResult {
    struct Derived {
        ErrorIndex err;
        bool accepted;
        bool zero_image;
        bool degenerate_merge;  // parallel to an already accepted image set
        ExclusionReason reason;
        std::optional<ErrorIndex> partner;
    };
    std::string code;
    std::vector<Derived> weight1;  // A2-type single candidates
    std::vector<Derived> weight2;  // A1A1 candidates
    std::vector<Derived> weight3;  // A1A1A1 candidates (only where audited)
    bool matches_static = false;
    std::vector<std::string> diffs;
};

AuditResult audit_code(const QuantumCode& code, const GadParams& params);

}  // namespace gadqec
