#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gadqec/sparse_state.hpp"

namespace gadqec {

/// Signed n-qubit Pauli word. Letters are applied per qubit on sparse
/// states directly: X flips a bit, Z contributes a sign, Y both with a
/// factor of i.
struct PauliString {
    int n = 0;
    std::string letters;  // 'I','X','Y','Z' per qubit, qubit 1 first
    int sign = +1;

    static PauliString parse(const std::string& letters, int sign = +1);
    SparseState apply(const SparseState& state) const;

    /// Product of two Pauli words; the accumulated phase must be +-1.
    PauliString operator*(const PauliString& o) const;
    bool operator==(const PauliString& o) const;
};

/// Simple undirected graph given by its adjacency matrix.
struct GraphSpec {
    int n = 0;
    std::vector<std::vector<int>> adjacency;  // symmetric 0/1, zero diagonal

    static GraphSpec from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static GraphSpec loop(int n);
    void validate() const;
};

/// |G> = 2^{-n/2} sum_mu (-1)^{(1/2) mu.Gamma.mu} |mu>: the sign counts
/// edges inside the support of mu.
SparseState graph_state(const GraphSpec& g);

struct QuantumCode {
    std::string name;
    int n = 0;
    int K = 0;
    std::vector<SparseState> codewords;
    bool additive = false;
    std::vector<PauliString> stabilizer_generators;
    std::optional<int> distance;

    double k_encoded() const;  // log2 K, may be fractional
    std::size_t dim() const { return std::size_t(1) << n; }
};

/// Registry lookup by stable identifier; throws on unknown name.
/// Names: five_qubit, css_seven, six_degenerate, shor_nine, eight_concat,
/// leung_four, erasure_four, gottesman_833, nonadd_11_2_3, nonadd_9_12_3,
/// nonadd_6_5, nonadd_8_12.
QuantumCode build_code(const std::string& name);
std::vector<std::string> registry_code_names();

/// The twelve codewords of the ((9,12,3)) code, built from the loop-graph
/// state by Z-type sign flips over the vertex sets V_i.
std::vector<SparseState> build_9_12_3_codewords();

struct StabilizerReport {
    struct Entry {
        std::size_t generator;
        std::size_t codeword;
        double residual;
    };
    bool pass = true;
    std::vector<Entry> failures;  // entries with residual >= 1e-10
};

/// Checks ||g c - c|| < 1e-10 for every generator and codeword.
StabilizerReport verify_stabilizer(const QuantumCode& code);

/// True iff every codeword is a two-term equal-magnitude superposition of
/// a bit string and its bitwise complement.
bool is_self_complementary(const QuantumCode& code, double tol = 1e-12);

/// Quantum Hamming bound 2^k sum_{j<=t} 3^j C(n,j) <= 2^n, evaluated in
/// exact integer arithmetic.
bool hamming_bound_satisfiable(int n, int k, int t);

}  // namespace gadqec
