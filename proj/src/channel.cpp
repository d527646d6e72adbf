#include "gadqec/channel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gadqec {

GadParams::GadParams(double gamma_, double epsilon_) : gamma(gamma_), epsilon(epsilon_) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("GadParams: gamma must lie in [0,1]");
    if (!(epsilon >= 0.0 && epsilon <= 0.5))
        throw std::invalid_argument("GadParams: epsilon must lie in [0,1/2]");
}

double TemperaturePoint::n_thermal() const {
    if (hbar_omega_over_kBT <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::expm1(hbar_omega_over_kBT);
}

GadParams params_from_temperature(const TemperaturePoint& tp, bool allow_boundary) {
    if (tp.gamma0 < 0.0 || tp.t < 0.0 || tp.hbar_omega_over_kBT < 0.0)
        throw std::invalid_argument("params_from_temperature: negative input");
    if (tp.hbar_omega_over_kBT == 0.0) {
        if (tp.gamma0 * tp.t > 0.0 && !allow_boundary)
            throw std::invalid_argument(
                "params_from_temperature: infinite temperature with t > 0 drives gamma to 1");
        return GadParams(tp.gamma0 * tp.t > 0.0 ? 1.0 : 0.0, 0.5);
    }
    double nth = tp.n_thermal();
    double p = (nth + 1.0) / (2.0 * nth + 1.0);
    double gamma = -std::expm1(-tp.gamma0 * (2.0 * nth + 1.0) * tp.t);
    return GadParams(gamma, 1.0 - p);
}

double gamma_epsilon(double gamma0_t, double epsilon) {
    if (epsilon >= 0.5) throw std::invalid_argument("gamma_epsilon: epsilon must be < 1/2");
    return -std::expm1(-gamma0_t / (1.0 - 2.0 * epsilon));
}

std::array<DenseMatrix, 4> gad_kraus(const GadParams& params) {
    const double sp = std::sqrt(params.p());
    const double sq = std::sqrt(1.0 - params.p());
    const double sg = std::sqrt(params.gamma);
    const double sx = std::sqrt(1.0 - params.gamma);
    DenseMatrix a0(2, 2), a1(2, 2), a2(2, 2), a3(2, 2);
    a0.at(0, 0) = sp;
    a0.at(1, 1) = sp * sx;
    a1.at(0, 1) = sp * sg;
    a2.at(0, 0) = sq * sx;
    a2.at(1, 1) = sq;
    a3.at(1, 0) = sq * sg;
    return {a0, a1, a2, a3};
}

ErrorIndex ErrorIndex::from_digits(const std::vector<int>& ds) {
    if (ds.size() > 16) throw std::invalid_argument("ErrorIndex: too many qubits");
    ErrorIndex e;
    e.n = static_cast<uint8_t>(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] < 0 || ds[i] > 3) throw std::invalid_argument("ErrorIndex: digit out of range");
        e.digits[i] = static_cast<uint8_t>(ds[i]);
    }
    return e;
}

ErrorIndex ErrorIndex::from_string(const std::string& s) {
    std::vector<int> ds;
    ds.reserve(s.size());
    for (char c : s) ds.push_back(c - '0');
    return from_digits(ds);
}

int ErrorIndex::weight() const {
    int w = 0;
    for (int i = 0; i < n; ++i)
        if (digits[i] != 0) ++w;
    return w;
}

std::string ErrorIndex::to_string() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) s[i] = static_cast<char>('0' + digits[i]);
    return s;
}

bool ErrorIndex::operator==(const ErrorIndex& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
        if (digits[i] != o.digits[i]) return false;
    return true;
}

EnlargedError::EnlargedError(const ErrorIndex& idx, const GadParams& params) : index(idx) {
    int c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    for (int i = 0; i < idx.n; ++i) {
        uint32_t bit = uint32_t(1) << (idx.n - 1 - i);  // qubit 1 is the MSB
        switch (idx.digits[i]) {
            case 0: mask0 |= bit; ++c0; break;
            case 1: mask1 |= bit; ++c1; break;
            case 2: mask2 |= bit; ++c2; break;
            case 3: mask3 |= bit; ++c3; break;
        }
    }
    const double p = params.p();
    base = std::pow(p, 0.5 * (c0 + c1)) * std::pow(1.0 - p, 0.5 * (c2 + c3)) *
           std::pow(params.gamma, 0.5 * (c1 + c3));
    const double sx = std::sqrt(1.0 - params.gamma);
    xpow[0] = 1.0;
    for (int k = 1; k <= idx.n; ++k) xpow[k] = xpow[k - 1] * sx;
}

SparseState apply_enlarged_error(const EnlargedError& err, const SparseState& state) {
    std::vector<SparseState::Term> out;
    if (err.base != 0.0) {
        out.reserve(state.terms().size());
        const uint32_t flip = err.mask1 | err.mask3;
        for (const auto& t : state.terms()) {
            if ((t.index & err.mask1) != err.mask1) continue;  // A1 needs |1>
            if ((t.index & err.mask3) != 0) continue;          // A3 needs |0>
            int e = std::popcount(t.index & err.mask0) + std::popcount(~t.index & err.mask2);
            cplx amp = t.amp * (err.base * err.xpow[e]);
            if (std::abs(amp) < kPruneTol) continue;
            out.push_back({t.index ^ flip, amp});
        }
        std::sort(out.begin(), out.end(),
                  [](const SparseState::Term& a, const SparseState::Term& b) {
                      return a.index < b.index;
                  });
    }
    return SparseState(state.dim(), std::move(out));
}

SparseState apply_enlarged_error(const ErrorIndex& idx, const GadParams& params,
                                 const SparseState& state) {
    return apply_enlarged_error(EnlargedError(idx, params), state);
}

ErrorSpace::ErrorSpace(int n, int max_weight, std::vector<int> allowed_digits)
    : n_(n), max_weight_(max_weight), allowed_(std::move(allowed_digits)) {
    if (n < 1 || n > 16) throw std::invalid_argument("ErrorSpace: n out of range");
    if (max_weight < 0 || max_weight > n)
        throw std::invalid_argument("ErrorSpace: max_weight out of range");
    std::sort(allowed_.begin(), allowed_.end());
    for (int d : allowed_)
        if (d < 1 || d > 3) throw std::invalid_argument("ErrorSpace: allowed digits must be 1..3");

    combos_.resize(max_weight + 1);
    digits_per_combo_.resize(max_weight + 1);
    weight_offset_.resize(max_weight + 2, 0);
    for (int q = 0; q <= max_weight; ++q) {
        // Position tuples in lexicographic order.
        std::vector<int> c(q);
        for (int i = 0; i < q; ++i) c[i] = i;
        if (q == 0) combos_[q].push_back({});
        while (q > 0) {
            combos_[q].push_back(c);
            int i = q - 1;
            while (i >= 0 && c[i] == n - q + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < q; ++j) c[j] = c[j - 1] + 1;
        }
        std::size_t dp = 1;
        for (int i = 0; i < q; ++i) dp *= allowed_.size();
        digits_per_combo_[q] = dp;
        weight_offset_[q + 1] = weight_offset_[q] + combos_[q].size() * dp;
    }
    total_ = weight_offset_[max_weight + 1];
}

static ErrorIndex error_from_combo(int n, const std::vector<int>& positions,
                                   const std::vector<int>& digs) {
    ErrorIndex e;
    e.n = static_cast<uint8_t>(n);
    for (std::size_t i = 0; i < positions.size(); ++i)
        e.digits[positions[i]] = static_cast<uint8_t>(digs[i]);
    return e;
}

ErrorIndex ErrorSpace::get(std::size_t ordinal) const {
    if (ordinal >= total_) throw std::out_of_range("ErrorSpace: ordinal out of range");
    int q = 0;
    while (ordinal >= weight_offset_[q + 1]) ++q;
    std::size_t local = ordinal - weight_offset_[q];
    std::size_t combo_idx = local / digits_per_combo_[q];
    std::size_t digit_ord = local % digits_per_combo_[q];
    std::vector<int> digs(q);
    for (int i = q - 1; i >= 0; --i) {
        digs[i] = allowed_[digit_ord % allowed_.size()];
        digit_ord /= allowed_.size();
    }
    return error_from_combo(n_, combos_[q][combo_idx], digs);
}

double weight_probability(const std::vector<SparseState>& codewords, const GadParams& params,
                          int q) {
    if (codewords.empty()) throw std::invalid_argument("weight_probability: no codewords");
    int n = 0;
    std::size_t dim = codewords[0].dim();
    while ((std::size_t(1) << n) < dim) ++n;
    ErrorSpace space(n, q);
    double sum = 0.0;
    std::size_t begin = (q == 0) ? 0 : ErrorSpace(n, q - 1).size();
    for (std::size_t a = begin; a < space.size(); ++a) {
        EnlargedError err(space.get(a), params);
        if (!err.is_nonzero()) continue;
        for (const SparseState& cw : codewords) sum += apply_enlarged_error(err, cw).norm_sq();
    }
    return sum / static_cast<double>(codewords.size());
}

BeamSplitterSpace beam_splitter_space(double chi, int n_truncation) {
    if (n_truncation < 2) throw std::invalid_argument("beam_splitter_space: n_truncation < 2");
    const int levels = n_truncation + 1;
    const int dim = levels * levels;
    auto id = [&](int na, int nb) { return na * levels + nb; };

    DenseMatrix a(dim, dim), b(dim, dim);
    for (int na = 1; na < levels; ++na)
        for (int nb = 0; nb < levels; ++nb) a.at(id(na - 1, nb), id(na, nb)) = std::sqrt(na);
    for (int na = 0; na < levels; ++na)
        for (int nb = 1; nb < levels; ++nb) b.at(id(na, nb - 1), id(na, nb)) = std::sqrt(nb);

    DenseMatrix gen = (a.dagger() * b - b.dagger() * a).scaled(cplx(chi, 0.0));
    BeamSplitterSpace s;
    s.levels = levels;
    s.u = matrix_exp(gen);
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
}

std::array<DenseMatrix, 4> beam_splitter_kraus(double chi, double p, int n_truncation) {
    BeamSplitterSpace s = beam_splitter_space(chi, n_truncation);
    auto id = [&](int na, int nb) { return na * s.levels + nb; };
    const double q[2] = {p, 1.0 - p};

    // A_{jk}[m][n] = sqrt(q_j) <m,k|U|n,j>, restricted to the qubit subspace.
    auto extract = [&](int j, int k) {
        DenseMatrix m(2, 2);
        for (int row = 0; row < 2; ++row)
            for (int col = 0; col < 2; ++col)
                m.at(row, col) = std::sqrt(q[j]) * s.u.at(id(row, k), id(col, j));
        return m;
    };
    // Relabeling: A0 = A_00, A1 = A_01, A2 = A_11, A3 = A_10.
    return {extract(0, 0), extract(0, 1), extract(1, 1), extract(1, 0)};
}

double concurrence_gad(double gamma, double p) {
    const double w = p * gamma * gamma * (1.0 - p);
    const double a = 2.0 * (1.0 - gamma) + w;
    const double b = (1.0 - gamma) * ((1.0 - gamma) + w);
    const double sb = 2.0 * std::sqrt(std::max(0.0, b));
    const double c = 0.5 * (std::sqrt(std::max(0.0, a + sb)) - std::sqrt(std::max(0.0, a - sb)) -
                            2.0 * std::sqrt(w));
    return std::max(0.0, c);
}

std::array<double, 4> ppt_eigenvalues(double gamma, double p) {
    const double root =
        std::sqrt(0.25 * gamma * gamma - gamma - p * gamma * gamma + p * p * gamma * gamma + 1.0);
    return {0.5 * gamma * p + 0.5 * (1.0 - gamma), 0.5 * (1.0 - p * gamma),
            0.25 * gamma - 0.5 * root, 0.25 * gamma + 0.5 * root};
}

std::array<double, 4> ppt_eigenvalues_numeric(double gamma, double p) {
    // rho = sum_k (A_k x I) |beta><beta| (A_k x I)^dag, then transpose the
    // second subsystem and diagonalize.
    auto kraus = gad_kraus(GadParams(gamma, 1.0 - p));
    DenseMatrix beta(4, 1);
    beta.at(0, 0) = 1.0 / std::sqrt(2.0);  // |00>
    beta.at(3, 0) = 1.0 / std::sqrt(2.0);  // |11>
    DenseMatrix rho(4, 4);
    DenseMatrix eye = DenseMatrix::identity(2);
    for (const DenseMatrix& k : kraus) {
        DenseMatrix op = tensor_product(k, eye);
        DenseMatrix v = op * beta;
        rho = rho + v * v.dagger();
    }
    DenseMatrix pt(4, 4);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < 2; ++j2)
                    pt.at(i1 * 2 + i2, j1 * 2 + j2) = rho.at(i1 * 2 + j2, j1 * 2 + i2);
    EigResult e = hermitian_eig(pt);
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) out[i] = e.eigenvalues[i];
    return out;
}

std::optional<std::pair<double, double>> entanglement_breaking_region(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("entanglement_breaking_region: gamma out of range");
    const double disc = std::pow(gamma, 4) + 4.0 * std::pow(gamma, 3) - 4.0 * gamma * gamma;
    if (disc < 0.0 || gamma == 0.0) return std::nullopt;
    const double g2 = gamma * gamma;
    const double root = std::sqrt(disc);
    return std::make_pair((0.5 * g2 - 0.5 * root) / g2, (0.5 * g2 + 0.5 * root) / g2);
}

}  // namespace gadqec
