#include "gadqec/series.hpp"

#include <cmath>
#include <stdexcept>

#include "gadqec/fidelity.hpp"

namespace gadqec {

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i) out.push_back(std::exp(la + (lb - la) * i / (n - 1)));
    return out;
}

/// Solves the normal equations for a small column-scaled least-squares
/// problem in extended precision.
FitResult solve_ls(const std::vector<std::vector<double>>& design,
                   const std::vector<double>& rhs) {
    const std::size_t rows = design.size();
    const std::size_t cols = design[0].size();
    std::vector<long double> scale(cols, 0.0L);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i)
            scale[j] = std::max(scale[j], (long double)std::fabs(design[i][j]));
        if (scale[j] == 0.0L) throw std::invalid_argument("fit_expansion: zero design column");
    }
    std::vector<std::vector<long double>> ata(cols, std::vector<long double>(cols, 0.0L));
    std::vector<long double> atb(cols, 0.0L);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const long double aij = design[i][j] / scale[j];
            atb[j] += aij * rhs[i];
            for (std::size_t k = j; k < cols; ++k) ata[j][k] += aij * design[i][k] / scale[k];
        }
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < j; ++k) ata[j][k] = ata[k][j];

    // Condition estimate from the scaled normal matrix diagonal pivots.
    std::vector<std::vector<long double>> m = ata;
    std::vector<long double> b = atb;
    long double min_pivot = 1e300L, max_pivot = 0.0L;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < cols; ++r)
            if (std::fabs((double)m[r][col]) > std::fabs((double)m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(b[col], b[piv]);
        long double p = m[col][col];
        min_pivot = std::min(min_pivot, (long double)std::fabs((double)p));
        max_pivot = std::max(max_pivot, (long double)std::fabs((double)p));
        if (std::fabs((double)p) < 1e-300)
            throw std::invalid_argument("fit_expansion: singular design matrix");
        for (std::size_t r = col + 1; r < cols; ++r) {
            long double f = m[r][col] / p;
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[col][c];
            b[r] -= f * b[col];
        }
    }
    FitResult res;
    res.condition = (double)(max_pivot / min_pivot);
    if (res.condition > 1e12)
        throw std::invalid_argument("fit_expansion: ill-conditioned design matrix");
    std::vector<long double> x(cols, 0.0L);
    for (std::size_t col = cols; col-- > 0;) {
        long double s = b[col];
        for (std::size_t c = col + 1; c < cols; ++c) s -= m[col][c] * x[c];
        x[col] = s / m[col][col];
    }
    res.coefficients.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) res.coefficients[j] = (double)(x[j] / scale[j]);

    long double rss = 0.0L;
    for (std::size_t i = 0; i < rows; ++i) {
        long double pred = 0.0L;
        for (std::size_t j = 0; j < cols; ++j) pred += (long double)res.coefficients[j] * design[i][j];
        rss += (pred - rhs[i]) * (pred - rhs[i]);
    }
    res.residual = std::sqrt((double)(rss / rows));
    return res;
}

}  // namespace

FitResult fit_expansion(const Evaluator& f, const std::vector<std::pair<int, int>>& basis,
                        const SampleBox& box) {
    if (basis.empty()) throw std::invalid_argument("fit_expansion: empty basis");
    std::vector<double> gammas = log_spaced(box.gamma_min, box.gamma_max, box.points);
    std::vector<std::vector<double>> design;
    std::vector<double> rhs;
    for (double g : gammas) {
        const double e = box.eps_over_gamma * g;
        std::vector<double> row;
        row.reserve(basis.size());
        for (auto [a, b] : basis) row.push_back(std::pow(g, a) * std::pow(e, b));
        design.push_back(std::move(row));
        rhs.push_back(1.0 - f(g, e));
    }
    return solve_ls(design, rhs);
}

GadCoefficients fit_gad_expansion(const Evaluator& f, bool cubic_leading, bool gamma_only,
                                  const SampleBox& box) {
    GadCoefficients out;
    out.cubic_leading = cubic_leading;

    SampleBox b0 = box;
    b0.eps_over_gamma = 0.0;
    FitResult base = fit_expansion(f, {{2, 0}, {3, 0}, {4, 0}}, b0);
    out.gamma2 = base.coefficients[0];
    out.gamma3 = base.coefficients[1];
    out.residual = base.residual;
    if (gamma_only) return out;

    // eps = gamma and eps = gamma/2 rules turn the three leading monomials
    // into two independent combinations on top of the pure-gamma part.
    SampleBox b1 = box;
    b1.eps_over_gamma = 1.0;
    SampleBox b2 = box;
    b2.eps_over_gamma = 0.5;
    double s1 = fit_expansion(f, {{2, 0}, {3, 0}}, b1).coefficients[0];
    double s2 = fit_expansion(f, {{2, 0}, {3, 0}}, b2).coefficients[0];
    const double a = s1 - out.gamma2;   // c02 + c11
    const double b = s2 - out.gamma2;   // c02/4 + c11/2
    out.epsgamma = 4.0 * b - a;
    out.eps2 = 2.0 * a - 4.0 * b;
    return out;
}

namespace {

struct PaperRow {
    const char* code;
    double gamma2;      // leading quadratic coefficient (0 for the cubic case)
    double gamma3;      // leading cubic coefficient, checked only when cubic
    bool cubic;
    double eps2;        // < 0 means no claim
    double epsgamma;    // < 0 means no claim
    bool check_epsgamma;
};

const PaperRow kPaperTable[] = {
    {"five_qubit", 2.5, 0.0, false, 10.0, 10.0, true},
    {"css_seven", 5.25, 0.0, false, 21.0, 21.0, true},
    {"eight_concat", 2.0, 0.0, false, 28.0, 28.0, true},
    {"six_degenerate", 2.0, 0.0, false, 15.0, 15.0, true},
    // The nine-qubit scheme shares recovery directions between its A3-type
    // singles and same-block weight-2 errors, which shifts the eps*gamma
    // term; that coefficient is reported but not gated.
    {"shor_nine", 0.0, 1.5, true, 36.0, 36.0, false},
    {"nonadd_11_2_3", 13.75, 0.0, false, 55.0, 55.0, true},
    {"nonadd_9_12_3", 9.0, 0.0, false, 36.0, 36.0, true},
    {"nonadd_6_5", 4.2, 0.0, false, -1.0, -1.0, false},
    {"nonadd_8_12", 7.5, 0.0, false, -1.0, -1.0, false},
    {"gottesman_833", 7.0, 0.0, false, -1.0, -1.0, false},
};

}  // namespace

ExpansionReport verify_paper_coefficients(const std::string& code_name, double tolerance) {
    const PaperRow* row = nullptr;
    for (const PaperRow& r : kPaperTable)
        if (code_name == r.code) row = &r;
    if (!row)
        throw std::invalid_argument("verify_paper_coefficients: no reference row for '" +
                                    code_name + "'");

    QuantumCode code = build_code(code_name);
    CorrectableSet set = default_correctable_set(code, ChannelRegime::GAD);
    const int max_weight = std::min(code.n, 4);
    Evaluator eval = [&](double g, double e) {
        GadParams params(g, e);
        RecoverySet rec = build_recovery(code, set, params);
        return entanglement_fidelity(code, rec, params, max_weight).value;
    };
    const bool gamma_only = row->eps2 < 0.0;
    GadCoefficients fit = fit_gad_expansion(eval, row->cubic, gamma_only);

    ExpansionReport report;
    report.code = code_name;
    report.residual = fit.residual;
    auto push = [&](const std::string& mono, double fitted, double reference, bool checked,
                    bool absolute = false) {
        ExpansionReport::Entry e;
        e.monomial = mono;
        e.fitted = fitted;
        e.reference = reference;
        e.rel_error = absolute ? std::fabs(fitted - reference)
                               : std::fabs(fitted - reference) / std::fabs(reference);
        e.checked = checked;
        e.pass = !checked || e.rel_error <= (absolute ? 0.1 : tolerance);
        if (!e.pass) report.pass = false;
        report.entries.push_back(e);
    };
    if (row->cubic) {
        push("gamma^2", fit.gamma2, 0.0, true, /*absolute=*/true);
        push("gamma^3", fit.gamma3, row->gamma3, true);
    } else {
        push("gamma^2", fit.gamma2, row->gamma2, true);
    }
    if (!gamma_only) {
        push("eps^2", *fit.eps2, row->eps2, row->eps2 >= 0.0);
        push("eps*gamma", *fit.epsgamma, row->epsgamma, row->check_epsgamma);
    }
    return report;
}

double PaperPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
    return acc;
}

PaperPolynomial seven_qubit_fidelity_taylor() {
    return {"seven_qubit_fidelity_taylor",
            {1.0, 0.0, -21.0 / 4.0, 35.0 / 4.0, -63.0 / 8.0, 609.0 / 128.0, -315.0 / 256.0,
             -51.0 / 256.0, -63.0 / 256.0, 1701.0 / 8192.0}};
}

PaperPolynomial nine_qubit_fidelity_polynomial() {
    return {"nine_qubit_fidelity_polynomial",
            {1.0, 0.0, 0.0, -3.0 / 2.0, -135.0 / 8.0, 513.0 / 8.0, -201.0 / 2.0, 675.0 / 8.0,
             -297.0 / 8.0, 53.0 / 8.0}};
}

double seven_qubit_fidelity_closed_form(double gamma) {
    const double u = 1.0 - gamma;
    const double first =
        std::sqrt((1.0 + 7.0 * std::pow(u, 4)) / 8.0) +
        std::sqrt((std::pow(u, 7) + 7.0 * std::pow(u, 3)) / 8.0);
    const double second =
        std::sqrt(4.0 * gamma * std::pow(u, 3) / 8.0) +
        std::sqrt((gamma * std::pow(u, 6) + 3.0 * gamma * u * u) / 8.0);
    return 0.25 * first * first + 7.0 / 4.0 * second * second;
}

}  // namespace gadqec
