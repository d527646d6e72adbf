#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gadqec {

using Evaluator = std::function<double(double gamma, double epsilon)>;

/// Log-spaced gamma samples with a proportional epsilon rule.
struct SampleBox {
    double gamma_min = 1e-3;
    double gamma_max = 2e-2;
    int points = 8;
    double eps_over_gamma = 0.0;
};

struct FitResult {
    std::vector<double> coefficients;
    double residual = 0.0;   // rms of the least-squares residual
    double condition = 0.0;  // normal-matrix condition estimate
};

/// Least-squares fit of 1 - F against monomials gamma^a eps^b over the
/// sample box. Throws when the design matrix is ill-conditioned (basis
/// monomials collinear under the epsilon rule).
FitResult fit_expansion(const Evaluator& f, const std::vector<std::pair<int, int>>& basis,
                        const SampleBox& box);

/// Leading coefficients of 1 - F in the basis {gamma^2 (or gamma^3),
/// eps^2, eps*gamma}, separated by three proportional-epsilon fits.
struct GadCoefficients {
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    bool cubic_leading = false;
    std::optional<double> eps2;
    std::optional<double> epsgamma;
    double residual = 0.0;
};

GadCoefficients fit_gad_expansion(const Evaluator& f, bool cubic_leading, bool gamma_only,
                                  const SampleBox& box = {});

/// One fitted-vs-reference coefficient comparison.
struct ExpansionReport {
    struct Entry {
        std::string monomial;
        double fitted = 0.0;
        double reference = 0.0;
        double rel_error = 0.0;
        bool checked = false;  // counted toward pass/fail
        bool pass = true;
    };
    std::string code;
    std::vector<Entry> entries;
    double residual = 0.0;
    bool pass = true;
};

/// Runs the numeric fidelity for a registry code (default correctable set,
/// weight-4 truncation) and compares fitted leading coefficients against
/// the reference table at the given relative tolerance.
ExpansionReport verify_paper_coefficients(const std::string& code_name, double tolerance = 0.05);

/// Fixed reference polynomials in gamma, evaluated by Horner's rule.
struct PaperPolynomial {
    std::string name;
    std::vector<double> coefficients;  // index = exponent

    double evaluate(double x) const;
};

PaperPolynomial seven_qubit_fidelity_taylor();
PaperPolynomial nine_qubit_fidelity_polynomial();

/// Closed-form entanglement fidelity of the seven-qubit scheme at eps = 0.
double seven_qubit_fidelity_closed_form(double gamma);

}  // namespace gadqec
