#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "gadqec/channel.hpp"
#include "gadqec/codes.hpp"

using namespace gadqec;

TEST_CASE("gad_kraus at the amplitude-damping point") {
    auto k = gad_kraus(GadParams(0.1, 0.0));
    CHECK(std::abs(k[0].at(0, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(k[0].at(1, 1) - cplx(std::sqrt(0.9), 0.0)) < 1e-15);
    CHECK(std::abs(k[1].at(0, 1) - cplx(std::sqrt(0.1), 0.0)) < 1e-15);
    CHECK(k[2].max_abs() == 0.0);
    CHECK(k[3].max_abs() == 0.0);
}

TEST_CASE("gad_kraus with no damping") {
    auto k = gad_kraus(GadParams(0.0, 0.2));
    const double sp = std::sqrt(0.8), sq = std::sqrt(0.2);
    CHECK(k[0].frobenius_distance(DenseMatrix::identity(2).scaled(sp)) < 1e-15);
    CHECK(k[2].frobenius_distance(DenseMatrix::identity(2).scaled(sq)) < 1e-15);
    CHECK(k[1].max_abs() == 0.0);
    CHECK(k[3].max_abs() == 0.0);
}

TEST_CASE("gad_kraus completeness over a parameter grid") {
    for (int gi = 0; gi <= 10; ++gi)
        for (int ei = 0; ei <= 10; ++ei) {
            GadParams p(gi / 10.0, ei / 20.0);
            auto k = gad_kraus(p);
            DenseMatrix sum(2, 2);
            for (const auto& a : k) sum = sum + a.dagger() * a;
            CHECK(sum.frobenius_distance(DenseMatrix::identity(2)) < 1e-14);
        }
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(GadParams(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GadParams(1.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GadParams(0.5, 0.6), std::invalid_argument);
}

TEST_CASE("params_from_temperature") {
    // Zero-temperature limit: N_th = 0, p = 1.
    GadParams cold = params_from_temperature({1.0, 0.5, 50.0});
    CHECK(cold.epsilon == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cold.gamma == doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-10));

    // Approaching infinite temperature, p -> 1/2.
    GadParams hot = params_from_temperature({1.0, 0.0, 1e-9});
    CHECK(hot.p() == doctest::Approx(0.5).epsilon(1e-6));
    CHECK_THROWS_AS(params_from_temperature({1.0, 1.0, 0.0}), std::invalid_argument);
    CHECK(params_from_temperature({1.0, 1.0, 0.0}, true).epsilon == doctest::Approx(0.5));

    // hw/kT = 1: eps = e^{-1}/(1+e^{-1}).
    GadParams unit = params_from_temperature({1.0, 0.1, 1.0});
    CHECK(unit.epsilon ==
          doctest::Approx(std::exp(-1.0) / (1.0 + std::exp(-1.0))).epsilon(1e-12));
    CHECK(unit.epsilon == doctest::Approx(0.26894).epsilon(1e-4));
}

TEST_CASE("gamma_epsilon is strictly increasing in epsilon") {
    for (double g0t : {0.05, 0.3, 1.0}) {
        double prev = gamma_epsilon(g0t, 0.0);
        for (double eps = 0.02; eps < 0.5; eps += 0.02) {
            double cur = gamma_epsilon(g0t, eps);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("apply_enlarged_error basics") {
    GadParams ad(0.25, 0.0);
    // Weight-0 error on |00000> at eps = 0 is the identity.
    SparseState zero5 = SparseState::basis(32, 0);
    SparseState out = apply_enlarged_error(ErrorIndex::from_string("00000"), ad, zero5);
    REQUIRE(out.terms().size() == 1);
    CHECK(std::abs(out.terms()[0].amp - cplx(1.0, 0.0)) < 1e-15);

    // A1 on a qubit in |0> annihilates the state.
    SparseState dead = apply_enlarged_error(ErrorIndex::from_string("10000"), ad, zero5);
    CHECK(dead.is_zero());
}

TEST_CASE("weight-0 error on the four-qubit codeword") {
    const double gamma = 0.13;
    GadParams ad(gamma, 0.0);
    QuantumCode leung = build_code("leung_four");
    SparseState img = apply_enlarged_error(ErrorIndex::from_string("0000"), ad, leung.codewords[0]);
    // (|0000> + (1-g)^2 |1111>)/sqrt(2)
    REQUIRE(img.terms().size() == 2);
    CHECK(std::abs(img.terms()[0].amp - cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-14);
    CHECK(std::abs(img.terms()[1].amp -
                   cplx(std::pow(1.0 - gamma, 2) / std::sqrt(2.0), 0.0)) < 1e-14);
    const double expect =
        1.0 - 2.0 * gamma + 3.0 * gamma * gamma - 2.0 * std::pow(gamma, 3) +
        0.5 * std::pow(gamma, 4);
    CHECK(img.norm_sq() == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("error enumeration counts and uniqueness") {
    ErrorSpace all5(5, 5);
    CHECK(all5.size() == 1024);  // sum_q 3^q C(5,q) = 4^5

    ErrorSpace w0(7, 0);
    CHECK(w0.size() == 1);
    CHECK(w0.get(0).weight() == 0);

    ErrorSpace a1only(8, 2, {1});
    CHECK(a1only.size() == 37);  // 1 + 8 + 28

    std::set<std::string> seen;
    int last_weight = 0;
    for (std::size_t i = 0; i < all5.size(); ++i) {
        ErrorIndex e = all5.get(i);
        CHECK(e.weight() >= last_weight);  // weight-major order
        last_weight = e.weight();
        seen.insert(e.to_string());
    }
    CHECK(seen.size() == 1024);
}

TEST_CASE("enlarged-error completeness on random states") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int n = 2; n <= 4; ++n) {
        std::size_t dim = std::size_t(1) << n;
        std::vector<SparseState::Term> terms;
        for (uint32_t i = 0; i < dim; ++i) terms.push_back({i, cplx(dist(rng), dist(rng))});
        SparseState psi(dim, terms);
        psi = psi.normalized();

        GadParams params(0.3, 0.2);
        ErrorSpace space(n, n);
        double total = 0.0;
        for (std::size_t a = 0; a < space.size(); ++a)
            total += apply_enlarged_error(space.get(a), params, psi).norm_sq();
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("five-qubit weight probabilities match the published polynomial") {
    QuantumCode code = build_code("five_qubit");
    for (int i = 1; i <= 10; ++i) {
        double g = 0.01 * i;
        GadParams params(g, 0.0);
        double p0 = weight_probability(code.codewords, params, 0);
        double expect = 1.0 - 2.5 * g + 2.5 * g * g - 1.25 * std::pow(g, 3) +
                        0.375 * std::pow(g, 4) - 0.0625 * std::pow(g, 5);
        CHECK(p0 == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("weight probabilities sum to one") {
    for (const char* name : {"five_qubit", "six_degenerate", "leung_four", "nonadd_6_5"}) {
        QuantumCode code = build_code(name);
        for (auto [g, e] : std::vector<std::pair<double, double>>{
                 {0.1, 0.0}, {0.05, 0.02}, {0.3, 0.1}}) {
            GadParams params(g, e);
            double sum = 0.0;
            for (int q = 0; q <= code.n; ++q)
                sum += weight_probability(code.codewords, params, q);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    GadParams none(0.0, 0.0);
    QuantumCode code = build_code("five_qubit");
    CHECK(weight_probability(code.codewords, none, 0) == doctest::Approx(1.0));
    CHECK(weight_probability(code.codewords, none, 1) == doctest::Approx(0.0));
}

TEST_CASE("beam splitter reproduces the GAD Kraus operators") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> chi_dist(0.05, 1.5);
    std::uniform_real_distribution<double> p_dist(0.5, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        double chi = chi_dist(rng);
        double p = p_dist(rng);
        double gamma = std::sin(chi) * std::sin(chi);
        auto bs = beam_splitter_kraus(chi, p, 4);
        auto direct = gad_kraus(GadParams(gamma, 1.0 - p));
        for (int k = 0; k < 4; ++k) CHECK(bs[k].frobenius_distance(direct[k]) < 1e-12);
    }
}

TEST_CASE("transparent beam splitter") {
    auto bs = beam_splitter_kraus(0.0, 0.7, 4);
    CHECK(bs[0].frobenius_distance(DenseMatrix::identity(2).scaled(std::sqrt(0.7))) < 1e-14);
    CHECK(bs[2].frobenius_distance(DenseMatrix::identity(2).scaled(std::sqrt(0.3))) < 1e-14);
    CHECK(bs[1].max_abs() < 1e-14);
    CHECK(bs[3].max_abs() < 1e-14);
    CHECK_THROWS_AS(beam_splitter_kraus(0.3, 0.5, 1), std::invalid_argument);
}

TEST_CASE("beam splitter Heisenberg action rotates the modes") {
    const double chi = 0.37;
    const int trunc = 5;
    BeamSplitterSpace s = beam_splitter_space(chi, trunc);
    DenseMatrix got = s.u * s.a * s.u.dagger();
    DenseMatrix expect = s.a.scaled(std::cos(chi)) - s.b.scaled(std::sin(chi));
    // Compare on columns whose photon-number sector is complete.
    for (int na = 0; na < s.levels; ++na)
        for (int nb = 0; nb < s.levels; ++nb) {
            if (na + nb > trunc - 1) continue;
            std::size_t col = na * s.levels + nb;
            for (std::size_t row = 0; row < got.rows(); ++row)
                CHECK(std::abs(got.at(row, col) - expect.at(row, col)) < 1e-12);
        }
}

TEST_CASE("concurrence closed form") {
    for (double g : {0.0, 0.2, 0.5, 0.8})
        CHECK(concurrence_gad(g, 1.0) == doctest::Approx(std::sqrt(1.0 - g)).epsilon(1e-12));
    CHECK(concurrence_gad(0.0, 0.6) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_gad(0.9, 0.5) == doctest::Approx(0.0));
    CHECK(ppt_eigenvalues(0.9, 0.5)[2] >= 0.0);
}

TEST_CASE("partial transpose eigenvalues") {
    for (double g : {0.0, 0.3, 0.7, 0.95})
        for (double p : {0.5, 0.75, 1.0}) {
            auto lam = ppt_eigenvalues(g, p);
            CHECK(lam[0] + lam[1] + lam[2] + lam[3] == doctest::Approx(1.0).epsilon(1e-12));
            auto num = ppt_eigenvalues_numeric(g, p);
            std::sort(num.begin(), num.end());
            auto cf = lam;
            std::sort(cf.begin(), cf.end());
            for (int i = 0; i < 4; ++i) CHECK(std::abs(num[i] - cf[i]) < 1e-12);
        }
    CHECK(ppt_eigenvalues(0.0, 0.8)[2] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("entanglement breaking region") {
    auto region = entanglement_breaking_region(0.9);
    REQUIRE(region.has_value());
    CHECK(region->first == doctest::Approx(0.14427).epsilon(1e-3));
    CHECK(region->second == doctest::Approx(0.85573).epsilon(1e-3));

    CHECK(!entanglement_breaking_region(0.5).has_value());
    CHECK(!entanglement_breaking_region(0.8).has_value());

    auto full = entanglement_breaking_region(1.0);
    REQUIRE(full.has_value());
    CHECK(full->first == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(full->second == doctest::Approx(1.0).epsilon(1e-12));

    const double root = 2.0 * std::sqrt(2.0) - 2.0;
    CHECK(!entanglement_breaking_region(root - 1e-9).has_value());
    CHECK(entanglement_breaking_region(root + 1e-9).has_value());
}

TEST_CASE("concurrence vanishes exactly on the PPT region") {
    for (int gi = 1; gi <= 20; ++gi)
        for (int pi = 0; pi <= 20; ++pi) {
            double g = gi / 20.0;
            double p = pi / 20.0;
            bool separable = ppt_eigenvalues(g, p)[2] >= -1e-12;
            bool zero_conc = concurrence_gad(g, p) <= 1e-12;
            CHECK(separable == zero_conc);
        }
}
