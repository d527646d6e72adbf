#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gadqec/dense_matrix.hpp"
#include "gadqec/gram_schmidt.hpp"
#include "gadqec/sparse_state.hpp"

using namespace gadqec;

namespace {

DenseMatrix pauli_x() {
    DenseMatrix m(2, 2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

DenseMatrix pauli_z() {
    DenseMatrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

DenseMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m.at(i, j) = cplx(dist(rng), dist(rng));
            m.at(j, i) = std::conj(m.at(i, j));
        }
    }
    return m;
}

DenseMatrix random_2x2(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

uint32_t ket(const char* s) {
    uint32_t v = 0;
    for (const char* p = s; *p; ++p) v = (v << 1) | (*p == '1');
    return v;
}

SparseState make_state(std::size_t dim, std::vector<std::pair<double, const char*>> terms) {
    std::vector<SparseState::Term> ts;
    for (auto& [c, s] : terms) ts.push_back({ket(s), cplx(c, 0.0)});
    return SparseState::from_terms(dim, std::move(ts));
}

}  // namespace

TEST_CASE("tensor product identities and basis bookkeeping") {
    DenseMatrix i2 = DenseMatrix::identity(2);
    DenseMatrix i4 = tensor_product(i2, i2);
    CHECK(i4.frobenius_distance(DenseMatrix::identity(4)) == doctest::Approx(0.0));

    DenseMatrix e0(2, 1), e1(2, 1);
    e0.at(0, 0) = 1.0;
    e1.at(1, 0) = 1.0;
    DenseMatrix v = tensor_product(e0, e1);
    CHECK(v.rows() == 4);
    CHECK(std::abs(v.at(1, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(v.at(0, 0)) + std::abs(v.at(2, 0)) + std::abs(v.at(3, 0)) < 1e-15);
}

TEST_CASE("tensor product sigma_x sigma_z expands block-wise") {
    DenseMatrix m = tensor_product(pauli_x(), pauli_z());
    // Kronecker expansion by hand: [[0, Z], [Z, 0]].
    DenseMatrix expect(4, 4);
    expect.at(0, 2) = 1.0;
    expect.at(1, 3) = -1.0;
    expect.at(2, 0) = 1.0;
    expect.at(3, 1) = -1.0;
    CHECK(m.frobenius_distance(expect) < 1e-15);
}

TEST_CASE("tensor product associativity on random 2x2 inputs") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        DenseMatrix a = random_2x2(rng), b = random_2x2(rng), c = random_2x2(rng);
        DenseMatrix lhs = tensor_product(tensor_product(a, b), c);
        DenseMatrix rhs = tensor_product(a, tensor_product(b, c));
        CHECK(lhs.frobenius_distance(rhs) < 1e-14);
    }
}

TEST_CASE("tensor product rejects oversized results") {
    DenseMatrix big(1 << 13, 1 << 13);
    CHECK_THROWS_AS(tensor_product(big, big), std::invalid_argument);
}

TEST_CASE("inner products") {
    SparseState psi = make_state(4, {{0.6, "00"}, {0.8, "11"}});
    CHECK(std::abs(inner(psi, psi) - cplx(1.0, 0.0)) < 1e-15);

    SparseState a = make_state(4, {{1.0, "00"}});
    SparseState b = make_state(4, {{1.0, "11"}});
    CHECK(std::abs(inner(a, b)) == 0.0);

    // <e1 | (e1+e2)/sqrt(2)> = 1/sqrt(2), two-term hand computation.
    SparseState e1 = SparseState::basis(4, 1);
    SparseState sum = make_state(4, {{1.0 / std::sqrt(2.0), "01"}, {1.0 / std::sqrt(2.0), "10"}});
    CHECK(std::abs(inner(e1, sum) - cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);

    CHECK_THROWS_AS(inner(SparseState::basis(4, 0), SparseState::basis(8, 0)),
                    std::invalid_argument);
}

TEST_CASE("sparse arithmetic agrees with a dense reference") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::uniform_int_distribution<int> dim_dist(2, 64);
    for (int rep = 0; rep < 50; ++rep) {
        std::size_t dim = dim_dist(rng);
        std::vector<cplx> da(dim), db(dim);
        std::vector<SparseState::Term> ta, tb;
        for (uint32_t i = 0; i < dim; ++i) {
            if (dist(rng) > 0.0) {
                da[i] = cplx(dist(rng), dist(rng));
                ta.push_back({i, da[i]});
            }
            if (dist(rng) > 0.0) {
                db[i] = cplx(dist(rng), dist(rng));
                tb.push_back({i, db[i]});
            }
        }
        SparseState sa(dim, ta), sb(dim, tb);
        cplx f(dist(rng), dist(rng));

        cplx dot(0.0, 0.0);
        double nsq = 0.0;
        std::vector<cplx> axpy(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            dot += std::conj(da[i]) * db[i];
            nsq += std::norm(da[i]);
            axpy[i] = da[i] + f * db[i];
        }
        CHECK(std::abs(inner(sa, sb) - dot) < 1e-13);
        CHECK(sa.norm_sq() == doctest::Approx(nsq).epsilon(1e-13));
        std::vector<cplx> got = sa.axpy(f, sb).to_dense();
        for (std::size_t i = 0; i < dim; ++i) CHECK(std::abs(got[i] - axpy[i]) < 1e-13);
    }
}

TEST_CASE("gram_schmidt_complete trivial cases") {
    auto full = gram_schmidt_complete({}, 2, 1e-10);
    REQUIRE(full.size() == 2);
    CHECK(std::abs(inner(full[0], SparseState::basis(2, 0)) - cplx(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(inner(full[1], SparseState::basis(2, 1)) - cplx(1.0, 0.0)) < 1e-14);

    auto rest = gram_schmidt_complete({SparseState::basis(2, 0)}, 2, 1e-10);
    REQUIRE(rest.size() == 1);
    CHECK(std::abs(inner(rest[0], SparseState::basis(2, 1)) - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("gram_schmidt_complete output is orthonormal") {
    std::vector<SparseState> given = {
        make_state(8, {{1.0 / std::sqrt(2.0), "000"}, {1.0 / std::sqrt(2.0), "111"}}),
        make_state(8, {{1.0 / std::sqrt(2.0), "011"}, {-1.0 / std::sqrt(2.0), "100"}})};
    auto rest = gram_schmidt_complete(given, 8, 1e-10);
    REQUIRE(rest.size() == 6);
    std::vector<SparseState> all = given;
    for (auto& s : rest) all.push_back(s);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            double expect = i == j ? 1.0 : 0.0;
            CHECK(std::abs(inner(all[i], all[j]) - cplx(expect, 0.0)) < 1e-10);
        }
}

TEST_CASE("gram_schmidt_complete rejects non-orthonormal input") {
    std::vector<SparseState> bad = {SparseState::basis(4, 0),
                                    make_state(4, {{0.9, "00"}, {0.435889894354, "01"}})};
    CHECK_THROWS_AS(gram_schmidt_complete(bad, 4, 1e-8), std::invalid_argument);
}

namespace {

/// The explicit 32-vector five-qubit basis, parametrized by the damping
/// probability.
struct FiveQubitBasis {
    double u;                    // 1 - gamma
    std::vector<SparseState> e;  // e[1]..e[32]

    SparseState st(std::vector<std::pair<double, const char*>> terms) {
        double nsq = 0.0;
        for (auto& [c, s] : terms) nsq += c * c;
        std::vector<SparseState::Term> ts;
        for (auto& [c, s] : terms) ts.push_back({ket(s), cplx(c / std::sqrt(nsq), 0.0)});
        return SparseState::from_terms(32, std::move(ts));
    }

    explicit FiveQubitBasis(double gamma) : u(1.0 - gamma) {
        const double u12 = std::sqrt(u), u32 = std::pow(u, 1.5), u2 = u * u;
        const double u52 = std::pow(u, 2.5);
        e.resize(33, SparseState::zero(32));
        e[1] = st({{-1, "00000"}, {u2, "01111"}, {-u32, "10011"}, {u32, "11100"},
                   {u, "00110"}, {u, "01001"}, {u32, "10101"}, {u32, "11010"}});
        e[2] = st({{-u52, "11111"}, {u12, "10000"}, {u, "01100"}, {-u, "00011"},
                   {u32, "11001"}, {u32, "10110"}, {-u, "01010"}, {-u, "00101"}});
        e[3] = st({{-1, "00011"}, {1, "01100"}, {1, "00101"}, {1, "01010"}});
        e[4] = st({{-u2, "01111"}, {1, "00000"}, {u, "01001"}, {u, "00110"}});
        e[5] = st({{u32, "00111"}, {u, "10100"}, {u12, "00001"}, {u, "10010"}});
        e[6] = st({{-u2, "10111"}, {u12, "00100"}, {u, "10001"}, {-u12, "00010"}});
        e[7] = st({{u32, "01011"}, {u, "11000"}, {u, "10001"}, {u12, "00010"}});
        e[8] = st({{-u2, "11011"}, {u12, "01000"}, {u, "10010"}, {-u12, "00001"}});
        e[9] = st({{u32, "01101"}, {-u, "10001"}, {u12, "00100"}, {u, "11000"}});
        e[10] = st({{-u2, "11101"}, {-u12, "00001"}, {u, "10100"}, {-u12, "01000"}});
        e[11] = st({{u32, "01110"}, {-u, "10010"}, {u12, "01000"}, {u, "10100"}});
        e[12] = st({{-u2, "11110"}, {-u12, "00010"}, {u, "11000"}, {-u12, "00100"}});
        e[13] = st({{-1, "10000"}, {u2, "11111"}, {u, "10110"}, {u, "11001"}});
        e[14] = st({{1, "11100"}, {-1, "10011"}, {-1, "11010"}, {-1, "10101"}});
        e[15] = st({{-1, "01000"}, {-u32, "11011"}, {u, "01110"}, {u32, "11101"}});
        e[16] = st({{u12, "11000"}, {-u, "01011"}, {u32, "11110"}, {-u, "01101"}});
        e[17] = st({{-1, "00100"}, {-u32, "10111"}, {u, "01101"}, {u32, "11110"}});
        e[18] = st({{u12, "10100"}, {-u, "00111"}, {u32, "11101"}, {-u, "01110"}});
        e[19] = st({{-1, "00010"}, {u32, "11110"}, {u, "01011"}, {u32, "10111"}});
        e[20] = st({{u12, "10010"}, {u, "01110"}, {u32, "11011"}, {-u, "00111"}});
        e[21] = st({{-1, "00001"}, {u32, "11101"}, {u, "00111"}, {u32, "11011"}});
        e[22] = st({{u12, "10001"}, {u, "01101"}, {u32, "10111"}, {-u, "01011"}});
        e[23] = st({{1, "10110"}, {-1, "11001"}});
        e[24] = st({{1, "11100"}, {1, "10011"}});
        e[25] = st({{1, "11010"}, {-1, "10101"}});
        e[26] = st({{1, "00011"}, {1, "01100"}});
        e[27] = st({{1, "00101"}, {-1, "01010"}});
        e[28] = st({{1, "01001"}, {-1, "00110"}});

        auto tail = [&](const char* lead, int a, int b, double sc, int c, int d) {
            SparseState v = SparseState::basis(32, ket(lead));
            v = v.axpy(cplx(-u, 0.0), e[a]);
            v = v.axpy(cplx(-u, 0.0), e[b]);
            v = v.axpy(cplx(sc * u, 0.0), e[c]);
            v = v.axpy(cplx(-u12, 0.0), e[d]);
            return v.normalized();
        };
        e[29] = tail("11000", 7, 9, -1.0, 12, 16);
        e[30] = tail("10100", 5, 10, -1.0, 11, 18);
        e[31] = tail("10010", 5, 8, +1.0, 11, 20);
        e[32] = tail("10001", 6, 7, +1.0, 9, 22);
    }
};

}  // namespace

TEST_CASE("gram_schmidt_complete spans the published five-qubit completion") {
    FiveQubitBasis basis(0.1);
    std::vector<SparseState> given(basis.e.begin() + 1, basis.e.begin() + 29);
    auto rest = gram_schmidt_complete(given, 32, 1e-8);
    REQUIRE(rest.size() == 4);
    for (int k = 29; k <= 32; ++k) {
        SparseState target = basis.e[k];
        for (const SparseState& b : rest) target = target.axpy(-inner(b, target), b);
        CHECK(target.norm() < 1e-10);
    }
}

TEST_CASE("hermitian_eig on textbook inputs") {
    DenseMatrix d(2, 2);
    d.at(0, 0) = 3.0;
    d.at(1, 1) = 1.0;
    EigResult ed = hermitian_eig(d);
    CHECK(ed.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(ed.eigenvalues[1] == doctest::Approx(1.0));

    EigResult ex = hermitian_eig(pauli_x());
    CHECK(ex.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(ex.eigenvalues[1] == doctest::Approx(-1.0));
    for (int k = 0; k < 2; ++k) {
        cplx a = ex.eigenvectors.at(0, k), b = ex.eigenvectors.at(1, k);
        CHECK(std::abs(std::abs(a) - 1.0 / std::sqrt(2.0)) < 1e-12);
        double sign = k == 0 ? 1.0 : -1.0;
        CHECK(std::abs(b - sign * a) < 1e-12);
    }
}

TEST_CASE("hermitian_eig reconstruction and trace on random input") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        DenseMatrix m = random_hermitian(rng, 4);
        EigResult e = hermitian_eig(m);
        DenseMatrix lam(4, 4);
        for (int i = 0; i < 4; ++i) lam.at(i, i) = e.eigenvalues[i];
        DenseMatrix rec = e.eigenvectors * lam * e.eigenvectors.dagger();
        CHECK(rec.frobenius_distance(m) < 1e-10);
        DenseMatrix vtv = e.eigenvectors.dagger() * e.eigenvectors;
        CHECK(vtv.frobenius_distance(DenseMatrix::identity(4)) < 1e-10);
        double trace = m.trace().real();
        double sum = 0.0;
        for (double l : e.eigenvalues) sum += l;
        CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    DenseMatrix m(2, 2);
    m.at(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), std::invalid_argument);
}

TEST_CASE("inv_sqrt_psd") {
    DenseMatrix eye = DenseMatrix::identity(3);
    CHECK(inv_sqrt_psd(eye, 1e-12).frobenius_distance(eye) < 1e-12);

    DenseMatrix d(2, 2);
    d.at(0, 0) = 4.0;
    DenseMatrix r = inv_sqrt_psd(d, 1e-12);
    CHECK(std::abs(r.at(0, 0) - cplx(0.5, 0.0)) < 1e-14);
    CHECK(std::abs(r.at(1, 1)) < 1e-14);

    // m (inv_sqrt m)^2 is the projector onto supp m.
    std::mt19937 rng(5);
    DenseMatrix h = random_hermitian(rng, 4);
    DenseMatrix psd = h * h.dagger();
    DenseMatrix is = inv_sqrt_psd(psd, 1e-10);
    DenseMatrix proj = psd * is * is;
    CHECK((proj * proj).frobenius_distance(proj) < 1e-9);

    DenseMatrix neg(2, 2);
    neg.at(0, 0) = -1.0;
    CHECK_THROWS_AS(inv_sqrt_psd(neg, 1e-12), std::invalid_argument);
}

TEST_CASE("matrix_exp matches scalar exponentials") {
    DenseMatrix a(2, 2);
    a.at(0, 0) = cplx(0.0, 0.3);
    a.at(1, 1) = cplx(0.0, -0.7);
    DenseMatrix e = matrix_exp(a);
    CHECK(std::abs(e.at(0, 0) - std::exp(cplx(0.0, 0.3))) < 1e-14);
    CHECK(std::abs(e.at(1, 1) - std::exp(cplx(0.0, -0.7))) < 1e-14);

    // Rotation generator: exp(t[[0,-1],[1,0]]) is a plane rotation.
    DenseMatrix g(2, 2);
    g.at(0, 1) = -0.5;
    g.at(1, 0) = 0.5;
    DenseMatrix r = matrix_exp(g);
    CHECK(std::abs(r.at(0, 0) - cplx(std::cos(0.5), 0.0)) < 1e-13);
    CHECK(std::abs(r.at(1, 0) - cplx(std::sin(0.5), 0.0)) < 1e-13);
}
