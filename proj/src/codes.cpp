#include "gadqec/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gadqec {

namespace {

uint32_t bit_of(int n, int qubit_one_based) { return uint32_t(1) << (n - qubit_one_based); }

uint32_t index_of(const std::string& ket) {
    uint32_t idx = 0;
    for (char c : ket) {
        idx <<= 1;
        if (c == '1')
            idx |= 1;
        else if (c != '0')
            throw std::invalid_argument("bad ket string");
    }
    return idx;
}

SparseState codeword_from_kets(int n, const std::vector<std::pair<int, std::string>>& kets) {
    const std::size_t dim = std::size_t(1) << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(kets.size()));
    std::vector<SparseState::Term> terms;
    terms.reserve(kets.size());
    for (const auto& [sign, ket] : kets) {
        if (static_cast<int>(ket.size()) != n) throw std::invalid_argument("ket length mismatch");
        terms.push_back({index_of(ket), cplx(sign * amp, 0.0)});
    }
    return SparseState::from_terms(dim, std::move(terms));
}

}  // namespace

PauliString PauliString::parse(const std::string& letters, int sign) {
    for (char c : letters)
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument("PauliString: bad letter");
    PauliString p;
    p.n = static_cast<int>(letters.size());
    p.letters = letters;
    p.sign = sign;
    return p;
}

SparseState PauliString::apply(const SparseState& state) const {
    if (state.dim() != (std::size_t(1) << n))
        throw std::invalid_argument("PauliString: dimension mismatch");
    uint32_t xmask = 0;
    for (int q = 1; q <= n; ++q)
        if (letters[q - 1] == 'X' || letters[q - 1] == 'Y') xmask |= bit_of(n, q);

    std::vector<SparseState::Term> out;
    out.reserve(state.terms().size());
    for (const auto& t : state.terms()) {
        cplx amp = t.amp * static_cast<double>(sign);
        for (int q = 1; q <= n; ++q) {
            const char l = letters[q - 1];
            if (l == 'I' || l == 'X') continue;
            const bool one = (t.index & bit_of(n, q)) != 0;
            if (l == 'Z') {
                if (one) amp = -amp;
            } else {  // Y
                amp *= one ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
            }
        }
        out.push_back({t.index ^ xmask, amp});
    }
    return SparseState::from_terms(state.dim(), std::move(out));
}

PauliString PauliString::operator*(const PauliString& o) const {
    if (n != o.n) throw std::invalid_argument("PauliString: length mismatch");
    // Single-qubit products with phases: table[a][b] = (letter, phase exponent
    // of i) for a*b, letters indexed I,X,Y,Z.
    auto code = [](char c) { return c == 'I' ? 0 : c == 'X' ? 1 : c == 'Y' ? 2 : 3; };
    static const char letter_tab[4][4] = {{'I', 'X', 'Y', 'Z'},
                                          {'X', 'I', 'Z', 'Y'},
                                          {'Y', 'Z', 'I', 'X'},
                                          {'Z', 'Y', 'X', 'I'}};
    static const int phase_tab[4][4] = {{0, 0, 0, 0},   // I*
                                        {0, 0, 1, 3},   // X*: XY=iZ, XZ=-iY
                                        {0, 3, 0, 1},   // Y*: YX=-iZ, YZ=iX
                                        {0, 1, 3, 0}};  // Z*: ZX=iY, ZY=-iX
    PauliString r;
    r.n = n;
    r.letters.resize(n);
    int phase = 0;  // exponent of i mod 4
    for (int q = 0; q < n; ++q) {
        int a = code(letters[q]), b = code(o.letters[q]);
        r.letters[q] = letter_tab[a][b];
        phase = (phase + phase_tab[a][b]) % 4;
    }
    if (phase == 1 || phase == 3)
        throw std::invalid_argument("PauliString: product has imaginary phase");
    r.sign = sign * o.sign * (phase == 2 ? -1 : 1);
    return r;
}

bool PauliString::operator==(const PauliString& o) const {
    return n == o.n && sign == o.sign && letters == o.letters;
}

GraphSpec GraphSpec::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphSpec g;
    g.n = n;
    g.adjacency.assign(n, std::vector<int>(n, 0));
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n || a == b)
            throw std::invalid_argument("GraphSpec: bad edge");
        g.adjacency[a - 1][b - 1] = 1;
        g.adjacency[b - 1][a - 1] = 1;
    }
    return g;
}

GraphSpec GraphSpec::loop(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return from_edges(n, edges);
}

void GraphSpec::validate() const {
    if (static_cast<int>(adjacency.size()) != n)
        throw std::invalid_argument("GraphSpec: bad adjacency size");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(adjacency[i].size()) != n)
            throw std::invalid_argument("GraphSpec: bad adjacency row");
        if (adjacency[i][i] != 0) throw std::invalid_argument("GraphSpec: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (adjacency[i][j] != 0 && adjacency[i][j] != 1)
                throw std::invalid_argument("GraphSpec: entries must be 0/1");
            if (adjacency[i][j] != adjacency[j][i])
                throw std::invalid_argument("GraphSpec: adjacency not symmetric");
        }
    }
}

SparseState graph_state(const GraphSpec& g) {
    g.validate();
    const std::size_t dim = std::size_t(1) << g.n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<SparseState::Term> terms;
    terms.reserve(dim);
    for (uint32_t mu = 0; mu < dim; ++mu) {
        int edges_inside = 0;
        for (int i = 0; i < g.n; ++i) {
            if (!(mu & bit_of(g.n, i + 1))) continue;
            for (int j = i + 1; j < g.n; ++j)
                if (g.adjacency[i][j] && (mu & bit_of(g.n, j + 1))) ++edges_inside;
        }
        terms.push_back({mu, cplx((edges_inside % 2 == 0 ? amp : -amp), 0.0)});
    }
    return SparseState(dim, std::move(terms));
}

double QuantumCode::k_encoded() const { return std::log2(static_cast<double>(K)); }

std::vector<SparseState> build_9_12_3_codewords() {
    SparseState l9 = graph_state(GraphSpec::loop(9));
    static const std::vector<std::vector<int>> vertex_sets = {
        {},           {2, 6, 7},    {4, 5, 9},          {2, 3, 6, 8},
        {3, 5, 8, 9}, {2, 3, 4, 5, 6, 7, 8, 9},         {1, 4, 7},
        {1, 2, 4, 6}, {1, 5, 7, 9}, {1, 2, 3, 4, 6, 7, 8},
        {1, 3, 4, 5, 7, 8, 9},      {1, 2, 3, 5, 6, 8, 9}};
    std::vector<SparseState> out;
    out.reserve(12);
    for (const auto& vs : vertex_sets) {
        uint32_t zmask = 0;
        for (int v : vs) zmask |= bit_of(9, v);
        std::vector<SparseState::Term> terms = l9.terms();
        for (auto& t : terms)
            if (std::popcount(t.index & zmask) % 2 == 1) t.amp = -t.amp;
        out.emplace_back(l9.dim(), std::move(terms));
    }
    return out;
}

namespace {

QuantumCode make_five_qubit() {
    QuantumCode c;
    c.name = "five_qubit";
    c.n = 5;
    c.K = 2;
    c.additive = true;
    c.distance = 3;
    c.codewords = {
        codeword_from_kets(5, {{-1, "00000"}, {+1, "01111"}, {-1, "10011"}, {+1, "11100"},
                               {+1, "00110"}, {+1, "01001"}, {+1, "10101"}, {+1, "11010"}}),
        codeword_from_kets(5, {{-1, "11111"}, {+1, "10000"}, {+1, "01100"}, {-1, "00011"},
                               {+1, "11001"}, {+1, "10110"}, {-1, "01010"}, {-1, "00101"}})};
    c.stabilizer_generators = {PauliString::parse("XZZXI"), PauliString::parse("IXZZX"),
                               PauliString::parse("XIXZZ"), PauliString::parse("ZXIXZ")};
    return c;
}

QuantumCode make_css_seven() {
    QuantumCode c;
    c.name = "css_seven";
    c.n = 7;
    c.K = 2;
    c.additive = true;
    c.distance = 3;
    c.codewords = {
        codeword_from_kets(7, {{+1, "0000000"}, {+1, "0110011"}, {+1, "1010101"},
                               {+1, "1100110"}, {+1, "0001111"}, {+1, "0111100"},
                               {+1, "1011010"}, {+1, "1101001"}}),
        codeword_from_kets(7, {{+1, "1111111"}, {+1, "1001100"}, {+1, "0101010"},
                               {+1, "0011001"}, {+1, "1110000"}, {+1, "1000011"},
                               {+1, "0100101"}, {+1, "0010110"}})};
    c.stabilizer_generators = {PauliString::parse("IIIXXXX"), PauliString::parse("IXXIIXX"),
                               PauliString::parse("XIXIXIX"), PauliString::parse("IIIZZZZ"),
                               PauliString::parse("IZZIIZZ"), PauliString::parse("ZIZIZIZ")};
    return c;
}

QuantumCode make_six_degenerate() {
    QuantumCode c;
    c.name = "six_degenerate";
    c.n = 6;
    c.K = 2;
    c.additive = true;
    c.distance = 3;
    // The second codeword's fourth ket is printed with seven characters in
    // the source table; |100010> is the unique six-character reduction that
    // passes orthonormality and stabilizer verification.
    c.codewords = {
        codeword_from_kets(6, {{+1, "000000"}, {-1, "100111"}, {+1, "001111"}, {-1, "101000"},
                               {-1, "010010"}, {+1, "110101"}, {+1, "011101"}, {-1, "111010"}}),
        codeword_from_kets(6, {{+1, "001010"}, {+1, "101101"}, {+1, "000101"}, {+1, "100010"},
                               {-1, "011000"}, {-1, "111111"}, {+1, "010111"}, {+1, "110000"}})};
    c.stabilizer_generators = {PauliString::parse("YIZXXY"), PauliString::parse("ZXIIXZ"),
                               PauliString::parse("IZXXXX"), PauliString::parse("IIIZIZ"),
                               PauliString::parse("ZZZIZI")};
    return c;
}

QuantumCode make_shor_nine() {
    QuantumCode c;
    c.name = "shor_nine";
    c.n = 9;
    c.K = 2;
    c.additive = true;
    c.distance = 3;
    std::vector<std::pair<int, std::string>> zero, one;
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
            for (int b3 = 0; b3 < 2; ++b3) {
                std::string ket;
                for (int b : {b1, b2, b3}) ket += b ? "111" : "000";
                zero.push_back({+1, ket});
                one.push_back({(b1 + b2 + b3) % 2 == 0 ? +1 : -1, ket});
            }
    c.codewords = {codeword_from_kets(9, zero), codeword_from_kets(9, one)};
    c.stabilizer_generators = {
        PauliString::parse("ZZIIIIIII"), PauliString::parse("ZIZIIIIII"),
        PauliString::parse("IIIZZIIII"), PauliString::parse("IIIZIZIII"),
        PauliString::parse("IIIIIIZZI"), PauliString::parse("IIIIIIZIZ"),
        PauliString::parse("XXXXXXIII"), PauliString::parse("XXXIIIXXX")};
    return c;
}

QuantumCode make_eight_concat() {
    QuantumCode c;
    c.name = "eight_concat";
    c.n = 8;
    c.K = 2;
    c.additive = true;
    c.distance = 2;
    c.codewords = {
        codeword_from_kets(8, {{+1, "00000110"}, {+1, "00001001"}, {+1, "11110110"},
                               {+1, "11111001"}}),
        codeword_from_kets(8, {{+1, "01100000"}, {+1, "01101111"}, {+1, "10010000"},
                               {+1, "10011111"}})};
    c.stabilizer_generators = {
        PauliString::parse("XXXXIIII"), PauliString::parse("IIIIXXXX"),
        PauliString::parse("ZIIZIIII"), PauliString::parse("IIIIZIIZ"),
        PauliString::parse("IZZIIIII"), PauliString::parse("IIIIIZZI"),
        PauliString::parse("ZZIIZZII", -1)};
    return c;
}

QuantumCode make_leung_four() {
    QuantumCode c;
    c.name = "leung_four";
    c.n = 4;
    c.K = 2;
    c.additive = true;
    c.codewords = {codeword_from_kets(4, {{+1, "0000"}, {+1, "1111"}}),
                   codeword_from_kets(4, {{+1, "0011"}, {+1, "1100"}})};
    c.stabilizer_generators = {PauliString::parse("XXXX"), PauliString::parse("ZZII"),
                               PauliString::parse("IIZZ")};
    return c;
}

QuantumCode make_erasure_four() {
    QuantumCode c;
    c.name = "erasure_four";
    c.n = 4;
    c.K = 2;
    c.additive = true;
    c.codewords = {codeword_from_kets(4, {{+1, "0000"}, {+1, "1111"}}),
                   codeword_from_kets(4, {{+1, "0110"}, {+1, "1001"}})};
    c.stabilizer_generators = {PauliString::parse("XXXX"), PauliString::parse("ZIIZ"),
                               PauliString::parse("IZZI")};
    return c;
}

QuantumCode make_gottesman_833() {
    QuantumCode c;
    c.name = "gottesman_833";
    c.n = 8;
    c.K = 8;
    c.additive = true;
    c.distance = 3;
    c.stabilizer_generators = {
        PauliString::parse("XXXXXXXX"), PauliString::parse("ZZZZZZZZ"),
        PauliString::parse("IXIXYZYZ"), PauliString::parse("IXZYIXZY"),
        PauliString::parse("IYXZXZIY")};

    // Codewords from the stabilizer projector: |ijk> = X1^i X2^j X3^k
    // sum_{g in S} g |0...0>.
    std::vector<PauliString> group = {PauliString::parse("IIIIIIII")};
    for (const PauliString& gen : c.stabilizer_generators) {
        std::vector<PauliString> next = group;
        for (const PauliString& g : group) next.push_back(g * gen);
        group = std::move(next);
    }
    SparseState start = SparseState::basis(std::size_t(1) << 8, 0);
    SparseState sum = SparseState::zero(start.dim());
    for (const PauliString& g : group) sum = sum.axpy(cplx(1.0, 0.0), g.apply(start));
    SparseState base = sum.normalized();

    const PauliString xbar1 = PauliString::parse("XXIIIZIZ");
    const PauliString xbar2 = PauliString::parse("XIXZIIZI");
    const PauliString xbar3 = PauliString::parse("XIIZXZII");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                SparseState cw = base;
                if (i) cw = xbar1.apply(cw);
                if (j) cw = xbar2.apply(cw);
                if (k) cw = xbar3.apply(cw);
                c.codewords.push_back(cw.normalized());
            }
    return c;
}

QuantumCode make_nonadd_11_2_3() {
    QuantumCode c;
    c.name = "nonadd_11_2_3";
    c.n = 11;
    c.K = 2;
    c.additive = false;
    c.distance = 3;
    static const std::vector<std::string> rows = {
        "00000000000", "10100011101", "11010001110", "01101000111",
        "10110100011", "11011010001", "11101101000", "01110110100",
        "00111011010", "00011101101", "10001110110", "01000111011"};
    std::vector<std::pair<int, std::string>> zero, one;
    for (const std::string& r : rows) {
        zero.push_back({+1, r});
        std::string comp = r;
        for (char& ch : comp) ch = (ch == '0') ? '1' : '0';
        one.push_back({+1, comp});
    }
    c.codewords = {codeword_from_kets(11, zero), codeword_from_kets(11, one)};
    return c;
}

QuantumCode make_nonadd_9_12_3() {
    QuantumCode c;
    c.name = "nonadd_9_12_3";
    c.n = 9;
    c.K = 12;
    c.additive = false;
    c.distance = 3;
    c.codewords = build_9_12_3_codewords();
    return c;
}

QuantumCode make_nonadd_6_5() {
    QuantumCode c;
    c.name = "nonadd_6_5";
    c.n = 6;
    c.K = 5;
    c.additive = false;
    auto pair = [&](const std::string& a) {
        std::string comp = a;
        for (char& ch : comp) ch = (ch == '0') ? '1' : '0';
        return codeword_from_kets(6, {{+1, a}, {+1, comp}});
    };
    c.codewords = {pair("000000"), pair("110000"), pair("001100"), pair("000011"),
                   pair("010101")};
    return c;
}

QuantumCode make_nonadd_8_12() {
    QuantumCode c;
    c.name = "nonadd_8_12";
    c.n = 8;
    c.K = 12;
    c.additive = false;
    auto pair = [&](const std::string& a) {
        std::string comp = a;
        for (char& ch : comp) ch = (ch == '0') ? '1' : '0';
        return codeword_from_kets(8, {{+1, a}, {+1, comp}});
    };
    c.codewords = {pair("00000000"), pair("00000011"), pair("00001100"), pair("00110000"),
                   pair("11000000"), pair("10101000"), pair("01011000"), pair("01100100"),
                   pair("10010100"), pair("11110000"), pair("11001100"), pair("00111100")};
    return c;
}

}  // namespace

QuantumCode build_code(const std::string& name) {
    if (name == "five_qubit") return make_five_qubit();
    if (name == "css_seven") return make_css_seven();
    if (name == "six_degenerate") return make_six_degenerate();
    if (name == "shor_nine") return make_shor_nine();
    if (name == "eight_concat") return make_eight_concat();
    if (name == "leung_four") return make_leung_four();
    if (name == "erasure_four") return make_erasure_four();
    if (name == "gottesman_833") return make_gottesman_833();
    if (name == "nonadd_11_2_3") return make_nonadd_11_2_3();
    if (name == "nonadd_9_12_3") return make_nonadd_9_12_3();
    if (name == "nonadd_6_5") return make_nonadd_6_5();
    if (name == "nonadd_8_12") return make_nonadd_8_12();
    throw std::invalid_argument("build_code: unknown code name '" + name + "'");
}

std::vector<std::string> registry_code_names() {
    return {"five_qubit",   "css_seven",     "six_degenerate", "shor_nine",
            "eight_concat", "leung_four",    "erasure_four",   "gottesman_833",
            "nonadd_11_2_3", "nonadd_9_12_3", "nonadd_6_5",     "nonadd_8_12"};
}

StabilizerReport verify_stabilizer(const QuantumCode& code) {
    if (!code.additive || code.stabilizer_generators.empty())
        throw std::invalid_argument("verify_stabilizer: code has no stabilizer generators");
    StabilizerReport report;
    for (std::size_t g = 0; g < code.stabilizer_generators.size(); ++g) {
        for (std::size_t w = 0; w < code.codewords.size(); ++w) {
            SparseState mapped = code.stabilizer_generators[g].apply(code.codewords[w]);
            double residual = mapped.axpy(cplx(-1.0, 0.0), code.codewords[w]).norm();
            if (residual >= 1e-10) {
                report.pass = false;
                report.failures.push_back({g, w, residual});
            }
        }
    }
    return report;
}

bool is_self_complementary(const QuantumCode& code, double tol) {
    const uint32_t full = static_cast<uint32_t>(code.dim() - 1);
    for (const SparseState& cw : code.codewords) {
        if (cw.terms().size() != 2) return false;
        const auto& t0 = cw.terms()[0];
        const auto& t1 = cw.terms()[1];
        if ((t0.index ^ full) != t1.index) return false;
        if (std::abs(std::abs(t0.amp) - std::abs(t1.amp)) > tol) return false;
    }
    return true;
}

bool hamming_bound_satisfiable(int n, int k, int t) {
    if (t > n || n < 0 || k < 0 || t < 0)
        throw std::invalid_argument("hamming_bound_satisfiable: bad arguments");
    if (n >= 63) throw std::invalid_argument("hamming_bound_satisfiable: n too large");
    using u128 = unsigned __int128;
    u128 sum = 0;
    for (int j = 0; j <= t; ++j) {
        u128 binom = 1;
        for (int i = 0; i < j; ++i) binom = binom * static_cast<u128>(n - i) / (i + 1);
        u128 pw = 1;
        for (int i = 0; i < j; ++i) pw *= 3;
        sum += binom * pw;
    }
    return (u128(1) << k) * sum <= (u128(1) << n);
}

}  // namespace gadqec
