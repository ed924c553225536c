#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "foamcat/chain_complex.hpp"
#include "foamcat/laurent.hpp"
#include "foamcat/snf.hpp"

using namespace foamcat;

TEST_CASE("quantum integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(2) == Laurent::q(1) + Laurent::q(-1));
    CHECK(qint(3) == Laurent::q(2) + Laurent::q(0) + Laurent::q(-2));
    CHECK_THROWS(qint(-1));
    for (int k = 0; k <= 9; ++k) CHECK(qint(k).eval_at_one() == k);
}

TEST_CASE("quantum binomials") {
    CHECK(qbinom(2, 1) == qint(2));
    CHECK(qbinom(3, 1) == qint(3));
    // [4]!/([2]![2]!) expanded symbolically
    Laurent expect = Laurent::q(4) + Laurent::q(2) + Laurent::q(0, 2) + Laurent::q(-2) + Laurent::q(-4);
    CHECK(qbinom(4, 2) == expect);
    CHECK_THROWS(qbinom(2, 3));
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(qbinom(n, k).nonneg_coeffs());
}

TEST_CASE("laurent arithmetic") {
    Laurent a = Laurent::q(2) + Laurent::q(0, -3);
    Laurent b = Laurent::q(-1, 5);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a.bar().bar() == a);
    CHECK(qint(5) * qint(2) == qint(6) + qint(4));  // [5][2] = [6]+[4]
}

static ZMat from_rows(const std::vector<std::vector<long>>& rows) {
    int r = (int)rows.size(), c = r ? (int)rows[0].size() : 0;
    ZMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    return m;
}

TEST_CASE("smith normal form basics") {
    auto d1 = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(d1.factors.size() == 2);
    CHECK(d1.factors[0] == 1);
    CHECK(d1.factors[1] == 6);

    auto d2 = smith_normal_form(ZMat(2, 2));
    CHECK(d2.factors.empty());

    auto d3 = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    REQUIRE(d3.factors.size() == 2);
    CHECK(d3.factors[0] == 2);
    CHECK(d3.factors[1] == 4);
}

// brute-force oracle: gcd of all k x k minors gives d1...dk products
static std::vector<Zint> snf_via_minors(const ZMat& m) {
    int n = std::min(m.rows(), m.cols());
    std::vector<Zint> gcds;  // gcd of k x k minors
    // enumerate minors recursively (tiny matrices only)
    for (int k = 1; k <= n; ++k) {
        Zint g = 0;
        std::vector<int> rsel(k), csel(k);
        std::function<void(int, int)> pick_rows = [&](int start, int idx) {
            if (idx == k) {
                std::function<void(int, int)> pick_cols = [&](int cstart, int cidx) {
                    if (cidx == k) {
                        // determinant by expansion
                        std::function<Zint(std::vector<int>, std::vector<int>)> det =
                            [&](std::vector<int> rs, std::vector<int> cs) -> Zint {
                            if (rs.size() == 1) return m.at(rs[0], cs[0]);
                            Zint s = 0;
                            for (size_t j = 0; j < cs.size(); ++j) {
                                std::vector<int> rs2(rs.begin() + 1, rs.end());
                                std::vector<int> cs2 = cs;
                                cs2.erase(cs2.begin() + j);
                                Zint sub = det(rs2, cs2);
                                Zint term = m.at(rs[0], cs[j]) * sub;
                                s += (j % 2 == 0) ? term : -term;
                            }
                            return s;
                        };
                        g = zgcd(g, det(rsel, csel));
                        return;
                    }
                    for (int c = cstart; c < m.cols(); ++c) {
                        csel[cidx] = c;
                        pick_cols(c + 1, cidx + 1);
                    }
                };
                pick_cols(0, 0);
                return;
            }
            for (int r = start; r < m.rows(); ++r) {
                rsel[idx] = r;
                pick_rows(r + 1, idx + 1);
            }
        };
        pick_rows(0, 0);
        gcds.push_back(zabs(g));
        if (g == 0) break;
    }
    std::vector<Zint> d;
    Zint prev = 1;
    for (auto& g : gcds) {
        if (g == 0) break;
        d.push_back(g / prev);
        prev = g;
    }
    return d;
}

TEST_CASE("snf randomized against minor-gcd oracle, with transforms") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        ZMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.set(i, j, entry(rng));
        auto res = smith_normal_form(m, true);
        auto oracle = snf_via_minors(m);
        REQUIRE(res.factors == oracle);
        for (size_t i = 0; i + 1 < res.factors.size(); ++i)
            CHECK(res.factors[i + 1] % res.factors[i] == 0);
        // U * M * V = diag(factors)
        ZMat d = (*res.U) * m * (*res.V);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                Zint want = (i == j && i < (int)res.factors.size()) ? res.factors[i] : Zint(0);
                CHECK(d.at(i, j) == want);
            }
        // invariance under row/column permutation
        std::vector<int> rp(r), cp(c);
        for (int i = 0; i < r; ++i) rp[i] = i;
        for (int j = 0; j < c; ++j) cp[j] = j;
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        CHECK(smith_normal_form(m.submatrix(rp, cp)).factors == res.factors);
    }
}

static GradedComplex single_map_complex(const ZMat& m, std::vector<int> sdeg, std::vector<int> tdeg) {
    GradedComplex c;
    GradedModule s{std::move(sdeg)}, t{std::move(tdeg)};
    c.objects[0] = s;
    c.objects[1] = t;
    GradedMap d(s, t, 0);
    for (int i = 0; i < m.rows(); ++i)
        for (auto& [j, v] : m.row(i)) d.set(i, j, v);
    c.diffs[0] = d;
    return c;
}

TEST_CASE("homology of simple complexes") {
    // 0 -> Z(q^0) -> 0
    GradedComplex c;
    c.objects[0] = GradedModule{{0}};
    auto h = homology(c);
    REQUIRE(h.entries.size() == 1);
    CHECK(h.entries.at({0, 0}).free_rank == 1);

    // 0 -> Z --x2--> Z -> 0, torsion lands on the target side
    auto c2 = single_map_complex(from_rows({{2}}), {0}, {0});
    auto h2 = homology(c2);
    REQUIRE(h2.entries.count({1, 0}) == 1);
    CHECK(h2.entries.at({1, 0}).free_rank == 0);
    CHECK(h2.entries.at({1, 0}).torsion == std::vector<Zint>{2});
    CHECK(h2.entries.count({0, 0}) == 0);

    // over Q torsion disappears
    auto hq = homology(c2, Ring::Q);
    CHECK(hq.entries.empty());
}

// Random complex with d^2 = 0: direct sum of standard pieces conjugated by
// random unimodular matrices.
static GradedComplex random_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> npieces(1, 4), kind(0, 2), scal(-3, 3);
    // degrees 0,1,2; pieces: Z at a degree; Z -k-> Z spanning (0,1) or (1,2)
    std::vector<int> dims(3, 0);
    struct Arrow { int deg; int src, dst; Zint k; };
    std::vector<Arrow> arrows;
    int n = npieces(rng);
    for (int p = 0; p < n; ++p) {
        int t = kind(rng);
        if (t == 0) {
            std::uniform_int_distribution<int> d(0, 2);
            dims[d(rng)]++;
        } else {
            int lo = t - 1;  // 0 or 1
            Zint k = scal(rng);
            arrows.push_back({lo, dims[lo], dims[lo + 1], k});
            dims[lo]++;
            dims[lo + 1]++;
        }
    }
    GradedComplex c;
    for (int i = 0; i < 3; ++i) c.objects[i] = GradedModule{std::vector<int>(dims[i], 0)};
    for (int i = 0; i < 2; ++i) {
        GradedMap d(c.objects[i], c.objects[i + 1], 0);
        for (auto& a : arrows)
            if (a.deg == i) d.set(a.dst, a.src, a.k);
        c.diffs[i] = d;
    }
    // conjugate by random elementary unimodular ops per degree
    std::uniform_int_distribution<int> reps(0, 6), pickc(-2, 2);
    for (int i = 0; i < 3; ++i) {
        int m = dims[i];
        if (m < 2) continue;
        int r = reps(rng);
        std::uniform_int_distribution<int> idx(0, m - 1);
        for (int t = 0; t < r; ++t) {
            int a = idx(rng), b = idx(rng);
            if (a == b) continue;
            Zint k = pickc(rng);
            // basis change e_a += k e_b: columns of d_i, rows of d_{i-1}
            if (c.diffs.count(i)) {
                auto& d = c.diffs[i].entries;
                for (int rr : std::vector<int>(d.col_support(a).begin(), d.col_support(a).end()))
                    d.add(rr, b, d.at(rr, a) * -k);  // inverse op on source side
            }
            if (c.diffs.count(i - 1)) {
                auto& d = c.diffs[i - 1].entries;
                std::vector<std::pair<int, Zint>> row(d.row(b).begin(), d.row(b).end());
                for (auto& [cc, v] : row) d.add(a, cc, v * k);
            }
        }
    }
    c.check_d_squared();
    return c;
}

TEST_CASE("gaussian elimination preserves homology") {
    // cancel identity in 0 -> Z -> Z -> 0
    auto cid = single_map_complex(from_rows({{1}}), {0}, {0});
    auto e = gaussian_eliminate(cid, 0, 0, 0);
    CHECK(homology(e).entries.empty());

    // entry not +-1 is rejected
    auto c2 = single_map_complex(from_rows({{2}}), {0}, {0});
    CHECK_THROWS(gaussian_eliminate(c2, 0, 0, 0));

    std::mt19937 rng(777);
    for (int trial = 0; trial < 1000; ++trial) {
        auto c = random_complex(rng);
        auto h0 = homology(c);
        auto s = simplify_by_elimination(c);
        s.check_d_squared();
        CHECK(homology(s) == h0);
        // rational rank matches integral free rank bidegree by bidegree
        auto hq = homology(c, Ring::Q);
        int fr = 0;
        for (auto& [ij, en] : h0.entries) fr += en.free_rank;
        CHECK(hq.total_free_rank() == fr);
    }
}
