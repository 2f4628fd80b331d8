#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/cone.hpp"

#include <random>
#include <set>

using namespace latkit;

namespace {

Cone mkcone(std::vector<std::vector<long>> rows) {
    std::vector<VecZ> r;
    for (auto& row : rows) {
        VecZ v;
        for (long x : row) v.push_back(Int(x));
        r.push_back(v);
    }
    return Cone::from_rows(r);
}

std::set<std::vector<long>> ray_set(const MatZ& R) {
    std::set<std::vector<long>> s;
    for (std::size_t i = 0; i < R.rows(); ++i) {
        std::vector<long> v;
        for (std::size_t j = 0; j < R.cols(); ++j)
            v.push_back(R.at(i, j).get_si());
        s.insert(v);
    }
    return s;
}

// barycentric membership in a simplicial full-dimensional cone;
// returns 0 on a facet (coordinate exactly zero), +1 inside, -1 outside
int simplicial_side(const MatZ& gens, const VecZ& x) {
    VecQ a = solve_rational(gens.transpose(), to_q(x));
    bool boundary = false, outside = false;
    for (const auto& c : a) {
        if (c == 0) boundary = true;
        if (c < 0) outside = true;
    }
    if (outside) return -1;
    return boundary ? 0 : 1;
}

}  // namespace

TEST_CASE("polarize fixed cases") {
    Cone orthant = mkcone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(ray_set(polarize(orthant).rays) ==
          std::set<std::vector<long>>{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    Cone k = mkcone({{1, 0}, {1, 2}});
    CHECK(ray_set(polarize(k).rays) ==
          std::set<std::vector<long>>{{0, -1}, {-2, 1}});
}

TEST_CASE("polarize is an involution on random pointed cones") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-5, 5);
    int done = 0;
    while (done < 15) {
        std::vector<VecZ> rows;
        for (int i = 0; i < 4; ++i) {
            VecZ v{Int(d(rng)), Int(d(rng)), Int(1 + (rng() % 5))};
            rows.push_back(primitive(v));
        }
        MatZ R = MatZ::from_rows(rows);
        if (rank(R) != 3 || !is_pointed(R)) continue;
        Cone k{R};
        // the double polar's rays are exactly the extreme rays of k,
        // which the facet description recovers independently
        auto give = ray_set(polarize(polarize(k)).rays);
        auto want = ray_set(MatZ::from_rows(dd_rays(polarize(k).rays)));
        CHECK(give == want);
        ++done;
    }
}

TEST_CASE("triangulate") {
    Cone simp = mkcone({{1, 0}, {1, 2}});
    auto t1 = triangulate(simp);
    REQUIRE(t1.size() == 1);
    CHECK(ray_set(t1[0].rays) == ray_set(simp.rays));

    Cone sq = mkcone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(triangulate(sq).size() == 2);

    // cone over a hexagon: v - 2 pieces
    Cone hex = mkcone({{2, 0, 1}, {1, 2, 1}, {-1, 2, 1}, {-2, 0, 1},
                       {-1, -2, 1}, {1, -2, 1}});
    CHECK(triangulate(hex).size() == 4);
}

TEST_CASE("barvinok_decompose unimodular passthrough") {
    auto d = barvinok_decompose(mkcone({{1, 0}, {0, 1}}));
    REQUIRE(d.size() == 1);
    CHECK(d[0].sign == 1);
    CHECK(abs(det(d[0].gens)) == 1);
}

TEST_CASE("barvinok_decompose signed indicator identity, index 2") {
    Cone k = mkcone({{1, 0}, {1, 2}});
    auto dec = barvinok_decompose(k);
    CHECK(dec.size() <= 3);
    for (const auto& c : dec) CHECK(abs(det(c.gens)) == 1);
    for (long x = -5; x <= 5; ++x) {
        for (long y = -5; y <= 5; ++y) {
            VecZ p = vz({x, y});
            int want = simplicial_side(k.rays, p);
            bool off_faces = want != 0;
            long got = 0;
            for (const auto& c : dec) {
                int s = simplicial_side(c.gens, p);
                if (s == 0) off_faces = false;
                if (s >= 0) got += c.sign;
            }
            if (!off_faces) continue;
            CHECK(got == (want > 0 ? 1 : 0));
        }
    }
}

TEST_CASE("barvinok_decompose large index stays small") {
    long N = 1024;
    Cone k = mkcone({{1, 0}, {1, N}});
    auto dec = barvinok_decompose(k);
    CHECK(dec.size() <= 25);  // log log shrinkage, not N pieces
    for (const auto& c : dec) CHECK(abs(det(c.gens)) == 1);
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> d(-2 * N, 2 * N);
    int tested = 0;
    while (tested < 200) {
        VecZ p = vz({d(rng), d(rng)});
        int want = simplicial_side(k.rays, p);
        if (want == 0) continue;
        bool clean = true;
        long got = 0;
        for (const auto& c : dec) {
            int s = simplicial_side(c.gens, p);
            if (s == 0) clean = false;
            if (s >= 0) got += c.sign;
        }
        if (!clean) continue;
        CHECK(got == (want > 0 ? 1 : 0));
        ++tested;
    }
}

TEST_CASE("signed indicator identity on random cones") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-9, 9);
    int done = 0;
    while (done < 20) {
        std::size_t n = 2 + rng() % 2;
        MatZ R(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) R.at(i, j) = Int(d(rng));
        if (det(R) == 0) continue;
        std::vector<VecZ> prim;
        for (std::size_t i = 0; i < n; ++i) prim.push_back(primitive(R.row(i)));
        Cone k{MatZ::from_rows(prim)};
        auto dec = barvinok_decompose(k);
        for (const auto& c : dec) CHECK(abs(det(c.gens)) == 1);
        std::uniform_int_distribution<long> pd(-30, 30);
        int pts = 0, guard = 0;
        while (pts < 200 && ++guard < 5000) {
            VecZ p(n);
            for (auto& x : p) x = Int(pd(rng));
            int want = simplicial_side(k.rays, p);
            if (want == 0) continue;
            bool clean = true;
            long got = 0;
            for (const auto& c : dec) {
                int s = simplicial_side(c.gens, p);
                if (s == 0) clean = false;
                if (s >= 0) got += c.sign;
            }
            if (!clean) continue;
            CHECK(got == (want > 0 ? 1 : 0));
            ++pts;
        }
        ++done;
    }
}

TEST_CASE("unimodular_genfun") {
    SignedUnimodularCone c1{1, MatZ::identity(3), VecQ(3, Rat(0))};
    BasicTerm t1 = unimodular_genfun(c1);
    CHECK(t1.numer == vz({0, 0, 0}));
    CHECK(t1.denom.size() == 3);

    SignedUnimodularCone c2{1, MatZ::identity(1), {Rat(1, 2)}};
    CHECK(unimodular_genfun(c2).numer == vz({1}));

    SignedUnimodularCone c3{1, MatZ::identity(2), {Rat(2, 3), Rat(1, 3)}};
    CHECK(unimodular_genfun(c3).numer == vz({1, 1}));
}

TEST_CASE("dual_decompose counts match brute force") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> d(-9, 9);
    int done = 0;
    while (done < 12) {
        std::size_t n = 2 + rng() % 2;
        std::size_t m = n + rng() % 2;  // sometimes non-simplicial
        std::vector<VecZ> rows;
        for (std::size_t i = 0; i < m; ++i) {
            VecZ v(n);
            for (auto& x : v) x = Int(d(rng));
            if (is_zero(v)) v[0] = 1;
            rows.push_back(primitive(v));
        }
        MatZ R = MatZ::from_rows(rows);
        if (rank(R) != n || !is_pointed(R)) continue;
        Cone k{R};
        MatZ Y = polarize(k).rays;
        auto dec = dual_decompose(k);
        ShortRatFun f(n);
        for (const auto& c : dec) {
            CHECK(abs(det(c.gens)) == 1);
            f.push(unimodular_genfun(c));
        }
        // expansion direction: strictly negative on the cone
        VecZ lam(n, Int(0));
        for (std::size_t i = 0; i < Y.rows(); ++i) lam = add(lam, Y.row(i));
        long B = 6;
        VecZ lo(n, Int(-B)), hi(n, Int(B));
        auto got = expand_box(f, lo, hi, lam);
        // brute force membership via the facet description
        std::vector<long> idx(n, -B);
        while (true) {
            VecZ p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = Int(idx[i]);
            bool in = true;
            for (std::size_t i = 0; i < Y.rows() && in; ++i)
                if (dot(Y.row(i), p) > 0) in = false;
            auto it = got.find(p);
            Rat have = (it == got.end()) ? Rat(0) : it->second;
            CHECK(have == (in ? 1 : 0));
            std::size_t i = 0;
            while (i < n && idx[i] == B) idx[i++] = -B;
            if (i == n) break;
            ++idx[i];
        }
        ++done;
    }
}

TEST_CASE("dual_decompose of the orthant is itself") {
    auto dec = dual_decompose(mkcone({{1, 0}, {0, 1}}));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].sign == 1);
    CHECK(abs(det(dec[0].gens)) == 1);
}

TEST_CASE("cone over the unit square via dual decomposition") {
    Cone k = mkcone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    ShortRatFun f(3);
    for (const auto& c : dual_decompose(k)) f.push(unimodular_genfun(c));
    VecZ lo(3, Int(0)), hi(3, Int(4));
    Rat total = 0;
    for (const auto& [e, c] : expand_box(f, lo, hi, vz({0, 0, -1})))
        total += c;
    CHECK(total == 55);  // sum of (z+1)^2 for z = 0..4
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(polarize(mkcone({{1, 0}})), cone_error);           // low-dim
    CHECK_THROWS_AS(polarize(mkcone({{1, 0}, {-1, 0}, {0, 1}})),       // line
                    cone_error);
    CHECK_THROWS_AS(barvinok_decompose(mkcone({{1, 0, 0}, {0, 1, 0},
                                               {0, 0, 1}, {1, 1, 1}})),
                    cone_error);  // non-simplicial
}
