#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/polytope.hpp"

#include <random>
#include <set>

using namespace latkit;

namespace {

BasicTerm term(Rat c, std::vector<long> u, std::vector<std::vector<long>> ds) {
    BasicTerm t;
    t.coeff = c;
    for (long x : u) t.numer.push_back(Int(x));
    for (auto& d : ds) {
        VecZ cv;
        for (long x : d) cv.push_back(Int(x));
        t.denom.push_back(cv);
    }
    return t;
}

// naive encoding of a finite exponent set as a sum of monomials
ShortRatFun encode(const std::set<std::vector<long>>& S, std::size_t n) {
    ShortRatFun f(n);
    for (const auto& p : S) {
        VecZ u;
        for (long x : p) u.push_back(Int(x));
        f.push({Rat(1), u, {}});
    }
    return f;
}

std::set<std::vector<long>> decode(const std::map<VecZ, Rat>& m) {
    std::set<std::vector<long>> S;
    for (const auto& [e, c] : m) {
        if (c == 0) continue;
        REQUIRE(c == 1);
        std::vector<long> p;
        for (const auto& x : e) p.push_back(x.get_si());
        S.insert(p);
    }
    return S;
}

ShortRatFun interval_set(long lo, long hi) {
    return brion_genfun(Polyhedron::box(vz({lo}), vz({hi})));
}

std::set<std::vector<long>> random_set(std::mt19937& rng, std::size_t n,
                                       long bound, int count) {
    std::uniform_int_distribution<long> d(0, bound);
    std::set<std::vector<long>> S;
    for (int i = 0; i < count; ++i) {
        std::vector<long> p(n);
        for (auto& x : p) x = d(rng);
        S.insert(p);
    }
    return S;
}

}  // namespace

TEST_CASE("normalize_signs reproduces the one-variable flip") {
    // z^{-1}/(1-z) with direction (-1) becomes -z^{-2}/(1-z^{-1})
    BasicTerm t = term(Rat(1), {-1}, {{1}});
    BasicTerm r = normalize_signs(t, vz({-1}));
    CHECK(r.coeff == -1);
    CHECK(r.numer == vz({-2}));
    REQUIRE(r.denom.size() == 1);
    CHECK(r.denom[0] == vz({-1}));
}

TEST_CASE("normalize_signs leaves aligned terms unchanged") {
    BasicTerm t = term(Rat(1), {0}, {{1}});
    BasicTerm r = normalize_signs(t, vz({1}));  // 1*1 > 0 already
    CHECK(r.coeff == 1);
    CHECK(r.numer == vz({0}));
    CHECK(r.denom[0] == vz({1}));
}

TEST_CASE("normalize_signs double flip in two variables") {
    BasicTerm t = term(Rat(1), {0, 0}, {{1, 0}, {0, 1}});
    BasicTerm r = normalize_signs(t, vz({-1, -1}));
    CHECK(r.coeff == 1);  // two flips cancel the sign
    CHECK(r.numer == vz({-1, -1}));
    std::set<std::vector<long>> ds;
    for (auto& c : r.denom) ds.insert({c[0].get_si(), c[1].get_si()});
    CHECK(ds == std::set<std::vector<long>>{{-1, 0}, {0, -1}});
}

TEST_CASE("normalize_signs preserves the function value") {
    ShortRatFun f(2);
    f.push(term(Rat(1), {1, 0}, {{1, 1}, {0, 1}}));
    f.push(term(Rat(-2), {0, 2}, {{2, -1}}));
    ShortRatFun g = normalize_signs(f, vz({3, -2}));
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(2, 30);
    int checked = 0;
    while (checked < 5) {
        VecQ z{Rat(d(rng), d(rng)), Rat(d(rng), d(rng))};
        z[0].canonicalize();
        z[1].canonicalize();
        try {
            Rat a = evaluate(f, z), b = evaluate(g, z);
            CHECK(a == b);
            ++checked;
        } catch (const genfun_error&) {
        }
    }
}

TEST_CASE("normalize_signs rejects orthogonal directions") {
    BasicTerm t = term(Rat(1), {0, 0}, {{1, 1}});
    CHECK_THROWS_AS(normalize_signs(t, vz({1, -1})), genfun_error);
}

TEST_CASE("add behaves like a sum") {
    ShortRatFun f = interval_set(0, 3);
    ShortRatFun z = add(f, ShortRatFun::zero(1));
    CHECK(specialize_all_ones(z) == 4);
    ShortRatFun mf(1);
    for (const auto& t : f.terms()) {
        BasicTerm s = t;
        s.coeff = -s.coeff;
        mf.push(s);
    }
    CHECK(specialize_all_ones(add(f, mf)) == 0);
    // disjoint union expands to the union multiset
    auto S1 = std::set<std::vector<long>>{{0}, {2}};
    auto S2 = std::set<std::vector<long>>{{5}, {7}};
    auto m = expand(add(encode(S1, 1), encode(S2, 1)), vz({9}));
    CHECK(decode(m) == std::set<std::vector<long>>{{0}, {2}, {5}, {7}});
}

TEST_CASE("hadamard worked interval example") {
    ShortRatFun h = hadamard(interval_set(-1, 1), interval_set(0, 2));
    auto m = expand(h, vz({4}));
    CHECK(decode(m) == std::set<std::vector<long>>{{0}, {1}});
    CHECK(specialize_all_ones(h) == 2);
}

TEST_CASE("hadamard with a singleton picks membership") {
    ShortRatFun f = interval_set(0, 5);
    ShortRatFun in = ShortRatFun::monomial(vz({3}));
    ShortRatFun out = ShortRatFun::monomial(vz({9}));
    CHECK(specialize_all_ones(hadamard(f, in)) == 1);
    CHECK(decode(expand(hadamard(f, in), vz({9}))) ==
          std::set<std::vector<long>>{{3}});
    CHECK(specialize_all_ones(hadamard(f, out)) == 0);
}

TEST_CASE("hadamard equals set intersection on random finite sets") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 12; ++iter) {
        auto S1 = random_set(rng, 2, 6, 10);
        auto S2 = random_set(rng, 2, 6, 10);
        std::set<std::vector<long>> want;
        for (const auto& p : S1)
            if (S2.count(p)) want.insert(p);
        auto got = decode(
            expand(hadamard(encode(S1, 2), encode(S2, 2)), vz({6, 6})));
        CHECK(got == want);
    }
}

TEST_CASE("hadamard of box encodings intersects the boxes") {
    ShortRatFun f = brion_genfun(Polyhedron::box(vz({0, -2}), vz({4, 3})));
    ShortRatFun g = brion_genfun(Polyhedron::box(vz({2, 0}), vz({7, 9})));
    ShortRatFun h = hadamard(f, g);
    CHECK(specialize_all_ones(h) == 3 * 4);  // [2,4] x [0,3]
}

TEST_CASE("monomial_substitution") {
    ShortRatFun f(2);
    f.push(term(Rat(1), {1, 1}, {}));
    f.push(term(Rat(1), {2, 0}, {}));
    ShortRatFun g = monomial_substitution(f, {vz({2}), vz({3})});
    auto m = expand(g, vz({9}));
    CHECK(decode(m) == std::set<std::vector<long>>{{4}, {5}});

    ShortRatFun h(1);
    h.push(term(Rat(1), {0}, {{1}}));
    ShortRatFun h2 = monomial_substitution(h, {vz({2})});
    REQUIRE(h2.terms().size() == 1);
    CHECK(h2.terms()[0].denom[0] == vz({2}));

    CHECK_THROWS_AS(monomial_substitution(h, {vz({0})}), genfun_error);
}

TEST_CASE("grading substitution gives the degree histogram") {
    std::mt19937 rng(31);
    auto S = random_set(rng, 2, 5, 8);
    long w0 = 2, w1 = 3;
    ShortRatFun g =
        monomial_substitution(encode(S, 2), {vz({w0}), vz({w1})});
    auto m = expand(g, vz({40}));
    std::map<long, long> hist;
    for (const auto& p : S) ++hist[w0 * p[0] + w1 * p[1]];
    for (const auto& [e, c] : m) {
        if (c == 0) continue;
        CHECK(c == hist[e[0].get_si()]);
    }
}

TEST_CASE("specialize_all_ones") {
    ShortRatFun f(1);
    f.push(term(Rat(1), {0}, {}));
    f.push(term(Rat(1), {1}, {}));
    CHECK(specialize_all_ones(f) == 2);
    CHECK(specialize_all_ones(ShortRatFun::zero(3)) == 0);
    CHECK(specialize_all_ones(interval_set(0, 2)) == 3);
}

TEST_CASE("specialize_all_ones rejects infinite sets") {
    ShortRatFun f(1);
    f.push(term(Rat(1), {0}, {{1}}));  // 1/(1-z): all of Z>=0
    CHECK_THROWS_AS(specialize_all_ones(f), genfun_error);
}

TEST_CASE("interval_polynomial") {
    ShortRatFun one = interval_polynomial(0, 0);
    CHECK(specialize_all_ones(one) == 1);
    CHECK(specialize_all_ones(interval_polynomial(2, 5)) == 4);
    auto m = expand(hadamard(interval_polynomial(0, 3),
                             interval_polynomial(2, 7)),
                    vz({9}));
    CHECK(decode(m) == std::set<std::vector<long>>{{2}, {3}});
    CHECK_THROWS_AS(interval_polynomial(3, 1), genfun_error);
}

TEST_CASE("leading_monomial fixed cases") {
    ShortRatFun f(1);
    f.push(term(Rat(1), {0}, {}));
    f.push(term(Rat(1), {1}, {}));
    f.push(term(Rat(1), {2}, {}));
    CHECK(leading_monomial(f, TermOrder::lex(1)) == vz({2}));

    ShortRatFun g(2);
    g.push(term(Rat(1), {1, 0}, {}));
    g.push(term(Rat(1), {0, 1}, {}));
    CHECK(leading_monomial(g, TermOrder::lex(2)) == vz({1, 0}));
}

TEST_CASE("leading_monomial matches brute force under random orders") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<long> wd(-4, 4);
    int done = 0;
    while (done < 10) {
        MatZ W(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) W.at(i, j) = Int(wd(rng));
        if (det(W) == 0) continue;
        TermOrder ord(W);
        auto S = random_set(rng, 3, 8, 12);
        // brute-force argmax of W.beta in lex order
        std::vector<long> best;
        VecZ bestv;
        for (const auto& p : S) {
            VecZ v;
            for (long x : p) v.push_back(Int(x));
            if (best.empty() || ord.less(bestv, v)) {
                best = p;
                bestv = v;
            }
        }
        VecZ got = leading_monomial(encode(S, 3), ord);
        CHECK(got == bestv);
        ++done;
    }
}

TEST_CASE("leading_monomial rejects the empty set") {
    CHECK_THROWS_AS(leading_monomial(ShortRatFun::zero(2), TermOrder::lex(2)),
                    genfun_error);
}

TEST_CASE("recover_exponent") {
    // x1^3 x2^5 written as two canceling fraction pairs
    ShortRatFun f(2);
    f.push(term(Rat(1), {3, 5}, {{1, 0}}));
    f.push(term(Rat(-1), {4, 5}, {{1, 0}}));
    f.push(term(Rat(1), {3, 5}, {{0, 2}}));
    f.push(term(Rat(-1), {3, 7}, {{0, 2}}));
    // the two encodings sum to 2 x^(3,5); halve via coefficients
    ShortRatFun h(2);
    for (const auto& t : f.terms()) {
        BasicTerm s = t;
        s.coeff /= 2;
        h.push(s);
    }
    CHECK(recover_exponent(h) == vz({3, 5}));

    ShortRatFun one(2);
    one.push(term(Rat(1), {0, 0}, {}));
    CHECK(recover_exponent(one) == vz({0, 0}));

    // the intersection of two singleton encodings
    ShortRatFun s1 = ShortRatFun::monomial(vz({2, 4}));
    ShortRatFun s2 = ShortRatFun::monomial(vz({2, 4}));
    CHECK(recover_exponent(hadamard(s1, s2)) == vz({2, 4}));

    CHECK_THROWS_AS(recover_exponent(interval_set(0, 3)), genfun_error);
}

TEST_CASE("expand fixed cases") {
    ShortRatFun f(1);
    f.push(term(Rat(1), {2}, {{1}}));
    f.push(term(Rat(-1), {6}, {{1}}));
    auto m = expand(f, vz({10}));
    CHECK(decode(m) == std::set<std::vector<long>>{{2}, {3}, {4}, {5}});

    ShortRatFun sq = brion_genfun(Polyhedron::box(vz({0, 0}), vz({1, 1})));
    CHECK(decode(expand(sq, vz({3, 3}))).size() == 4);
}

TEST_CASE("round trip on random finite sets") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t n = 1 + rng() % 3;
        auto S = random_set(rng, n, 8, 10);
        auto got = decode(expand(encode(S, n), VecZ(n, Int(8))));
        CHECK(got == S);
    }
}

TEST_CASE("term order validation") {
    CHECK_THROWS_AS(TermOrder(MatZ(2, 2)), genfun_error);
    TermOrder lex = TermOrder::lex(2);
    CHECK(lex.less(vz({0, 5}), vz({1, 0})));
    CHECK_FALSE(lex.less(vz({1, 0}), vz({0, 5})));
}
