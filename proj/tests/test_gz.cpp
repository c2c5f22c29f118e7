#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "schub/flag.hpp"
#include "schub/gz.hpp"
#include "schub/pipedream.hpp"

using namespace schub;

namespace {

Weight scaled(const Weight& lambda, long long m) {
    Weight out = lambda;
    for (long long& v : out) v *= m;
    return out;
}

// Lattice-point count of the union of the reduced Kogan faces of w inside
// GZ(lambda); unlike demazure_dimension this also accepts non-strict lambda
// (needed for the m = 0 end of Ehrhart sequences).
long long union_count(const Permutation& w, const Weight& lambda) {
    std::set<GZPattern> points;
    for (const KoganFace& f : enumerate_reduced_kogan_faces(w))
        for (const GZPattern& p : face_lattice_points(f, lambda)) points.insert(p);
    return static_cast<long long>(points.size());
}

// Leading coefficient of the degree-d polynomial m -> f(m) from exact finite
// differences; also checks that the (d+1)-st difference vanishes.
Rat ehrhart_leading(const std::vector<Rat>& values, int d) {
    std::vector<Rat> diff = values;
    for (int step = 0; step < d; ++step)
        for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.resize(values.size() - d);
    for (size_t i = 0; i + 1 < diff.size(); ++i) CHECK(diff[i] == diff[i + 1]);
    Rat lead = diff[0];
    for (int i = 2; i <= d; ++i) lead /= Rat(i);
    return lead;
}

}  // namespace

TEST_CASE("Weyl dimension and lattice points") {
    CHECK(weyl_dimension({0, 2}) == BigInt(3));
    CHECK(weyl_dimension({0, 1, 2}) == BigInt(8));
    CHECK(weyl_dimension({0, 0, 0}) == BigInt(1));

    auto pts2 = gz_lattice_points({0, 2});
    REQUIRE(pts2.size() == 3);
    for (long long v = 0; v <= 2; ++v) CHECK(pts2[v].rows[1][0] == v);

    // Direct nested-loop oracle for n = 3, lambda = (0,1,2).
    auto pts3 = gz_lattice_points({0, 1, 2});
    std::set<std::vector<long long>> expected;
    for (long long x = 0; x <= 1; ++x)
        for (long long y = 1; y <= 2; ++y)
            for (long long z = x; z <= y; ++z) expected.insert({x, y, z});
    CHECK(expected.size() == 8);
    std::set<std::vector<long long>> got;
    for (const GZPattern& p : pts3) {
        CHECK(is_valid_pattern(p));
        got.insert({p.rows[1][0], p.rows[1][1], p.rows[2][0]});
    }
    CHECK(got == expected);

    CHECK(gz_lattice_points({0, 0, 0}).size() == 1);
    CHECK_THROWS_AS(gz_lattice_points({2, 1}), std::domain_error);

    // Row-major lexicographic enumeration order.
    for (size_t i = 0; i + 1 < pts3.size(); ++i) CHECK(pts3[i] < pts3[i + 1]);
}

TEST_CASE("projection to weights") {
    GZPattern constant{{{3, 3, 3}, {3, 3}, {3}}};
    CHECK(projection_pi(constant) == Weight{3, 3, 3});

    GZPattern mid{{{0, 2}, {1}}};
    CHECK(projection_pi(mid) == Weight{1, 1});

    // The all-minimal pattern projects to lambda itself.
    GZPattern minimal{{{0, 1, 2}, {0, 1}, {0}}};
    CHECK(projection_pi(minimal) == Weight{0, 1, 2});

    // Coordinates always sum to the total of lambda.
    for (const GZPattern& p : gz_lattice_points({0, 1, 3})) {
        Weight w = projection_pi(p);
        long long total = 0;
        for (long long v : w) total += v;
        CHECK(total == 4);
    }
}

TEST_CASE("Kogan face words") {
    // The worked face: equalities (1,1),(2,1),(3,1),(1,3) read bottom to top,
    // left to right give (s3, s2, s1, s3), multiplying to 4132.
    KoganFace figure(4, {{1, 1}, {2, 1}, {3, 1}, {1, 3}});
    CHECK(kogan_face_word(figure) == std::vector<int>{3, 2, 1, 3});
    CHECK(kogan_face_permutation(figure) == Permutation({4, 1, 3, 2}));
    CHECK(kogan_face_reduced(figure));

    CHECK(kogan_face_word(KoganFace(3, {})).empty());

    // {x12 = lambda2, x11 = x21} has word (s2, s2): not reduced.
    KoganFace bad(3, {{1, 2}, {2, 1}});
    CHECK(kogan_face_word(bad) == std::vector<int>{2, 2});
    CHECK(!kogan_face_reduced(bad));
}

TEST_CASE("enumerating reduced Kogan faces") {
    // w = s_k has exactly k single-equality faces F_{1,k} ... F_{k,1}.
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k) {
            auto faces = enumerate_reduced_kogan_faces(Permutation::simple_transposition(k, n));
            REQUIRE(static_cast<int>(faces.size()) == k);
            std::set<std::pair<int, int>> got;
            for (const KoganFace& f : faces) {
                REQUIRE(f.equalities.size() == 1);
                got.insert(f.equalities[0]);
            }
            std::set<std::pair<int, int>> expected;
            for (int i = 1; i <= k; ++i) expected.insert({i, k + 1 - i});
            CHECK(got == expected);
        }

    auto faces_id = enumerate_reduced_kogan_faces(Permutation::identity(3));
    REQUIRE(faces_id.size() == 1);
    CHECK(faces_id[0].equalities.empty());

    // The figure's face appears among the faces of 4132.
    auto faces4132 = enumerate_reduced_kogan_faces(Permutation({4, 1, 3, 2}));
    KoganFace figure(4, {{1, 1}, {2, 1}, {3, 1}, {1, 3}});
    CHECK(std::find(faces4132.begin(), faces4132.end(), figure) != faces4132.end());

    // Bijection with reduced pipe dreams: equal counts for every w in S_4,
    // and the mirror (i,j) -> (j,i) maps faces to dreams of the same w.
    for (const Permutation& w : all_permutations(4)) {
        auto faces = enumerate_reduced_kogan_faces(w);
        auto dreams = enumerate_reduced(w);
        CHECK(faces.size() == dreams.size());
        std::set<std::vector<std::pair<int, int>>> mirrored;
        for (const KoganFace& f : faces) {
            std::vector<std::pair<int, int>> m;
            for (auto [i, j] : f.equalities) m.emplace_back(j, i);
            std::sort(m.begin(), m.end());
            mirrored.insert(m);
        }
        std::set<std::vector<std::pair<int, int>>> cross_sets;
        for (const PipeDream& p : dreams) cross_sets.insert(p.crosses);
        CHECK(mirrored == cross_sets);
    }
}

TEST_CASE("Demazure characters and dimensions") {
    Weight lambda{0, 1, 2};

    CHECK(demazure_dimension(Permutation::longest(3), lambda) == BigInt(1));
    CHECK(demazure_dimension(Permutation::identity(3), lambda) == BigInt(8));
    CHECK(demazure_dimension(Permutation({2, 1, 3}), lambda) == BigInt(5));
    CHECK(demazure_dimension(Permutation({1, 3, 2}), lambda) == BigInt(5));
    CHECK(demazure_dimension(Permutation({2, 3, 1}), lambda) == BigInt(2));
    CHECK(demazure_dimension(Permutation({3, 1, 2}), lambda) == BigInt(2));

    // dim D_id = number of lattice points; dim D_{w0} = 1; for every strict
    // weight with entries in 0..4 and n <= 4.
    for (int n = 2; n <= 4; ++n) {
        std::vector<Weight> all_strict;
        for (uint32_t mask = 0; mask < 32; ++mask) {
            if (__builtin_popcount(mask) != n) continue;
            Weight lam;
            for (long long v = 0; v <= 4; ++v)
                if (mask & (1u << v)) lam.push_back(v);
            all_strict.push_back(lam);
        }
        for (const Weight& lam : all_strict) {
            CHECK(demazure_dimension(Permutation::identity(n), lam) ==
                  BigInt(static_cast<long long>(gz_lattice_points(lam).size())));
            CHECK(demazure_dimension(Permutation::longest(n), lam) == BigInt(1));
        }
    }

    // Full character is symmetric under permuting weight coordinates.
    FormalCharacter full = demazure_character(Permutation::identity(3), lambda);
    BigInt total(0);
    for (const auto& [w, mult] : full) total += mult;
    CHECK(total == BigInt(8));
    for (const Permutation& sigma : all_permutations(3)) {
        FormalCharacter permuted;
        for (const auto& [w, mult] : full) {
            Weight pw(w.size());
            for (size_t i = 0; i < w.size(); ++i) pw[i] = w[sigma(static_cast<int>(i) + 1) - 1];
            permuted[pw] = mult;
        }
        CHECK(permuted == full);
    }

    CHECK_THROWS_AS(demazure_character(Permutation::identity(2), {1, 1}), std::domain_error);

    // Observed on n = 3: the union point count is antitone along Bruhat order
    // (v <= w gives dim D_v >= dim D_w); checked empirically, not asserted in
    // the library.
    for (const Weight& lam : {Weight{0, 1, 2}, Weight{0, 2, 5}}) {
        for (const Permutation& v : all_permutations(3))
            for (const Permutation& w : all_permutations(3))
                if (bruhat_leq(v, w))
                    CHECK(demazure_dimension(v, lam) >= demazure_dimension(w, lam));
    }
}

TEST_CASE("volume polynomial") {
    CHECK(gz_volume_polynomial(2) == MultiPoly::variable(2, 2) - MultiPoly::variable(1, 2));

    MultiPoly v3 = gz_volume_polynomial(3);
    MultiPoly expected = (MultiPoly::variable(2, 3) - MultiPoly::variable(1, 3)) *
                         (MultiPoly::variable(3, 3) - MultiPoly::variable(2, 3)) *
                         (MultiPoly::variable(3, 3) - MultiPoly::variable(1, 3)) * Rat(BigInt(1), BigInt(2));
    CHECK(v3 == expected);
    CHECK(v3.evaluate({Rat(0), Rat(1), Rat(2)}) == Rat(1));

    // Ehrhart validation of the normalizing constant: third differences of
    // m -> #GZ(m lambda) are constant and equal 3! * vol for m up to 20.
    std::vector<Rat> counts;
    for (long long m = 0; m <= 20; ++m)
        counts.push_back(Rat(static_cast<long long>(gz_lattice_points(scaled({0, 1, 2}, m)).size())));
    CHECK(counts[20] == Rat(21 * 21 * 21));
    CHECK(ehrhart_leading(counts, 3) == Rat(1));

    // Same check for n = 2 and a wider weight.
    std::vector<Rat> counts2;
    for (long long m = 0; m <= 10; ++m)
        counts2.push_back(Rat(static_cast<long long>(gz_lattice_points(scaled({0, 3}, m)).size())));
    CHECK(ehrhart_leading(counts2, 1) == gz_volume_polynomial(2).evaluate({Rat(0), Rat(3)}));
}

TEST_CASE("face lattice points and volumes") {
    Weight lambda{0, 1, 2};

    KoganFace full(3, {});
    CHECK(face_volume(full, lambda) == Rat(1));
    CHECK(face_lattice_points(full, lambda).size() == 8);

    // Vertex face: volume of a point is 1.
    KoganFace vertex(3, {{1, 1}, {1, 2}, {2, 1}});
    CHECK(face_volume(vertex, lambda) == Rat(1));
    CHECK(face_lattice_points(vertex, lambda).size() == 1);

    KoganFace gamma1(3, {{1, 1}});
    CHECK(face_lattice_points(gamma1, lambda).size() == 5);
    CHECK(face_volume(gamma1, lambda) == Rat(BigInt(3), BigInt(2)));

    // The empty face volume matches the volume polynomial on several weights.
    for (const Weight& lam : {Weight{0, 1, 2}, Weight{0, 2, 5}, Weight{1, 3, 4}}) {
        std::vector<Rat> point;
        for (long long v : lam) point.push_back(Rat(v));
        CHECK(face_volume(KoganFace(3, {}), lam) == gz_volume_polynomial(3).evaluate(point));
    }
    for (const Weight& lam : {Weight{0, 1, 2, 4}, Weight{0, 2, 3, 7}}) {
        std::vector<Rat> point;
        for (long long v : lam) point.push_back(Rat(v));
        CHECK(face_volume(KoganFace(4, {}), lam) == gz_volume_polynomial(4).evaluate(point));
    }
}

TEST_CASE("Khovanskii-Pukhlikov pairing") {
    // n = 2: pairing(id, s1) = (-d/dL1)(L2 - L1) = 1.
    CHECK(kp_pairing(Permutation::identity(2), Permutation({2, 1}), 2) == BigInt(1));
    // n = 3: pairing(id, w0) = 1.
    CHECK(kp_pairing(Permutation::identity(3), Permutation::longest(3), 3) == BigInt(1));

    CHECK_THROWS_AS(kp_pairing(Permutation({2, 1}), Permutation({2, 1}), 2), std::domain_error);

    // Duality: pairing(w, v) = delta_{v, w0 w} on complementary strata, n = 2, 3.
    for (int n = 2; n <= 3; ++n) {
        int top = n * (n - 1) / 2;
        Permutation w0 = Permutation::longest(n);
        for (const Permutation& w : all_permutations(n))
            for (const Permutation& v : all_permutations(n)) {
                if (w.length() + v.length() != top) continue;
                BigInt expected(v == compose(w0, w) ? 1 : 0);
                CHECK(kp_pairing(w, v, n) == expected);
            }
    }
}

TEST_CASE("flag Schubert degrees via face volumes") {
    CHECK(flag_schubert_degree(Permutation::longest(3), {0, 1, 2}) == BigInt(1));
    CHECK(flag_schubert_degree(Permutation::identity(3), {0, 1, 2}) == BigInt(6));
    // Rational normal curve of degree d.
    for (long long d = 1; d <= 5; ++d)
        CHECK(flag_schubert_degree(Permutation::identity(2), {0, d}) == BigInt(d));

    // Ehrhart consistency for every w in S_3 and two weights: the degree is
    // (N - l(w))! times the leading coefficient of m -> dim D_w(m lambda).
    for (const Weight& lambda : {Weight{0, 1, 2}, Weight{0, 2, 5}}) {
        for (const Permutation& w : all_permutations(3)) {
            int d = 3 - w.length();
            std::vector<Rat> values;
            for (long long m = 1; m <= d + 3; ++m)
                values.push_back(Rat(union_count(w, scaled(lambda, m))));
            Rat lead = d == 0 ? values[0] : ehrhart_leading(values, d);
            CHECK(Rat(flag_schubert_degree(w, lambda)) == lead * Rat(BigInt::factorial(d)));
        }
    }

    // An n = 4 spot check of the same consistency, exercising multi-cell
    // equality runs in the volume integration.
    for (const Permutation& w : {Permutation({1, 4, 2, 3}), Permutation({2, 1, 4, 3})}) {
        Weight lambda{0, 1, 2, 3};
        int d = 6 - w.length();
        std::vector<Rat> values;
        for (long long m = 1; m <= d + 3; ++m)
            values.push_back(Rat(union_count(w, scaled(lambda, m))));
        CHECK(Rat(flag_schubert_degree(w, lambda)) ==
              ehrhart_leading(values, d) * Rat(BigInt::factorial(d)));
    }
}

// Independent route through the flag ring alone: the degree of X'_w in
// P(V(lambda)) is the coefficient of sigma_{w0} in h^{N - l(w)} * sigma_w,
// where h is the hyperplane class, i.e. the Borel residue of
// -(lambda_1 x_1 + ... + lambda_n x_n).
TEST_CASE("face-volume degrees against the hyperplane-power route") {
    auto degree_via_hyperplane = [](const Permutation& w, const Weight& lambda) {
        int n = w.degree();
        MultiPoly linear(n);
        for (int i = 1; i <= n; ++i) {
            MultiPoly::Exponents e(n, 0);
            e[i - 1] = 1;
            linear.add_term(e, Rat(BigInt(-lambda[i - 1])));
        }
        FlClassSum h(n);
        for (const auto& [u, c] : schubert_expand(borel_quotient_residue(linear, n), n)) h.add(u, c);
        FlClassSum acc(n, w);
        int steps = n * (n - 1) / 2 - w.length();
        for (int t = 0; t < steps; ++t) acc = flag_product(acc, h);
        return acc.coefficient(Permutation::longest(n));
    };

    for (const Weight& lambda : {Weight{0, 1, 2}, Weight{0, 2, 5}})
        for (const Permutation& w : all_permutations(3))
            CHECK(degree_via_hyperplane(w, lambda) == flag_schubert_degree(w, lambda));

    Weight rho{0, 1, 2, 3};
    for (const Permutation& w : {Permutation::identity(4), Permutation({2, 1, 3, 4}),
                                 Permutation({1, 4, 2, 3}), Permutation({3, 2, 1, 4}),
                                 Permutation::longest(4)})
        CHECK(degree_via_hyperplane(w, rho) == flag_schubert_degree(w, rho));
}
