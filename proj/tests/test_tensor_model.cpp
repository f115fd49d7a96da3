#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "sln/multiplicity.hpp"
#include "sln/tensor_model.hpp"

using namespace sln;

namespace {

SimpleTensorIndex idx(std::vector<int> left, std::vector<int> right) {
    return SimpleTensorIndex{std::move(left), std::move(right)};
}

bool operators_equal(const TensorOperator& a, const TensorOperator& b) {
    for (const auto& i : all_basis_indices(a.n(), a.k()))
        if (!(a.apply(i) == b.apply(i))) return false;
    return true;
}

bool operator_is_zero(const TensorOperator& a) {
    for (const auto& i : all_basis_indices(a.n(), a.k()))
        if (!a.apply(i).is_zero()) return false;
    return true;
}

Permutation random_perm(int degree, std::mt19937_64& rng) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("contraction on the smallest model") {
    const auto c = contraction_operator(2, 1, 1, 1);
    auto image = c.apply(idx({1}, {1}));
    TensorVector expected(2, 1);
    expected.add_term(idx({1}, {1}), 1);
    expected.add_term(idx({2}, {2}), 1);
    CHECK(image == expected);
    CHECK(c.apply(idx({1}, {2})).is_zero());
}

TEST_CASE("contraction squares to n times itself") {
    for (auto [n, k] : {std::pair{2, 1}, {3, 2}, {4, 2}}) {
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                auto c = contraction_operator(n, k, i, j);
                CHECK(operators_equal(compose(c, c), scale(Rat(n), c)));
            }
    }
}

TEST_CASE("projectors are commuting idempotents") {
    for (auto [n, k] : {std::pair{2, 1}, {3, 2}, {4, 2}}) {
        for (int i = 1; i <= k; ++i) {
            auto pi = projector_p(n, k, i);
            CHECK(operators_equal(compose(pi, pi), pi));
            for (int j = 1; j <= k; ++j)
                CHECK(operators_equal(compose(pi, projector_p(n, k, j)),
                                      compose(projector_p(n, k, j), pi)));
        }
    }
}

TEST_CASE("projector image on the smallest model is the summed dual pair") {
    const auto p = projector_p(2, 1, 1);
    CHECK(operator_rank(p) == 1);
    TensorVector expected(2, 1);
    expected.add_term(idx({1}, {1}), make_rat(1, 2));
    expected.add_term(idx({2}, {2}), make_rat(1, 2));
    CHECK(p.apply(idx({1}, {1})) == expected);
}

TEST_CASE("e is idempotent with rank (n^2-1)^k") {
    const auto e21 = e_operator(2, 1);
    CHECK(operators_equal(compose(e21, e21), e21));
    CHECK(operator_rank(e21) == 3);

    const auto e32 = e_operator(3, 2);
    CHECK(operator_rank(e32) == 64);
}

TEST_CASE("desk-scale guard") {
    CHECK_THROWS_AS(all_basis_indices(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(contraction_operator(32, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("place permutations compose by the group law") {
    std::mt19937_64 rng(31337);
    const int n = 3, k = 2;
    for (int trial = 0; trial < 20; ++trial) {
        auto sl = random_perm(k, rng);
        auto sr = random_perm(k, rng);
        auto tl = random_perm(k, rng);
        auto tr = random_perm(k, rng);
        auto lhs = compose(place_permutation_operator(n, k, sl, sr),
                           place_permutation_operator(n, k, tl, tr));
        auto rhs = place_permutation_operator(n, k, sl * tl, sr * tr);
        CHECK(operators_equal(lhs, rhs));
    }
    CHECK(operators_equal(place_permutation_operator(n, k, Permutation(k), Permutation(k)),
                          TensorOperator::identity(n, k)));
}

TEST_CASE("diagrams without horizontal edges act as place permutations") {
    std::mt19937_64 rng(99);
    const int n = 3, k = 2;
    for (int trial = 0; trial < 10; ++trial) {
        auto sl = random_perm(k, rng);
        auto sr = random_perm(k, rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= k; ++i)
            edges.emplace_back(WalledDiagram::top(k, sl(i)), WalledDiagram::bottom(k, i));
        for (int j = 1; j <= k; ++j)
            edges.emplace_back(WalledDiagram::top(k, k + sr(j)),
                               WalledDiagram::bottom(k, k + j));
        CHECK(operators_equal(diagram_to_operator(WalledDiagram(k, edges), n),
                              place_permutation_operator(n, k, sl, sr)));
    }
}

TEST_CASE("identity diagram maps to the identity operator") {
    CHECK(operators_equal(diagram_to_operator(WalledDiagram::identity(2), 3),
                          TensorOperator::identity(3, 2)));
}

TEST_CASE("the pictured single-contraction diagram maps to c_{3,1}") {
    // k = 5: verticals everywhere except the horizontal pair at positions 3
    // and 6 in both rows.
    const int k = 5;
    std::vector<std::pair<int, int>> edges;
    for (int p = 1; p <= 2 * k; ++p) {
        if (p == 3 || p == 6) continue;
        edges.emplace_back(WalledDiagram::top(k, p), WalledDiagram::bottom(k, p));
    }
    edges.emplace_back(WalledDiagram::top(k, 3), WalledDiagram::top(k, 6));
    edges.emplace_back(WalledDiagram::bottom(k, 3), WalledDiagram::bottom(k, 6));
    const WalledDiagram d(k, edges);
    CHECK(operators_equal(diagram_to_operator(d, 2), contraction_operator(2, 5, 3, 1)));
}

TEST_CASE("contraction diagrams map to the matching contraction operators") {
    for (int j = 1; j <= 2; ++j)
        CHECK(operators_equal(diagram_to_operator(contraction_diagram(2, j), 3),
                              contraction_operator(3, 2, j, j)));
}

TEST_CASE("diagram representation is multiplicative up to cycle scalars") {
    std::mt19937_64 rng(555);
    const int k = 2;
    for (int n : {4, 5}) {
        for (int trial = 0; trial < 50; ++trial) {
            auto d1 = diagram_from_permutation(random_perm(2 * k, rng));
            auto d2 = diagram_from_permutation(random_perm(2 * k, rng));
            auto [cycles, traced] = compose_diagrams(d1, d2);
            auto lhs = compose(diagram_to_operator(d1, n), diagram_to_operator(d2, n));
            auto rhs = scale(int_pow(Int(n), static_cast<unsigned>(cycles)),
                             diagram_to_operator(traced, n));
            CHECK(operators_equal(lhs, rhs));
        }
    }
}

TEST_CASE("diagonal lie action reads off the weight") {
    const int n = 3, k = 2;
    const auto index = idx({1, 3}, {2, 3});
    for (int a = 1; a <= n; ++a) {
        auto image = lie_action(n, k, a, a).apply(index);
        int count = 0;
        for (int v : index.left) count += v == a;
        for (int v : index.right) count -= v == a;
        TensorVector expected(n, k);
        if (count != 0) expected.add_term(index, count);
        CHECK(image == expected);
    }
}

TEST_CASE("operators commute with the lie action") {
    std::mt19937_64 rng(4242);
    const int n = 3, k = 2;
    const auto basis = all_basis_indices(n, k);
    std::vector<TensorOperator> ops = {contraction_operator(n, k, 1, 2), projector_p(n, k, 1),
                                       e_operator(n, k),
                                       place_permutation_operator(
                                           n, k, random_perm(k, rng), random_perm(k, rng))};
    for (const auto& op : ops) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                auto action = lie_action(n, k, a, b);
                for (int trial = 0; trial < 5; ++trial) {
                    const auto& i = basis[rng() % basis.size()];
                    CHECK(op.apply(action.apply(i)) == action.apply(op.apply(i)));
                }
            }
        }
    }
}

TEST_CASE("weight_of") {
    TensorVector v(2, 1);
    v.add_term(idx({1}, {1}), 1);
    CHECK(weight_of(v) == std::vector<int>{0, 0});

    TensorVector w(2, 1);
    w.add_term(idx({1}, {2}), 1);
    CHECK(weight_of(w) == std::vector<int>{1, -1});

    TensorVector mixed(2, 1);
    mixed.add_term(idx({1}, {1}), 1);
    mixed.add_term(idx({2}, {1}), 1);
    CHECK(weight_of(mixed) == std::nullopt);
}

TEST_CASE("contraction pattern validation") {
    CHECK_NOTHROW(ContractionPattern(2, {1, 2}, {2, 1}));
    CHECK_THROWS_AS(ContractionPattern(2, {2, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ContractionPattern(2, {1, 2}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ContractionPattern(2, {1}, {1, 2}), std::invalid_argument);
    CHECK(ContractionPattern(2, {1, 2}, {2, 1}).off_diagonal());
    CHECK_FALSE(ContractionPattern(2, {1, 2}, {1, 2}).off_diagonal());
    CHECK(ContractionPattern(3, {1, 3}, {3, 1}).s_complement() == std::vector<int>{2});
}

TEST_CASE("x' construction") {
    // k=1, r=1: single box tableaux, no contractions.
    const StandardTableau box1(Partition({1}), {{1}});
    const auto x1 = build_x_prime(2, 1, box1, box1, ContractionPattern(1, {}, {}));
    CHECK(x1 == TensorVector::basis(2, 1, idx({1}, {2})));

    // k=2, r=0: all slots contracted, t reversed.
    const StandardTableau empty_tab(Partition{}, {});
    const auto x2 = build_x_prime(4, 2, empty_tab, empty_tab,
                                  ContractionPattern(2, {1, 2}, {2, 1}));
    CHECK(x2 == TensorVector::basis(4, 2, idx({1, 2}, {2, 1})));

    CHECK_THROWS_AS(build_x_prime(2, 2, empty_tab, empty_tab,
                                  ContractionPattern(2, {1, 2}, {2, 1})),
                    std::invalid_argument);  // n < 2k
    CHECK_THROWS_AS(build_x_prime(4, 2, box1, box1, ContractionPattern(2, {1, 2}, {2, 1})),
                    std::invalid_argument);  // entries do not match the complement
}

TEST_CASE("e fixes x' whenever the pattern avoids the diagonal") {
    const int n = 4, k = 2;
    const auto e = e_operator(n, k);
    const StandardTableau empty_tab(Partition{}, {});
    for (const auto& t : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
        ContractionPattern pattern(k, {1, 2}, t);
        if (!pattern.off_diagonal()) continue;
        const auto x = build_x_prime(n, k, empty_tab, empty_tab, pattern);
        CHECK(e.apply(x) == x);
    }
    for (int s1 : {1, 2}) {
        for (int t1 : {1, 2}) {
            if (s1 == t1) continue;
            ContractionPattern pattern(k, {s1}, {t1});
            const StandardTableau T(Partition({1}), {{3 - s1}});
            const StandardTableau Tstar(Partition({1}), {{3 - t1}});
            const auto x = build_x_prime(n, k, T, Tstar, pattern);
            CHECK(e.apply(x) == x);
        }
    }
}

TEST_CASE("a diagonal contraction kills y from either side of e") {
    const int n = 4, k = 2;
    const auto e = e_operator(n, k);
    const StandardTableau empty_tab(Partition{}, {});
    // Pattern contains s_i = t_i = 1 (and the off-wall pair 2,2).
    ContractionPattern diagonal(k, {1, 2}, {1, 2});
    const auto y = apply_y(n, k, empty_tab, empty_tab, diagonal);
    CHECK(operator_is_zero(compose(e, y)));
    CHECK(operator_is_zero(compose(y, e)));
}

TEST_CASE("e y x' vanishes exactly on diagonal-touching patterns") {
    const int n = 4, k = 2;
    const auto e = e_operator(n, k);
    const StandardTableau empty_tab(Partition{}, {});
    for (const auto& t : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
        ContractionPattern pattern(k, {1, 2}, t);
        const auto x = build_x_prime(n, k, empty_tab, empty_tab, pattern);
        const auto w = e.apply(apply_y(n, k, empty_tab, empty_tab, pattern).apply(x));
        CHECK(w.is_zero() == !pattern.off_diagonal());
    }
    for (int s1 : {1, 2}) {
        for (int t1 : {1, 2}) {
            ContractionPattern pattern(k, {s1}, {t1});
            const StandardTableau T(Partition({1}), {{3 - s1}});
            const StandardTableau Tstar(Partition({1}), {{3 - t1}});
            const auto x = build_x_prime(n, k, T, Tstar, pattern);
            const auto w = e.apply(apply_y(n, k, T, Tstar, pattern).apply(x));
            CHECK(w.is_zero() == !pattern.off_diagonal());
        }
    }
}

TEST_CASE("maximal vector verification at (4,2)") {
    const int n = 4, k = 2;

    // (1),(1) with s=(2), t=(1).
    const StandardTableau T1(Partition({1}), {{1}});
    const StandardTableau T2(Partition({1}), {{2}});
    auto report = verify_maximal_vector(n, k, T1, T2, ContractionPattern(k, {2}, {1}));
    CHECK(report.passed());
    CHECK(report.weight == std::vector<int>{1, 0, 0, -1});

    // (2),(1,1) with the empty pattern.
    const StandardTableau row2(Partition({2}), {{1, 2}});
    const StandardTableau col2(Partition({1, 1}), {{1}, {2}});
    report = verify_maximal_vector(n, k, row2, col2, ContractionPattern(k, {}, {}));
    CHECK(report.passed());
    CHECK(report.weight == std::vector<int>{2, 0, -1, -1});

    // Excluded case: s_1 = t_1 forces e y x' = 0.
    const StandardTableau empty_tab(Partition{}, {});
    report = verify_maximal_vector(n, k, empty_tab, empty_tab,
                                   ContractionPattern(k, {1, 2}, {1, 2}));
    CHECK_FALSE(report.nonzero);

    const auto doc = verify_maximal_vector(n, k, T1, T2, ContractionPattern(k, {2}, {1}))
                         .to_json();
    CHECK(doc["lambda"] == "1");
    CHECK(doc["s"] == nlohmann::ordered_json::array({2}));
    CHECK(doc["nonzero"] == true);
    CHECK(doc["maximal"] == true);
}

TEST_CASE("maximal vector at the smallest size") {
    // k = 1, empty pattern, single-box tableaux: y x' is already nonzero and
    // maximal.
    const StandardTableau box(Partition({1}), {{1}});
    const ContractionPattern empty_pattern(1, {}, {});
    const auto y = apply_y(2, 1, box, box, empty_pattern);
    CHECK_FALSE(y.apply(build_x_prime(2, 1, box, box, empty_pattern)).is_zero());

    const auto report = verify_maximal_vector(2, 1, box, box, empty_pattern);
    CHECK(report.passed());
    CHECK(report.weight == std::vector<int>{1, -1});

    // The r = 0 pattern at k = 1 is forced onto the diagonal, so the trivial
    // summand does not appear: the sweep sees exactly one passing tuple.
    const auto sweep = maximal_vector_sweep(2, 1);
    REQUIRE(sweep.size() == 2);
    int passing = 0;
    for (const auto& r : sweep) passing += r.passed();
    CHECK(passing == 1);
}

TEST_CASE("maximal vector report stream") {
    const auto jsonl = maximal_vector_reports_jsonl(4, 2);
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < jsonl.size()) {
        const auto end = jsonl.find('\n', start);
        lines.push_back(jsonl.substr(start, end - start));
        start = end + 1;
    }
    // 10 tuples at k = 2: two r=0 patterns, four r=1 patterns, and the four
    // r=2 shape pairs.
    REQUIRE(lines.size() == 10);
    for (const auto& line : lines) {
        const auto doc = nlohmann::json::parse(line);
        for (const char* field : {"lambda", "mu", "s", "t", "T", "Tstar", "nonzero",
                                  "weight", "maximal"})
            CHECK(doc.contains(field));
    }
    // Deterministic output.
    CHECK(jsonl == maximal_vector_reports_jsonl(4, 2));
}
