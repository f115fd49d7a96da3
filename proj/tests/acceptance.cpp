// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance here is exact equality; the time limits are part
// of the criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sln/character_oracle.hpp"
#include "sln/cli.hpp"
#include "sln/derangements.hpp"
#include "sln/exact_linalg.hpp"
#include "sln/multiplicity.hpp"
#include "sln/partitions.hpp"
#include "sln/symmetric_group.hpp"
#include "sln/tensor_model.hpp"
#include "sln/verify.hpp"
#include "sln/walled_brauer.hpp"

using namespace sln;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& label, long long limit_ms,
                   const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& ex) {
        ok = false;
        note = std::string(" [exception: ") + ex.what() + "]";
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (elapsed > limit_ms) {
        ok = false;
        note += " [over time limit " + std::to_string(limit_ms) + " ms]";
    }
    if (!ok) ++failures;
    std::printf("%s  criterion %d: %s (%lld ms)%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), static_cast<long long>(elapsed), note.c_str());
    std::fflush(stdout);
}

bool criterion_derangements() {
    const auto result = cmd_derangements(8);
    if (result.status != Status::ok) return false;
    const std::vector<std::string> expected{"0", "1", "2", "9", "44", "265", "1854", "14833"};
    const auto& rows = result.payload["rows"];
    if (rows.size() != 9) return false;
    for (int k = 1; k <= 8; ++k)
        if (rows[static_cast<std::size_t>(k)]["inclusion_exclusion"] !=
            expected[static_cast<std::size_t>(k - 1)])
            return false;
    for (unsigned k = 0; k <= 64; ++k)
        if (derangement_incl_excl(k) != derangement_recurrence(k)) return false;
    return true;
}

bool criterion_k4_table() {
    const auto table = full_table(4);
    // Printed k=4 example, r = 4 down to 0, with the checksum-adjudicated
    // value 3 at row (2,1,1), column (1,1,1,1).
    const std::vector<std::vector<std::vector<int>>> blocks{
        {{9}},
        {{44}},
        {{42, 42}, {42, 42}},
        {{12, 24, 12}, {24, 48, 24}, {12, 24, 12}},
        {{1, 3, 2, 3, 1},
         {3, 9, 6, 9, 3},
         {2, 6, 4, 6, 2},
         {3, 9, 6, 9, 3},
         {1, 3, 2, 3, 1}},
    };
    for (int r = 0; r <= 4; ++r) {
        const auto shapes = enumerate_partitions(r);
        for (std::size_t i = 0; i < shapes.size(); ++i)
            for (std::size_t j = 0; j < shapes.size(); ++j)
                if (table.value(shapes[i], shapes[j]) !=
                    blocks[static_cast<std::size_t>(r)][i][j])
                    return false;
    }
    return checksum_sum_of_squares(4) == 14833 && derangement_recurrence(8) == 14833;
}

bool criterion_checksums() {
    for (int k = 1; k <= 6; ++k)
        if (checksum_sum_of_squares(k) != derangement_recurrence(static_cast<unsigned>(2 * k)))
            return false;
    return true;
}

bool criterion_oracle() {
    for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {4, 2}, {6, 3}}) {
        const auto report = compare_with_formula(n, k);
        if (report.mismatches != 0) return false;
        if (report.oracle_dimension_sum != report.expected_dimension_sum) return false;
    }
    return true;
}

bool criterion_walled_brauer() {
    for (int k = 1; k <= 4; ++k) {
        const auto diagrams = enumerate_diagrams(k);
        if (Int(diagrams.size()) != factorial(static_cast<unsigned>(2 * k))) return false;
        std::size_t free_count = 0;
        for (const auto& d : diagrams)
            if (!has_forbidden_pair(d)) ++free_count;
        if (Int(free_count) != derangement_recurrence(static_cast<unsigned>(2 * k)))
            return false;
        if (k == 4 && (free_count != 14833 || diagrams.size() != 40320)) return false;
    }

    for (int n : {4, 5, 6})
        if (sandwich_basis_rank(2, n) != 9) return false;

    for (int k = 1; k <= 3; ++k) {
        const auto b = b_idempotent(k, 2 * k);
        if (!(multiply(b, b) == b)) return false;
    }

    // The worked 5-wall product figure: d1 d2 = n^1 d3.
    using W = WalledDiagram;
    auto from_labels = [](int k, std::vector<std::pair<std::string, std::string>> labeled) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& [a, b] : labeled) {
            auto vertex = [k](const std::string& s) {
                const int pos = std::stoi(s.substr(1));
                return s[0] == 'T' ? W::top(k, pos) : W::bottom(k, pos);
            };
            edges.emplace_back(vertex(a), vertex(b));
        }
        return WalledDiagram(k, edges);
    };
    const auto d1 = from_labels(5, {{"T1", "B3"},
                                    {"T2", "B1"},
                                    {"T3", "T6"},
                                    {"T4", "T8"},
                                    {"T5", "B4"},
                                    {"B2", "B6"},
                                    {"B5", "B7"},
                                    {"T7", "B10"},
                                    {"T9", "B9"},
                                    {"T10", "B8"}});
    const auto d2 = from_labels(5, {{"T1", "T7"},
                                    {"T2", "T6"},
                                    {"T3", "B1"},
                                    {"T4", "B5"},
                                    {"T5", "B3"},
                                    {"B2", "B9"},
                                    {"B4", "B6"},
                                    {"T8", "B7"},
                                    {"T9", "B8"},
                                    {"T10", "B10"}});
    const auto d3 = from_labels(5, {{"T1", "B1"},
                                    {"T2", "B3"},
                                    {"T3", "T6"},
                                    {"T4", "T8"},
                                    {"T5", "B5"},
                                    {"B2", "B9"},
                                    {"B4", "B6"},
                                    {"T7", "B10"},
                                    {"T9", "B8"},
                                    {"T10", "B7"}});
    auto [cycles, traced] = compose_diagrams(d1, d2);
    return cycles == 1 && traced == d3;
}

bool criterion_tensor_identities() {
    for (auto [n, k] : {std::pair{2, 1}, {3, 2}, {4, 2}}) {
        const auto basis = all_basis_indices(n, k);
        auto equal_on_basis = [&](const TensorOperator& a, const TensorOperator& b) {
            for (const auto& i : basis)
                if (!(a.apply(i) == b.apply(i))) return false;
            return true;
        };

        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= k; ++j) {
                const auto c = contraction_operator(n, k, i, j);
                if (!equal_on_basis(compose(c, c), scale(Rat(n), c))) return false;
            }
        }
        for (int i = 1; i <= k; ++i) {
            const auto pi = projector_p(n, k, i);
            if (!equal_on_basis(compose(pi, pi), pi)) return false;
            for (int j = 1; j <= k; ++j) {
                const auto pj = projector_p(n, k, j);
                if (!equal_on_basis(compose(pi, pj), compose(pj, pi))) return false;
            }
        }

        const auto e = e_operator(n, k);
        if (!equal_on_basis(compose(e, e), e)) return false;

        const int e_rank = operator_rank(e);
        if (Int(e_rank) != int_pow(Int(n) * n - 1, static_cast<unsigned>(k))) return false;

        // Image of e inside every kernel, and the joint kernel is no bigger.
        for (int j = 1; j <= k; ++j) {
            const auto pj_e = compose(projector_p(n, k, j), e);
            for (const auto& i : basis)
                if (!pj_e.apply(i).is_zero()) return false;
        }
        std::map<SimpleTensorIndex, std::size_t> column;
        for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
        std::vector<std::vector<Rat>> stacked;
        for (int j = 1; j <= k; ++j) {
            const auto pj = projector_p(n, k, j);
            for (const auto& i : basis) {
                std::vector<Rat> row(basis.size(), Rat(0));
                const TensorVector image = pj.apply(i);
                for (const auto& [t, c] : image.terms()) row[column.at(t)] = c;
                stacked.push_back(std::move(row));
            }
        }
        const int joint_kernel =
            static_cast<int>(basis.size()) - rank_exact(std::move(stacked));
        if (joint_kernel != e_rank) return false;
    }
    return true;
}

bool criterion_maximal_vectors() {
    const int n = 4, k = 2;
    std::map<HighestWeightPair, Int, PairTableOrder> tallies;

    for (int r = 0; r <= k; ++r) {
        // Ordered subsets: s ascending, t any arrangement of a subset.
        std::vector<std::vector<int>> subsets;
        std::vector<bool> mask(static_cast<std::size_t>(k), false);
        std::fill(mask.begin(), mask.begin() + (k - r), true);
        do {
            std::vector<int> s;
            for (int i = 0; i < k; ++i)
                if (mask[static_cast<std::size_t>(i)]) s.push_back(i + 1);
            subsets.push_back(std::move(s));
        } while (std::prev_permutation(mask.begin(), mask.end()));

        for (const auto& s : subsets) {
            for (const auto& t_base : subsets) {
                std::vector<int> t = t_base;
                std::sort(t.begin(), t.end());
                do {
                    const ContractionPattern pattern(k, s, t);
                    for (const auto& lambda : enumerate_partitions(r)) {
                        for (const auto& mu : enumerate_partitions(r)) {
                            for (const auto& T : enumerate_standard_tableaux(
                                     lambda, pattern.s_complement())) {
                                for (const auto& Tstar : enumerate_standard_tableaux(
                                         mu, pattern.t_complement())) {
                                    const auto report =
                                        verify_maximal_vector(n, k, T, Tstar, pattern);
                                    if (pattern.off_diagonal()) {
                                        if (!report.passed()) return false;
                                        tallies[{lambda, mu}] += 1;
                                    } else if (report.nonzero) {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                } while (std::next_permutation(t.begin(), t.end()));
            }
        }
    }

    for (const auto& entry : full_table(k).entries) {
        auto it = tallies.find({entry.lambda, entry.mu});
        const Int found = it == tallies.end() ? Int(0) : it->second;
        if (found != entry.value) return false;
    }
    return true;
}

bool criterion_young() {
    for (int r = 1; r <= 4; ++r) {
        std::vector<int> entries(static_cast<std::size_t>(r));
        std::iota(entries.begin(), entries.end(), 1);
        for (const auto& shape : enumerate_partitions(r)) {
            const Rat expected =
                make_rat(factorial(static_cast<unsigned>(r)), num_standard_tableaux(shape));
            for (const auto& T : enumerate_standard_tableaux(shape, entries))
                if (essential_idempotent_constant(T, r) != expected) return false;
        }
    }

    // The worked example: rows {1,5},{4} gives (id + (1 5))(id - (1 4)).
    const StandardTableau example(Partition({2, 1}), {{1, 5}, {4}});
    const auto y = young_symmetrizer(example, 5);
    const auto expected =
        (GroupAlgebraElement::of(Permutation(5)) +
         GroupAlgebraElement::of(Permutation::transposition(5, 1, 5))) *
        (GroupAlgebraElement::of(Permutation(5)) -
         GroupAlgebraElement::of(Permutation::transposition(5, 1, 4)));
    return y == expected;
}

}  // namespace

int main() {
    run_criterion(1, "derangement table via both methods, k <= 64", 1000,
                  criterion_derangements);
    run_criterion(2, "k=4 multiplicity table matches the worked example, checksum 14833", 1000,
                  criterion_k4_table);
    run_criterion(3, "sum-of-squares checksum equals D_2k for k = 1..6", 10000,
                  criterion_checksums);
    run_criterion(4, "oracle matches the closed form at (2,1), (3,1), (4,2), (6,3)", 120000,
                  criterion_oracle);
    run_criterion(5, "walled diagram counts, sandwich rank, b^2 = b, worked product figure",
                  60000, criterion_walled_brauer);
    run_criterion(6, "operator identities, rank of e, kernel identity", 30000,
                  criterion_tensor_identities);
    run_criterion(7, "maximal vectors at (4,2) tally to the multiplicity table", 30000,
                  criterion_maximal_vectors);
    run_criterion(8, "Young symmetrizer constants and worked example", 5000, criterion_young);

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
