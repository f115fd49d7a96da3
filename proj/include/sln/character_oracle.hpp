#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "sln/bigint.hpp"
#include "sln/partitions.hpp"

namespace sln {

// Integer n-tuple in the epsilon (diagonal-entry) coordinates.
using Weight = std::vector<int>;

// Character-style multiset: weight -> nonnegative big-integer multiplicity,
// zero-free. Iteration is descending lexicographic so the greedy extraction
// below can read its head.
class WeightMultiset {
public:
    explicit WeightMultiset(int n);

    int n() const { return n_; }
    const std::map<Weight, Int, std::greater<Weight>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int mass() const;
    Int multiplicity(const Weight& w) const;

    void add(const Weight& w, const Int& count);

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    int n_;
    std::map<Weight, Int, std::greater<Weight>> terms_;
};

// (lambda, mu) label of an irreducible: lambda collects the positive
// coordinates of a dominant weight, mu the negated negative ones.
struct HighestWeightPair {
    Partition lambda;
    Partition mu;

    friend bool operator==(const HighestWeightPair&, const HighestWeightPair&) = default;
};

// Table order: r ascending, then each partition in decreasing lexicographic
// order.
struct PairTableOrder {
    bool operator()(const HighestWeightPair& a, const HighestWeightPair& b) const;
};

using Decomposition = std::map<HighestWeightPair, Int, PairTableOrder>;

// (lambda_1..lambda_p, 0,...,0, -mu_q..-mu_1); requires rows(lambda) +
// rows(mu) <= n.
Weight pair_to_weight(const HighestWeightPair& pair, int n);

// Inverse for dominant weights.
HighestWeightPair weight_to_pair(const Weight& w);

bool is_dominant(const Weight& w);

// Weights of the adjoint module: all roots eps_i - eps_j once, the zero
// weight with multiplicity n - 1; total mass n^2 - 1.
WeightMultiset adjoint_weights(int n);

// k-fold additive convolution; the character of the k-th tensor power.
WeightMultiset convolve_power(const WeightMultiset& w, int k);

// Full weight multiset of the irreducible with dominant highest weight hw,
// by the Freudenthal recursion (positive roots eps_i - eps_j for i < j,
// rho = (n-1,...,1,0), Euclidean dot product). Mass equals
// weyl_dimension(hw, n).
WeightMultiset freudenthal_multiplicities(const Weight& hw, int n);

// prod over positive roots of <hw+rho, alpha> / <rho, alpha>.
Int weyl_dimension(const Weight& hw, int n);

// Greedy character subtraction on the dominant restriction of the k-th
// adjoint tensor power: repeatedly extract the lexicographically greatest
// remaining dominant weight and subtract its full irreducible character.
// Sound because subtracting any positive root eps_i - eps_j (i < j) strictly
// lowers lexicographic order, so every non-highest weight of an irreducible
// lies lex-below its highest weight. Intermediate coefficients must stay
// nonnegative; a negative one throws (the input is a genuine character).
Decomposition decompose(int n, int k);

struct ComparisonEntry {
    HighestWeightPair pair;
    Int oracle;
    Int formula;
    bool match = false;
};

struct ComparisonReport {
    int n = 0;
    int k = 0;
    bool hypothesis_met = false;  // n >= 2k
    std::vector<ComparisonEntry> entries;
    int mismatches = 0;
    Int oracle_dimension_sum;    // sum of multiplicity * dim over the oracle
    Int expected_dimension_sum;  // (n^2 - 1)^k
};

// Element-wise comparison of decompose(n, k) against the closed-form table.
// Zero mismatches whenever n >= 2k; below that range the differences are
// reported, not interpreted.
ComparisonReport compare_with_formula(int n, int k);

// [{"lambda", "mu", "oracle", "formula", "match"}, ...]
nlohmann::ordered_json comparison_to_json(const ComparisonReport& report);

}  // namespace sln
