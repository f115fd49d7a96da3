#include "sln/character_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "sln/multiplicity.hpp"

namespace sln {

namespace {

constexpr std::size_t kMaxStoredWeights = 10'000'000;

void check_weight(const Weight& w, int n) {
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight length must equal n");
}

Int dot(const Weight& a, const Weight& b) {
    Int out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) out += Int(a[i]) * b[i];
    return out;
}

Weight rho(int n) {
    Weight out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n - 1 - i;
    return out;
}

Weight plus(const Weight& a, const Weight& b) {
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

WeightMultiset::WeightMultiset(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("WeightMultiset: n must be >= 1");
}

Int WeightMultiset::mass() const {
    Int total = 0;
    for (const auto& [w, c] : terms_) total += c;
    return total;
}

Int WeightMultiset::multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

void WeightMultiset::add(const Weight& w, const Int& count) {
    check_weight(w, n_);
    auto [it, inserted] = terms_.emplace(w, count);
    if (!inserted) it->second += count;
    if (it->second == 0) terms_.erase(it);
    if (terms_.size() > kMaxStoredWeights)
        throw std::runtime_error(
            "WeightMultiset: more than 10^7 stored weights; use smaller (n, k)");
}

bool PairTableOrder::operator()(const HighestWeightPair& a, const HighestWeightPair& b) const {
    if (a.lambda.sum() != b.lambda.sum()) return a.lambda.sum() < b.lambda.sum();
    if (a.lambda != b.lambda) return a.lambda > b.lambda;  // decreasing lexicographic
    return a.mu > b.mu;
}

Weight pair_to_weight(const HighestWeightPair& pair, int n) {
    if (pair.lambda.rows() + pair.mu.rows() > n)
        throw std::invalid_argument(
            "pair_to_weight: total number of nonzero parts exceeds n");
    Weight w(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= pair.lambda.rows(); ++i)
        w[static_cast<std::size_t>(i - 1)] = pair.lambda.part(i);
    for (int i = 1; i <= pair.mu.rows(); ++i)
        w[static_cast<std::size_t>(n - i)] = -pair.mu.part(i);
    return w;
}

HighestWeightPair weight_to_pair(const Weight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("weight_to_pair: weight not dominant");
    std::vector<int> lambda, mu;
    for (int v : w)
        if (v > 0) lambda.push_back(v);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (*it < 0) mu.push_back(-*it);
    return {Partition(std::move(lambda)), Partition(std::move(mu))};
}

bool is_dominant(const Weight& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

WeightMultiset adjoint_weights(int n) {
    if (n < 2) throw std::invalid_argument("adjoint_weights: n must be >= 2");
    WeightMultiset out(n);
    Weight zero(static_cast<std::size_t>(n), 0);
    out.add(zero, n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Weight root = zero;
            root[static_cast<std::size_t>(i)] = 1;
            root[static_cast<std::size_t>(j)] = -1;
            out.add(root, 1);
        }
    }
    return out;
}

WeightMultiset convolve_power(const WeightMultiset& w, int k) {
    if (k < 1) throw std::invalid_argument("convolve_power: k must be >= 1");
    WeightMultiset acc = w;
    for (int step = 1; step < k; ++step) {
        WeightMultiset next(w.n());
        for (const auto& [a, ca] : acc.terms())
            for (const auto& [b, cb] : w.terms()) next.add(plus(a, b), ca * cb);
        acc = std::move(next);
    }
    return acc;
}

namespace {

// All dominant weights kappa <= hw in the same coset of the root lattice:
// weakly decreasing, same coordinate sum, partial sums bounded by those of
// hw.
std::vector<Weight> dominant_weights_below(const Weight& hw, int n) {
    std::vector<Weight> out;
    Weight current(static_cast<std::size_t>(n));
    long long total = 0;
    for (int v : hw) total += v;
    const int lo = hw[static_cast<std::size_t>(n - 1)];

    auto rec = [&](auto&& self, int idx, int prev_part, long long remaining,
                   long long hw_partial) -> void {
        if (idx == n) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        long long hw_next = hw_partial + hw[static_cast<std::size_t>(idx)];
        int slots_left = n - idx - 1;
        for (int v = std::min(prev_part, static_cast<int>(hw_next - (total - remaining)));
             v >= lo; --v) {
            // Weak decrease caps the rest at v each; all parts stay >= lo.
            long long rest = remaining - v;
            if (rest > static_cast<long long>(slots_left) * v) continue;
            if (rest < static_cast<long long>(slots_left) * lo) break;
            current[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, v, rest, hw_next);
        }
    };
    rec(rec, 0, hw[0], total, 0);
    return out;
}

// Distance from hw measured in simple-root steps.
long long level_of(const Weight& hw, const Weight& kappa) {
    long long level = 0;
    long long c = 0;
    for (std::size_t j = 0; j + 1 < hw.size(); ++j) {
        c += hw[j] - kappa[j];
        level += c;
    }
    return level;
}

}  // namespace

WeightMultiset freudenthal_multiplicities(const Weight& hw, int n) {
    check_weight(hw, n);
    if (!is_dominant(hw))
        throw std::invalid_argument("freudenthal_multiplicities: weight not dominant");

    auto dominant = dominant_weights_below(hw, n);
    std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
        auto la = level_of(hw, a);
        auto lb = level_of(hw, b);
        return la != lb ? la < lb : a > b;
    });

    const Weight r = rho(n);
    const Int hw_norm = dot(plus(hw, r), plus(hw, r));

    std::map<Weight, Int> mult;
    for (const auto& kappa : dominant) {
        if (kappa == hw) {
            mult.emplace(kappa, 1);
            continue;
        }
        Int num = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                // alpha = eps_i - eps_j; <kappa + t alpha, alpha> = base + 2t.
                const int base = kappa[static_cast<std::size_t>(i)] -
                                 kappa[static_cast<std::size_t>(j)];
                for (int t = 1;; ++t) {
                    Weight nu = kappa;
                    nu[static_cast<std::size_t>(i)] += t;
                    nu[static_cast<std::size_t>(j)] -= t;
                    std::sort(nu.begin(), nu.end(), std::greater<int>());
                    auto it = mult.find(nu);
                    if (it == mult.end()) break;  // weights along a root string are contiguous
                    num += 2 * it->second * (base + 2 * t);
                }
            }
        }
        Int denom = hw_norm - dot(plus(kappa, r), plus(kappa, r));
        if (denom <= 0 || num % denom != 0)
            throw std::logic_error("freudenthal_multiplicities: recursion invariant broken");
        mult.emplace(kappa, num / denom);
    }

    WeightMultiset out(n);
    for (const auto& [kappa, m] : mult) {
        Weight orbit = kappa;
        std::sort(orbit.begin(), orbit.end());
        do {
            out.add(orbit, m);
        } while (std::next_permutation(orbit.begin(), orbit.end()));
    }
    return out;
}

Int weyl_dimension(const Weight& hw, int n) {
    check_weight(hw, n);
    if (!is_dominant(hw)) throw std::invalid_argument("weyl_dimension: weight not dominant");
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= hw[static_cast<std::size_t>(i)] - hw[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    }
    if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral result");
    return num / den;
}

Decomposition decompose(int n, int k) {
    if (n < 2) throw std::invalid_argument("decompose: n must be >= 2");
    const WeightMultiset character = convolve_power(adjoint_weights(n), k);

    // Only the dominant chamber is needed: the character is Weyl-invariant.
    WeightMultiset remaining(n);
    for (const auto& [w, c] : character.terms())
        if (is_dominant(w)) remaining.add(w, c);

    Decomposition result;
    while (!remaining.is_zero()) {
        const auto& [head, count] = *remaining.terms().begin();
        if (count < 0)
            throw std::logic_error("decompose: negative coefficient; input is not a character");
        const Weight kappa = head;
        const Int c = count;
        result.emplace(weight_to_pair(kappa), c);
        const WeightMultiset irr = freudenthal_multiplicities(kappa, n);
        for (const auto& [w, m] : irr.terms()) {
            if (!is_dominant(w)) continue;
            if (remaining.multiplicity(w) < c * m)
                throw std::logic_error(
                    "decompose: negative coefficient; input is not a character");
            remaining.add(w, -c * m);
        }
    }
    return result;
}

ComparisonReport compare_with_formula(int n, int k) {
    ComparisonReport report;
    report.n = n;
    report.k = k;
    report.hypothesis_met = n >= 2 * k;
    report.oracle_dimension_sum = 0;
    report.expected_dimension_sum = int_pow(Int(n) * n - 1, static_cast<unsigned>(k));

    const Decomposition oracle = decompose(n, k);
    for (const auto& [pair, m] : oracle)
        report.oracle_dimension_sum += m * weyl_dimension(pair_to_weight(pair, n), n);

    const MultiplicityTable table = full_table(k);
    for (const auto& entry : table.entries) {
        HighestWeightPair pair{entry.lambda, entry.mu};
        auto it = oracle.find(pair);
        ComparisonEntry ce;
        ce.pair = pair;
        ce.oracle = it == oracle.end() ? Int(0) : it->second;
        ce.formula = entry.value;
        ce.match = ce.oracle == ce.formula;
        if (!ce.match) ++report.mismatches;
        report.entries.push_back(std::move(ce));
    }
    return report;
}

nlohmann::ordered_json comparison_to_json(const ComparisonReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        rows.push_back({{"lambda", e.pair.lambda.to_string()},
                        {"mu", e.pair.mu.to_string()},
                        {"oracle", to_decimal(e.oracle)},
                        {"formula", to_decimal(e.formula)},
                        {"match", e.match}});
    }
    return rows;
}

}  // namespace sln
