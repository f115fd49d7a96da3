#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "sln/bigint.hpp"
#include "sln/partitions.hpp"
#include "sln/symmetric_group.hpp"
#include "sln/walled_brauer.hpp"

namespace sln {

// Basis label of one simple tensor of V^(x)k (x) (V*)^(x)k: k covariant
// factor indices followed by k contravariant ones, all in 1..n.
struct SimpleTensorIndex {
    std::vector<int> left;
    std::vector<int> right;

    friend bool operator==(const SimpleTensorIndex&, const SimpleTensorIndex&) = default;
    friend auto operator<=>(const SimpleTensorIndex&, const SimpleTensorIndex&) = default;
};

// Sparse exact-rational vector on the simple-tensor basis.
class TensorVector {
public:
    TensorVector(int n, int k);
    static TensorVector basis(int n, int k, SimpleTensorIndex index);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::map<SimpleTensorIndex, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const SimpleTensorIndex& index) const;

    void add_term(const SimpleTensorIndex& index, const Rat& coeff);

    TensorVector& operator+=(const TensorVector& other);
    TensorVector& operator-=(const TensorVector& other);
    TensorVector& operator*=(const Rat& scalar);

    friend bool operator==(const TensorVector&, const TensorVector&) = default;

private:
    int n_;
    int k_;
    std::map<SimpleTensorIndex, Rat> terms_;
};

TensorVector operator+(TensorVector a, const TensorVector& b);
TensorVector operator-(TensorVector a, const TensorVector& b);
TensorVector operator*(const Rat& s, TensorVector a);

// Linear operator given as a deterministic rule on basis indices, extended
// linearly. Operators stay symbolic; nothing is materialized until applied.
class TensorOperator {
public:
    using Rule = std::function<TensorVector(const SimpleTensorIndex&)>;

    TensorOperator(int n, int k, Rule rule);
    static TensorOperator identity(int n, int k);
    static TensorOperator zero(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    TensorVector apply(const SimpleTensorIndex& index) const;
    TensorVector apply(const TensorVector& v) const;

private:
    int n_;
    int k_;
    Rule rule_;
};

// a after b.
TensorOperator compose(const TensorOperator& a, const TensorOperator& b);
TensorOperator add(const TensorOperator& a, const TensorOperator& b);
TensorOperator subtract(const TensorOperator& a, const TensorOperator& b);
TensorOperator scale(const Rat& s, const TensorOperator& a);

// Every simple-tensor index for (n, k), in lexicographic order. Refuses
// n^(2k) > 10^6: larger instances belong to the character oracle.
std::vector<SimpleTensorIndex> all_basis_indices(int n, int k);

// Trace pairing on covariant slot i and contravariant slot j: the basis
// tensor picks up delta(left_i = right_j) and the pair is replaced by the
// summed dual pair. Satisfies c^2 = n c.
TensorOperator contraction_operator(int n, int k, int i, int j);

// (1/n) times the (j, j) contraction; an idempotent.
TensorOperator projector_p(int n, int k, int j);

// e = (id - p_1)(id - p_2) ... (id - p_k); idempotent projection onto the
// traceless part, of rank (n^2 - 1)^k.
TensorOperator e_operator(int n, int k);

// sigma_left permutes the covariant slots, sigma_right the contravariant
// ones: slot i's content moves to slot sigma(i).
TensorOperator place_permutation_operator(int n, int k, const Permutation& sigma_left,
                                          const Permutation& sigma_right);

// Representation of the diagram algebra: input labels sit on the bottom
// row, output labels on the top row. Vertical edges transport labels,
// bottom horizontals contribute trace deltas, top horizontals emit a summed
// dual pair. Diagrams without horizontal edges act as place permutations;
// the product maps to composition up to n^cycles.
TensorOperator diagram_to_operator(const WalledDiagram& d, int n);

// Derivation action of the elementary matrix E_{a,b}: v_c -> delta(c=b) v_a
// on covariant factors, dual-minus on contravariant ones, summed over all
// 2k slots.
TensorOperator lie_action(int n, int k, int a, int b);

// Common weight of all terms as an integer n-tuple (the diagonal torus
// eigenvalue), or nullopt when the terms disagree ("not homogeneous").
std::optional<std::vector<int>> weight_of(const TensorVector& v);

// Paired ordered subsets (s, t) of {1..k} selecting the contraction slots
// c_{s_i, t_i}. s is kept sorted; t is stored in pairing order.
class ContractionPattern {
public:
    ContractionPattern(int k, std::vector<int> s, std::vector<int> t);

    int k() const { return k_; }
    int pairs() const { return static_cast<int>(s_.size()); }
    const std::vector<int>& s() const { return s_; }
    const std::vector<int>& t() const { return t_; }

    // Positions not in s (resp. t), ascending: the tableau entry sets.
    std::vector<int> s_complement() const;
    std::vector<int> t_complement() const;

    // True iff s_i != t_i for every pair.
    bool off_diagonal() const;

private:
    int k_;
    std::vector<int> s_;
    std::vector<int> t_;
};

// The simple tensor x': slot s_i carries v_{r+i} and slot t_i carries
// v*_{r+i}; a slot in row j of T carries v_j, and one in row j of T* carries
// v*_{n-j+1}. Entries of T must be exactly the complement of s, likewise T*
// and t; needs n >= 2k for distinct labels.
TensorVector build_x_prime(int n, int k, const StandardTableau& T, const StandardTableau& Tstar,
                           const ContractionPattern& pattern);

// y = y_T y_T* c_{s,t} as an operator: the two Young symmetrizers act by
// place permutation on their own sides, composed with the selected
// contractions. All factors commute.
TensorOperator apply_y(int n, int k, const StandardTableau& T, const StandardTableau& Tstar,
                       const ContractionPattern& pattern);

struct MaximalVectorReport {
    Partition lambda;
    Partition mu;
    std::vector<int> s;
    std::vector<int> t;
    std::vector<std::vector<int>> T_rows;
    std::vector<std::vector<int>> Tstar_rows;
    bool nonzero = false;
    std::vector<int> weight;  // empty when the vector vanishes
    bool maximal = false;
    bool weight_ok = false;

    bool passed() const { return nonzero && weight_ok && maximal; }

    // {lambda, mu, s, t, T, Tstar, nonzero, weight, maximal}
    nlohmann::ordered_json to_json() const;
};

// Computes w = e y x' and checks that it is nonzero, has the weight of
// (lambda, mu), and is killed by every raising operator E_{a,a+1}.
MaximalVectorReport verify_maximal_vector(int n, int k, const StandardTableau& T,
                                          const StandardTableau& Tstar,
                                          const ContractionPattern& pattern);

// verify_maximal_vector over every (T, T*, s, t) tuple at this size, in a
// fixed order: r ascending, s then t by subset position, then tableaux in
// enumeration order. Patterns touching the diagonal are included (their
// vectors vanish).
std::vector<MaximalVectorReport> maximal_vector_sweep(int n, int k);

// One report document per line, in sweep order.
std::string maximal_vector_reports_jsonl(int n, int k);

// Rank of the operator on the full basis, over the rationals, exactly.
int operator_rank(const TensorOperator& op);

}  // namespace sln
