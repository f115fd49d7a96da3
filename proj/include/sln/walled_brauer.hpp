#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sln/bigint.hpp"
#include "sln/symmetric_group.hpp"

namespace sln {

// Perfect matching on two rows of 2k vertices with a wall between positions
// k and k+1 in each row. Horizontal edges (both endpoints in one row) must
// cross the wall; vertical edges must not.
//
// Vertex ids: 0..2k-1 is the top row T1..T2k, 2k..4k-1 is the bottom row
// B1..B2k.
class WalledDiagram {
public:
    WalledDiagram(int k, const std::vector<std::pair<int, int>>& edges);
    static WalledDiagram identity(int k);

    static int top(int k, int pos);     // vertex id of T_pos, pos in 1..2k
    static int bottom(int k, int pos);  // vertex id of B_pos

    int k() const { return k_; }
    int partner(int vertex) const;

    // Canonical edge list: each pair sorted, pairs sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const WalledDiagram&, const WalledDiagram&) = default;
    friend auto operator<=>(const WalledDiagram&, const WalledDiagram&) = default;

private:
    int k_ = 0;
    std::vector<int> match_;
};

struct ComposeResult {
    int cycles = 0;
    WalledDiagram diagram;
};

// Stack d1 above d2, identify d1's bottom row with d2's top row, trace the
// paths. Closed middle loops are deleted and counted; the algebra product is
// n^cycles times the traced diagram.
ComposeResult compose_diagrams(const WalledDiagram& d1, const WalledDiagram& d2);

// All-vertical diagram except positions j and k+j, which carry horizontal
// edges in both rows. Its operator image is the contraction on slot pair
// (j, j).
WalledDiagram contraction_diagram(int k, int j);

// True iff some row has an edge joining mirror positions {i, k+i}.
bool has_forbidden_pair(const WalledDiagram& d);

// Formal exact-rational combination of diagrams sharing k, with the scalar
// parameter n fixed per element.
class DiagramAlgebraElement {
public:
    DiagramAlgebraElement(int k, int n);
    static DiagramAlgebraElement of(const WalledDiagram& d, int n, const Rat& coeff = 1);

    int k() const { return k_; }
    int n() const { return n_; }
    const std::map<WalledDiagram, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const WalledDiagram& d) const;

    void add_term(const WalledDiagram& d, const Rat& coeff);

    DiagramAlgebraElement& operator+=(const DiagramAlgebraElement& other);
    DiagramAlgebraElement& operator-=(const DiagramAlgebraElement& other);
    DiagramAlgebraElement& operator*=(const Rat& scalar);

    friend bool operator==(const DiagramAlgebraElement&, const DiagramAlgebraElement&) = default;

private:
    int k_;
    int n_;
    std::map<WalledDiagram, Rat> terms_;
};

DiagramAlgebraElement operator+(DiagramAlgebraElement a, const DiagramAlgebraElement& b);
DiagramAlgebraElement operator-(DiagramAlgebraElement a, const DiagramAlgebraElement& b);
DiagramAlgebraElement operator*(const Rat& s, DiagramAlgebraElement a);

// Bilinear extension of compose_diagrams with scalar n^cycles per pair.
DiagramAlgebraElement multiply(const DiagramAlgebraElement& a, const DiagramAlgebraElement& b);

// b = prod_{j=1..k} (1 - c_j) with c_j the contraction diagram scaled by
// 1/n; satisfies b^2 = b and kills every diagram with a forbidden pair on
// the matching side.
DiagramAlgebraElement b_idempotent(int k, int n);

// The two "flips": first interchange T_p and B_p for p > k, then interchange
// T_i and T_{k+i}, carrying edges along. Every edge becomes top-to-bottom;
// read the result as a permutation of {1..2k}. A diagram has no forbidden
// pair exactly when that permutation is fixed-point-free.
Permutation flip_to_permutation(const WalledDiagram& d);

// Inverse of the flips; total bijection from permutations of {1..2k}.
WalledDiagram diagram_from_permutation(const Permutation& sigma);

// All (2k)! diagrams, ordered by the flip bijection over permutations in
// lexicographic one-line order.
std::vector<WalledDiagram> enumerate_diagrams(int k);

// Rank over the rationals of { b d b : d has no forbidden pair } in the
// diagram basis; equals D_{2k} for n >= 2k.
int sandwich_basis_rank(int k, int n);

// {"k": k, "edges": [["T1","B1"], ...]}; the reader validates the wall
// constraints and names the offending edge in its diagnostic.
nlohmann::ordered_json diagram_to_json(const WalledDiagram& d);
WalledDiagram diagram_from_json(const nlohmann::json& doc);

}  // namespace sln
