#pragma once

#include <map>
#include <string>
#include <vector>

#include "sln/bigint.hpp"
#include "sln/partitions.hpp"

namespace sln {

// Bijection of {1..degree}. Composition is (sigma * tau)(i) = sigma(tau(i)).
class Permutation {
public:
    explicit Permutation(int degree);  // identity

    // images[i-1] = sigma(i); validates bijectivity.
    static Permutation from_images(std::vector<int> images);
    static Permutation transposition(int degree, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;

    Permutation inverse() const;
    int sign() const;
    bool is_identity() const;

    // Cycle notation with fixed points omitted, e.g. "(1 5)(2 3)"; the
    // identity prints as "()".
    std::string cycle_notation() const;

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

Permutation operator*(const Permutation& sigma, const Permutation& tau);

// Formal rational linear combination of permutations of a fixed degree,
// kept zero-free.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree);
    static GroupAlgebraElement of(const Permutation& p, const Rat& coeff = 1);

    int degree() const { return degree_; }
    const std::map<Permutation, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Permutation& p) const;

    void add_term(const Permutation& p, const Rat& coeff);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
    GroupAlgebraElement& operator*=(const Rat& scalar);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const Rat& s, GroupAlgebraElement a);
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    int degree_;
    std::map<Permutation, Rat> terms_;
};

// All permutations of {1..degree} fixing the complement of the tableau's
// entries pointwise and preserving each row setwise.
std::vector<Permutation> row_group(const StandardTableau& tableau, int degree);

// Likewise for columns.
std::vector<Permutation> column_group(const StandardTableau& tableau, int degree);

// y_T = (sum of the row group) * (signed sum of the column group).
GroupAlgebraElement young_symmetrizer(const StandardTableau& tableau, int degree);

// The scalar m with y_T^2 = m y_T, found by exact multiplication. Throws if
// y_T^2 is not a scalar multiple of y_T (impossible for a standard tableau;
// would signal a bug). Classically m = r!/f^lambda.
Rat essential_idempotent_constant(const StandardTableau& tableau, int degree);

}  // namespace sln
