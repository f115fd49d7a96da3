#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sln/bigint.hpp"

namespace sln {

// Weakly decreasing sequence of positive integer parts. The empty sequence
// is the unique partition of 0 and is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Comma-separated parts, e.g. "2,1,1"; the empty string is the empty
    // partition.
    static Partition parse(const std::string& text);
    std::string to_string() const;

    int sum() const { return sum_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based; 0 past the last row.
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }
    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the parts vector, so std::greater gives the table
    // order (4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1).
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// All partitions of r, each once, in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int r);

// Product of hook lengths h_{i,j} = arm + leg + 1 over all boxes; 1 for the
// empty shape.
Int hook_product(const Partition& shape);

// f^lambda = r! / hook_product via the hook length formula.
Int num_standard_tableaux(const Partition& shape);

// Filling of a shape with distinct entries, strictly increasing along rows
// and down columns. Entries come from an arbitrary finite integer set (not
// necessarily 1..r).
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // All entries in ascending order.
    std::vector<int> entries() const;

    // 1-based row index of an entry; throws if absent.
    int row_of(int entry) const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// All standard fillings of `shape` with the given entries (strictly
// ascending list whose length equals the shape size), each exactly once.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape,
                                                         const std::vector<int>& entries);

}  // namespace sln
