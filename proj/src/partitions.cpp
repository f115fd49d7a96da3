#include "sln/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sln {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t pos = 0;
            int value = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
            parts.push_back(value);
        }
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
    return i <= rows() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

std::vector<Partition> enumerate_partitions(int r) {
    if (r < 0) throw std::invalid_argument("enumerate_partitions: r must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    // Largest first part first gives decreasing lexicographic order.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

Int hook_product(const Partition& shape) {
    const auto conj = shape.conjugate();
    Int prod = 1;
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            int arm = shape.part(i) - j;
            int leg = conj.part(j) - i;
            prod *= arm + leg + 1;
        }
    }
    return prod;
}

Int num_standard_tableaux(const Partition& shape) {
    return factorial(static_cast<unsigned>(shape.sum())) / hook_product(shape);
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("StandardTableau: row count does not match shape");
    std::vector<int> seen;
    for (int i = 0; i < shape_.rows(); ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != shape_.part(i + 1))
            throw std::invalid_argument("StandardTableau: row length does not match shape");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j + 1 < row.size() && row[j] >= row[j + 1])
                throw std::invalid_argument("StandardTableau: rows must strictly increase");
            if (i > 0 && j < rows_[static_cast<std::size_t>(i - 1)].size() &&
                rows_[static_cast<std::size_t>(i - 1)][j] >= row[j])
                throw std::invalid_argument("StandardTableau: columns must strictly increase");
            seen.push_back(row[j]);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("StandardTableau: duplicate entry");
}

std::vector<int> StandardTableau::entries() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

int StandardTableau::row_of(int entry) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (std::find(rows_[i].begin(), rows_[i].end(), entry) != rows_[i].end())
            return static_cast<int>(i) + 1;
    throw std::invalid_argument("StandardTableau::row_of: entry " + std::to_string(entry) +
                                " not present");
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape,
                                                         const std::vector<int>& entries) {
    if (static_cast<int>(entries.size()) != shape.sum())
        throw std::invalid_argument("enumerate_standard_tableaux: entry count != shape size");
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] >= entries[i + 1])
            throw std::invalid_argument(
                "enumerate_standard_tableaux: entries must be strictly ascending");

    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    // Place entries in ascending order; each goes at the end of a row that is
    // still shorter than the row above it. This visits every standard filling
    // exactly once.
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (next == entries.size()) {
            out.emplace_back(shape, rows);
            return;
        }
        for (int i = 0; i < shape.rows(); ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            int len = static_cast<int>(row.size());
            if (len >= shape.part(i + 1)) continue;
            if (i > 0 && static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) <= len)
                continue;
            row.push_back(entries[next]);
            self(self, next + 1);
            row.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace sln
