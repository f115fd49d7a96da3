#include "sln/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sln {

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> hit(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || hit[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation::from_images: not a bijection");
        hit[static_cast<std::size_t>(v - 1)] = true;
    }
    Permutation p(static_cast<int>(images.size()));
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
    Permutation p(degree);
    if (a < 1 || a > degree || b < 1 || b > degree)
        throw std::invalid_argument("Permutation::transposition: point out of range");
    std::swap(p.images_[static_cast<std::size_t>(a - 1)],
              p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree())
        throw std::invalid_argument("Permutation: point out of range");
    return images_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= degree(); ++i)
        inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i - 1)] - 1)] = i;
    return from_images(std::move(inv));
}

int Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    int parity = 0;
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<std::size_t>(j - 1)]) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            j = (*this)(j);
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Permutation::cycle_notation() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[static_cast<std::size_t>(j - 1)]) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = (*this)(j);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree())
        throw std::invalid_argument("Permutation product: degree mismatch");
    std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
    for (int i = 1; i <= sigma.degree(); ++i)
        images[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
    return Permutation::from_images(std::move(images));
}

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p, const Rat& coeff) {
    GroupAlgebraElement e(p.degree());
    e.add_term(p, coeff);
    return e;
}

Rat GroupAlgebraElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rat& coeff) {
    if (p.degree() != degree_)
        throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    auto [it, inserted] = terms_.emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [p, c] : terms_) c *= scalar;
    }
    return *this;
}

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a += b;
    return a;
}

GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a -= b;
    return a;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("GroupAlgebraElement product: degree mismatch");
    GroupAlgebraElement out(a.degree());
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) out.add_term(p * q, cp * cq);
    return out;
}

GroupAlgebraElement operator*(const Rat& s, GroupAlgebraElement a) {
    a *= s;
    return a;
}

namespace {

// All permutations of {1..degree} that permute each block of `blocks`
// within itself and fix everything else.
std::vector<Permutation> block_permutations(const std::vector<std::vector<int>>& blocks,
                                            int degree) {
    std::vector<Permutation> out{Permutation(degree)};
    for (const auto& block : blocks) {
        for (int v : block)
            if (v < 1 || v > degree)
                throw std::invalid_argument("tableau entry out of range for degree");
        std::vector<int> target = block;
        std::sort(target.begin(), target.end());
        std::vector<Permutation> extended;
        do {
            std::vector<int> images(static_cast<std::size_t>(degree));
            std::iota(images.begin(), images.end(), 1);
            std::vector<int> sorted_block = block;
            std::sort(sorted_block.begin(), sorted_block.end());
            for (std::size_t i = 0; i < sorted_block.size(); ++i)
                images[static_cast<std::size_t>(sorted_block[i] - 1)] = target[i];
            Permutation local = Permutation::from_images(std::move(images));
            for (const auto& prev : out) extended.push_back(local * prev);
        } while (std::next_permutation(target.begin(), target.end()));
        std::sort(extended.begin(), extended.end());
        out = std::move(extended);
    }
    return out;
}

std::vector<std::vector<int>> columns_of(const StandardTableau& tableau) {
    std::vector<std::vector<int>> cols;
    for (const auto& row : tableau.rows()) {
        if (row.size() > cols.size()) cols.resize(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
    }
    return cols;
}

}  // namespace

std::vector<Permutation> row_group(const StandardTableau& tableau, int degree) {
    return block_permutations(tableau.rows(), degree);
}

std::vector<Permutation> column_group(const StandardTableau& tableau, int degree) {
    return block_permutations(columns_of(tableau), degree);
}

GroupAlgebraElement young_symmetrizer(const StandardTableau& tableau, int degree) {
    GroupAlgebraElement rows(degree), cols(degree);
    for (const auto& p : row_group(tableau, degree)) rows.add_term(p, 1);
    for (const auto& p : column_group(tableau, degree)) cols.add_term(p, p.sign());
    return rows * cols;
}

Rat essential_idempotent_constant(const StandardTableau& tableau, int degree) {
    const auto y = young_symmetrizer(tableau, degree);
    if (y.is_zero()) throw std::logic_error("essential_idempotent_constant: y is zero");
    const auto y2 = y * y;
    const auto& [p0, c0] = *y.terms().begin();
    Rat m = y2.coefficient(p0) / c0;
    GroupAlgebraElement scaled = y;
    scaled *= m;
    if (!(scaled == y2))
        throw std::logic_error(
            "essential_idempotent_constant: y^2 is not a scalar multiple of y");
    return m;
}

}  // namespace sln
