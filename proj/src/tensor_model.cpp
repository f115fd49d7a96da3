#include "sln/tensor_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "sln/exact_linalg.hpp"

namespace sln {

namespace {

// Keeps the explicit model at desk scale; the character oracle handles
// anything larger.
void check_desk_scale(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("tensor model: n, k must be >= 1");
    double dim = 1;
    for (int i = 0; i < 2 * k; ++i) dim *= n;
    if (dim > 1e6)
        throw std::invalid_argument(
            "tensor model: n^(2k) exceeds 10^6; use the character oracle for this size");
}

void check_index(const SimpleTensorIndex& index, int n, int k) {
    if (static_cast<int>(index.left.size()) != k || static_cast<int>(index.right.size()) != k)
        throw std::invalid_argument("SimpleTensorIndex: tuple lengths must equal k");
    for (int v : index.left)
        if (v < 1 || v > n) throw std::invalid_argument("SimpleTensorIndex: index out of range");
    for (int v : index.right)
        if (v < 1 || v > n) throw std::invalid_argument("SimpleTensorIndex: index out of range");
}

}  // namespace

TensorVector::TensorVector(int n, int k) : n_(n), k_(k) { check_desk_scale(n, k); }

TensorVector TensorVector::basis(int n, int k, SimpleTensorIndex index) {
    TensorVector v(n, k);
    v.add_term(std::move(index), 1);
    return v;
}

Rat TensorVector::coefficient(const SimpleTensorIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TensorVector::add_term(const SimpleTensorIndex& index, const Rat& coeff) {
    check_index(index, n_, k_);
    auto [it, inserted] = terms_.emplace(index, coeff);
    if (!inserted) it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
    if (other.n_ != n_ || other.k_ != k_)
        throw std::invalid_argument("TensorVector: parameter mismatch");
    for (const auto& [i, c] : other.terms_) add_term(i, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
    if (other.n_ != n_ || other.k_ != k_)
        throw std::invalid_argument("TensorVector: parameter mismatch");
    for (const auto& [i, c] : other.terms_) add_term(i, -c);
    return *this;
}

TensorVector& TensorVector::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [i, c] : terms_) c *= scalar;
    }
    return *this;
}

TensorVector operator+(TensorVector a, const TensorVector& b) {
    a += b;
    return a;
}

TensorVector operator-(TensorVector a, const TensorVector& b) {
    a -= b;
    return a;
}

TensorVector operator*(const Rat& s, TensorVector a) {
    a *= s;
    return a;
}

TensorOperator::TensorOperator(int n, int k, Rule rule)
    : n_(n), k_(k), rule_(std::move(rule)) {
    check_desk_scale(n, k);
}

TensorOperator TensorOperator::identity(int n, int k) {
    return TensorOperator(n, k, [n, k](const SimpleTensorIndex& i) {
        return TensorVector::basis(n, k, i);
    });
}

TensorOperator TensorOperator::zero(int n, int k) {
    return TensorOperator(n, k,
                          [n, k](const SimpleTensorIndex&) { return TensorVector(n, k); });
}

TensorVector TensorOperator::apply(const SimpleTensorIndex& index) const {
    check_index(index, n_, k_);
    return rule_(index);
}

TensorVector TensorOperator::apply(const TensorVector& v) const {
    if (v.n() != n_ || v.k() != k_)
        throw std::invalid_argument("TensorOperator: parameter mismatch");
    TensorVector out(n_, k_);
    for (const auto& [i, c] : v.terms()) {
        TensorVector img = rule_(i);
        img *= c;
        out += img;
    }
    return out;
}

TensorOperator compose(const TensorOperator& a, const TensorOperator& b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw std::invalid_argument("compose: parameter mismatch");
    return TensorOperator(a.n(), a.k(), [a, b](const SimpleTensorIndex& i) {
        return a.apply(b.apply(i));
    });
}

TensorOperator add(const TensorOperator& a, const TensorOperator& b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw std::invalid_argument("add: parameter mismatch");
    return TensorOperator(a.n(), a.k(), [a, b](const SimpleTensorIndex& i) {
        return a.apply(i) + b.apply(i);
    });
}

TensorOperator subtract(const TensorOperator& a, const TensorOperator& b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw std::invalid_argument("subtract: parameter mismatch");
    return TensorOperator(a.n(), a.k(), [a, b](const SimpleTensorIndex& i) {
        return a.apply(i) - b.apply(i);
    });
}

TensorOperator scale(const Rat& s, const TensorOperator& a) {
    return TensorOperator(a.n(), a.k(), [s, a](const SimpleTensorIndex& i) {
        return s * a.apply(i);
    });
}

std::vector<SimpleTensorIndex> all_basis_indices(int n, int k) {
    check_desk_scale(n, k);
    std::vector<SimpleTensorIndex> out;
    SimpleTensorIndex index;
    index.left.assign(static_cast<std::size_t>(k), 1);
    index.right.assign(static_cast<std::size_t>(k), 1);
    auto next = [&]() {
        for (int slot = 2 * k - 1; slot >= 0; --slot) {
            int& v = slot < k ? index.left[static_cast<std::size_t>(slot)]
                              : index.right[static_cast<std::size_t>(slot - k)];
            if (v < n) {
                ++v;
                return true;
            }
            v = 1;
        }
        return false;
    };
    do {
        out.push_back(index);
    } while (next());
    std::sort(out.begin(), out.end());
    return out;
}

TensorOperator contraction_operator(int n, int k, int i, int j) {
    check_desk_scale(n, k);
    if (i < 1 || i > k || j < 1 || j > k)
        throw std::invalid_argument("contraction_operator: slot out of range");
    return TensorOperator(n, k, [n, k, i, j](const SimpleTensorIndex& index) {
        TensorVector out(n, k);
        if (index.left[static_cast<std::size_t>(i - 1)] !=
            index.right[static_cast<std::size_t>(j - 1)])
            return out;  // tr(u_i w_j*) = 0
        SimpleTensorIndex image = index;
        for (int ell = 1; ell <= n; ++ell) {
            image.left[static_cast<std::size_t>(i - 1)] = ell;
            image.right[static_cast<std::size_t>(j - 1)] = ell;
            out.add_term(image, 1);
        }
        return out;
    });
}

TensorOperator projector_p(int n, int k, int j) {
    return scale(make_rat(1, n), contraction_operator(n, k, j, j));
}

TensorOperator e_operator(int n, int k) {
    TensorOperator e = TensorOperator::identity(n, k);
    for (int j = 1; j <= k; ++j)
        e = compose(e, subtract(TensorOperator::identity(n, k), projector_p(n, k, j)));
    return e;
}

TensorOperator place_permutation_operator(int n, int k, const Permutation& sigma_left,
                                          const Permutation& sigma_right) {
    check_desk_scale(n, k);
    if (sigma_left.degree() != k || sigma_right.degree() != k)
        throw std::invalid_argument("place_permutation_operator: degree must equal k");
    return TensorOperator(n, k, [n, k, sigma_left, sigma_right](const SimpleTensorIndex& index) {
        SimpleTensorIndex image;
        image.left.resize(static_cast<std::size_t>(k));
        image.right.resize(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) {
            image.left[static_cast<std::size_t>(sigma_left(i) - 1)] =
                index.left[static_cast<std::size_t>(i - 1)];
            image.right[static_cast<std::size_t>(sigma_right(i) - 1)] =
                index.right[static_cast<std::size_t>(i - 1)];
        }
        return TensorVector::basis(n, k, std::move(image));
    });
}

TensorOperator diagram_to_operator(const WalledDiagram& d, int n) {
    const int k = d.k();
    check_desk_scale(n, k);
    return TensorOperator(n, k, [d, n, k](const SimpleTensorIndex& index) {
        const int w = 2 * k;
        // Input labels on the bottom row of the diagram.
        auto input_label = [&](int pos) {  // pos in 0..2k-1
            return pos < k ? index.left[static_cast<std::size_t>(pos)]
                           : index.right[static_cast<std::size_t>(pos - k)];
        };

        TensorVector out(n, k);
        std::vector<std::pair<int, int>> summed;  // top horizontal edges
        SimpleTensorIndex image;
        image.left.assign(static_cast<std::size_t>(k), 1);
        image.right.assign(static_cast<std::size_t>(k), 1);

        for (auto [a, b] : d.edges()) {
            const bool a_top = a < w;
            const bool b_top = b < w;
            if (!a_top && !b_top) {
                // Bottom horizontal: trace delta on the input.
                if (input_label(a - w) != input_label(b - w)) return out;
            } else if (a_top && b_top) {
                summed.emplace_back(a, b);
            } else {
                const int tpos = a_top ? a : b;
                const int bpos = (a_top ? b : a) - w;
                int label = input_label(bpos);
                if (tpos < k)
                    image.left[static_cast<std::size_t>(tpos)] = label;
                else
                    image.right[static_cast<std::size_t>(tpos - k)] = label;
            }
        }

        // Each top horizontal contributes an independent summed dual pair.
        std::vector<int> ell(summed.size(), 1);
        for (;;) {
            for (std::size_t e = 0; e < summed.size(); ++e) {
                auto [a, b] = summed[e];
                for (int tpos : {a, b}) {
                    if (tpos < k)
                        image.left[static_cast<std::size_t>(tpos)] = ell[e];
                    else
                        image.right[static_cast<std::size_t>(tpos - k)] = ell[e];
                }
            }
            out.add_term(image, 1);
            std::size_t e = 0;
            while (e < ell.size() && ell[e] == n) ell[e++] = 1;
            if (e == ell.size()) break;
            ++ell[e];
        }
        return out;
    });
}

TensorOperator lie_action(int n, int k, int a, int b) {
    check_desk_scale(n, k);
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("lie_action: matrix indices out of range");
    return TensorOperator(n, k, [n, k, a, b](const SimpleTensorIndex& index) {
        TensorVector out(n, k);
        for (int c = 0; c < k; ++c) {
            if (index.left[static_cast<std::size_t>(c)] == b) {
                SimpleTensorIndex image = index;
                image.left[static_cast<std::size_t>(c)] = a;
                out.add_term(image, 1);
            }
            if (index.right[static_cast<std::size_t>(c)] == a) {
                SimpleTensorIndex image = index;
                image.right[static_cast<std::size_t>(c)] = b;
                out.add_term(image, -1);
            }
        }
        return out;
    });
}

std::optional<std::vector<int>> weight_of(const TensorVector& v) {
    std::optional<std::vector<int>> weight;
    for (const auto& [index, c] : v.terms()) {
        std::vector<int> w(static_cast<std::size_t>(v.n()), 0);
        for (int x : index.left) w[static_cast<std::size_t>(x - 1)] += 1;
        for (int x : index.right) w[static_cast<std::size_t>(x - 1)] -= 1;
        if (!weight) {
            weight = std::move(w);
        } else if (*weight != w) {
            return std::nullopt;
        }
    }
    return weight;
}

ContractionPattern::ContractionPattern(int k, std::vector<int> s, std::vector<int> t)
    : k_(k), s_(std::move(s)), t_(std::move(t)) {
    if (s_.size() != t_.size())
        throw std::invalid_argument("ContractionPattern: |s| != |t|");
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (s_[i] < 1 || s_[i] > k_ || t_[i] < 1 || t_[i] > k_)
            throw std::invalid_argument("ContractionPattern: position out of range");
        if (i + 1 < s_.size() && s_[i] >= s_[i + 1])
            throw std::invalid_argument("ContractionPattern: s must be strictly increasing");
    }
    auto sorted_t = t_;
    std::sort(sorted_t.begin(), sorted_t.end());
    if (std::adjacent_find(sorted_t.begin(), sorted_t.end()) != sorted_t.end())
        throw std::invalid_argument("ContractionPattern: t must have distinct entries");
}

std::vector<int> ContractionPattern::s_complement() const {
    std::vector<int> out;
    for (int p = 1; p <= k_; ++p)
        if (std::find(s_.begin(), s_.end(), p) == s_.end()) out.push_back(p);
    return out;
}

std::vector<int> ContractionPattern::t_complement() const {
    std::vector<int> out;
    for (int p = 1; p <= k_; ++p)
        if (std::find(t_.begin(), t_.end(), p) == t_.end()) out.push_back(p);
    return out;
}

bool ContractionPattern::off_diagonal() const {
    for (std::size_t i = 0; i < s_.size(); ++i)
        if (s_[i] == t_[i]) return false;
    return true;
}

TensorVector build_x_prime(int n, int k, const StandardTableau& T, const StandardTableau& Tstar,
                           const ContractionPattern& pattern) {
    check_desk_scale(n, k);
    if (n < 2 * k) throw std::invalid_argument("build_x_prime: requires n >= 2k");
    const int r = T.shape().sum();
    if (Tstar.shape().sum() != r)
        throw std::invalid_argument("build_x_prime: |lambda| != |mu|");
    if (pattern.k() != k || pattern.pairs() != k - r)
        throw std::invalid_argument("build_x_prime: pattern size must be k - r");
    if (T.entries() != pattern.s_complement())
        throw std::invalid_argument("build_x_prime: entries of T must be the complement of s");
    if (Tstar.entries() != pattern.t_complement())
        throw std::invalid_argument("build_x_prime: entries of T* must be the complement of t");

    SimpleTensorIndex index;
    index.left.assign(static_cast<std::size_t>(k), 0);
    index.right.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < pattern.pairs(); ++i) {
        index.left[static_cast<std::size_t>(pattern.s()[static_cast<std::size_t>(i)] - 1)] =
            r + i + 1;
        index.right[static_cast<std::size_t>(pattern.t()[static_cast<std::size_t>(i)] - 1)] =
            r + i + 1;
    }
    for (int p : pattern.s_complement())
        index.left[static_cast<std::size_t>(p - 1)] = T.row_of(p);
    for (int p : pattern.t_complement())
        index.right[static_cast<std::size_t>(p - 1)] = n - Tstar.row_of(p) + 1;
    return TensorVector::basis(n, k, std::move(index));
}

namespace {

// The symmetrizer as an operator acting on one side only.
TensorOperator group_algebra_operator(int n, int k, const GroupAlgebraElement& element,
                                      bool left_side) {
    TensorOperator out = TensorOperator::zero(n, k);
    const Permutation id(k);
    for (const auto& [p, c] : element.terms()) {
        TensorOperator term = left_side ? place_permutation_operator(n, k, p, id)
                                        : place_permutation_operator(n, k, id, p);
        out = add(out, scale(c, term));
    }
    return out;
}

}  // namespace

TensorOperator apply_y(int n, int k, const StandardTableau& T, const StandardTableau& Tstar,
                       const ContractionPattern& pattern) {
    check_desk_scale(n, k);
    TensorOperator y = group_algebra_operator(n, k, young_symmetrizer(T, k), true);
    y = compose(y, group_algebra_operator(n, k, young_symmetrizer(Tstar, k), false));
    for (int i = 0; i < pattern.pairs(); ++i)
        y = compose(y, contraction_operator(n, k, pattern.s()[static_cast<std::size_t>(i)],
                                            pattern.t()[static_cast<std::size_t>(i)]));
    return y;
}

nlohmann::ordered_json MaximalVectorReport::to_json() const {
    return {{"lambda", lambda.to_string()}, {"mu", mu.to_string()},
            {"s", s},                       {"t", t},
            {"T", T_rows},                  {"Tstar", Tstar_rows},
            {"nonzero", nonzero},           {"weight", weight},
            {"maximal", maximal}};
}

MaximalVectorReport verify_maximal_vector(int n, int k, const StandardTableau& T,
                                          const StandardTableau& Tstar,
                                          const ContractionPattern& pattern) {
    MaximalVectorReport report;
    report.lambda = T.shape();
    report.mu = Tstar.shape();
    report.s = pattern.s();
    report.t = pattern.t();
    report.T_rows = T.rows();
    report.Tstar_rows = Tstar.rows();

    const TensorVector x_prime = build_x_prime(n, k, T, Tstar, pattern);
    const TensorVector w = e_operator(n, k).apply(apply_y(n, k, T, Tstar, pattern).apply(x_prime));
    report.nonzero = !w.is_zero();
    if (!report.nonzero) return report;

    auto weight = weight_of(w);
    if (weight) {
        report.weight = *weight;
        std::vector<int> expected(static_cast<std::size_t>(n), 0);
        for (int i = 1; i <= report.lambda.rows(); ++i)
            expected[static_cast<std::size_t>(i - 1)] = report.lambda.part(i);
        for (int i = 1; i <= report.mu.rows(); ++i)
            expected[static_cast<std::size_t>(n - i)] = -report.mu.part(i);
        report.weight_ok = (*weight == expected);
    }

    report.maximal = true;
    for (int a = 1; a < n; ++a) {
        if (!lie_action(n, k, a, a + 1).apply(w).is_zero()) {
            report.maximal = false;
            break;
        }
    }
    return report;
}

std::vector<MaximalVectorReport> maximal_vector_sweep(int n, int k) {
    check_desk_scale(n, k);
    std::vector<MaximalVectorReport> out;
    for (int r = 0; r <= k; ++r) {
        std::vector<std::vector<int>> subsets;
        std::vector<bool> mask(static_cast<std::size_t>(k), false);
        std::fill(mask.begin(), mask.begin() + (k - r), true);
        do {
            std::vector<int> subset;
            for (int i = 0; i < k; ++i)
                if (mask[static_cast<std::size_t>(i)]) subset.push_back(i + 1);
            subsets.push_back(std::move(subset));
        } while (std::prev_permutation(mask.begin(), mask.end()));

        for (const auto& s : subsets) {
            for (const auto& t_set : subsets) {
                std::vector<int> t = t_set;
                std::sort(t.begin(), t.end());
                do {
                    const ContractionPattern pattern(k, s, t);
                    for (const auto& lambda : enumerate_partitions(r)) {
                        for (const auto& mu : enumerate_partitions(r)) {
                            for (const auto& T : enumerate_standard_tableaux(
                                     lambda, pattern.s_complement())) {
                                for (const auto& Tstar : enumerate_standard_tableaux(
                                         mu, pattern.t_complement())) {
                                    out.push_back(
                                        verify_maximal_vector(n, k, T, Tstar, pattern));
                                }
                            }
                        }
                    }
                } while (std::next_permutation(t.begin(), t.end()));
            }
        }
    }
    return out;
}

std::string maximal_vector_reports_jsonl(int n, int k) {
    std::string out;
    for (const auto& report : maximal_vector_sweep(n, k)) {
        out += report.to_json().dump();
        out += '\n';
    }
    return out;
}

int operator_rank(const TensorOperator& op) {
    const auto basis = all_basis_indices(op.n(), op.k());
    std::map<SimpleTensorIndex, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) {
        TensorVector image = op.apply(b);
        std::vector<Rat> row(basis.size(), Rat(0));
        for (const auto& [i, c] : image.terms()) row[column.at(i)] = c;
        rows.push_back(std::move(row));
    }
    return rank_exact(std::move(rows));
}

}  // namespace sln
