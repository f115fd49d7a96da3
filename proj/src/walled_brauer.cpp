#include "sln/walled_brauer.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sln/derangements.hpp"
#include "sln/exact_linalg.hpp"

namespace sln {

namespace {

std::string vertex_label(int k, int v) {
    return v < 2 * k ? "T" + std::to_string(v + 1) : "B" + std::to_string(v - 2 * k + 1);
}

}  // namespace

int WalledDiagram::top(int k, int pos) {
    if (pos < 1 || pos > 2 * k) throw std::invalid_argument("WalledDiagram::top: bad position");
    return pos - 1;
}

int WalledDiagram::bottom(int k, int pos) {
    if (pos < 1 || pos > 2 * k)
        throw std::invalid_argument("WalledDiagram::bottom: bad position");
    return 2 * k + pos - 1;
}

WalledDiagram::WalledDiagram(int k, const std::vector<std::pair<int, int>>& edges) : k_(k) {
    if (k < 1) throw std::invalid_argument("WalledDiagram: k must be >= 1");
    match_.assign(static_cast<std::size_t>(4 * k), -1);
    if (static_cast<int>(edges.size()) != 2 * k)
        throw std::invalid_argument("WalledDiagram: expected 2k edges");
    for (auto [a, b] : edges) {
        if (a < 0 || a >= 4 * k || b < 0 || b >= 4 * k || a == b)
            throw std::invalid_argument("WalledDiagram: bad vertex in edge");
        if (match_[static_cast<std::size_t>(a)] != -1 || match_[static_cast<std::size_t>(b)] != -1)
            throw std::invalid_argument("WalledDiagram: vertex " + vertex_label(k, a) + " or " +
                                        vertex_label(k, b) + " used twice");
        const bool a_top = a < 2 * k;
        const bool b_top = b < 2 * k;
        const int pa = (a_top ? a : a - 2 * k) % (2 * k) + 1;
        const int pb = (b_top ? b : b - 2 * k) % (2 * k) + 1;
        const bool crosses = (pa <= k) != (pb <= k);
        if (a_top == b_top && !crosses)
            throw std::invalid_argument("WalledDiagram: horizontal edge {" +
                                        vertex_label(k, a) + "," + vertex_label(k, b) +
                                        "} must cross the wall");
        if (a_top != b_top && crosses)
            throw std::invalid_argument("WalledDiagram: vertical edge {" + vertex_label(k, a) +
                                        "," + vertex_label(k, b) + "} cannot cross the wall");
        match_[static_cast<std::size_t>(a)] = b;
        match_[static_cast<std::size_t>(b)] = a;
    }
}

WalledDiagram WalledDiagram::identity(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int p = 1; p <= 2 * k; ++p) edges.emplace_back(top(k, p), bottom(k, p));
    return WalledDiagram(k, edges);
}

int WalledDiagram::partner(int vertex) const {
    if (vertex < 0 || vertex >= 4 * k_)
        throw std::invalid_argument("WalledDiagram::partner: bad vertex");
    return match_[static_cast<std::size_t>(vertex)];
}

std::vector<std::pair<int, int>> WalledDiagram::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < 4 * k_; ++v) {
        int w = match_[static_cast<std::size_t>(v)];
        if (v < w) out.emplace_back(v, w);
    }
    return out;
}

ComposeResult compose_diagrams(const WalledDiagram& d1, const WalledDiagram& d2) {
    if (d1.k() != d2.k())
        throw std::invalid_argument("compose_diagrams: diagrams have different k");
    const int k = d1.k();
    const int w = 2 * k;

    // Middle row: d1's bottom identified with d2's top, positions 0..2k-1.
    std::vector<bool> mid_used(static_cast<std::size_t>(w), false);
    std::vector<std::pair<int, int>> edges;

    // Walk from a boundary vertex to the opposite end of its path. `layer`
    // 0 means a top vertex of d1, 1 means a bottom vertex of d2; middle
    // states alternate between the two diagrams.
    auto trace = [&](int layer, int pos) -> std::pair<int, int> {
        int via_d1 = (layer == 0);
        int current = pos;
        // First hop from the boundary.
        int next = via_d1 ? d1.partner(current) : d2.partner(w + current);
        for (;;) {
            if (via_d1) {
                if (next < w) return {0, next};  // landed on d1's top row
                int m = next - w;
                mid_used[static_cast<std::size_t>(m)] = true;
                next = d2.partner(m);
                via_d1 = 0;
            } else {
                if (next >= w) return {1, next - w};  // landed on d2's bottom row
                int m = next;
                mid_used[static_cast<std::size_t>(m)] = true;
                next = d1.partner(w + m);
                via_d1 = 1;
            }
        }
    };

    std::vector<bool> done(static_cast<std::size_t>(2 * w), false);
    for (int layer = 0; layer < 2; ++layer) {
        for (int pos = 0; pos < w; ++pos) {
            if (done[static_cast<std::size_t>(layer * w + pos)]) continue;
            auto [elayer, epos] = trace(layer, pos);
            done[static_cast<std::size_t>(layer * w + pos)] = true;
            done[static_cast<std::size_t>(elayer * w + epos)] = true;
            int a = layer == 0 ? pos : w + pos;
            int b = elayer == 0 ? epos : w + epos;
            edges.emplace_back(a, b);
        }
    }

    // Remaining middle vertices lie on closed loops alternating between the
    // two diagrams: their d1 edges stay in d1's bottom row and their d2
    // edges in d2's top row, else the boundary walk above would have
    // reached them.
    int cycles = 0;
    for (int m0 = 0; m0 < w; ++m0) {
        if (mid_used[static_cast<std::size_t>(m0)]) continue;
        ++cycles;
        int m = m0;
        for (;;) {
            mid_used[static_cast<std::size_t>(m)] = true;
            int via_d1 = d1.partner(w + m) - w;  // bottom horizontal of d1
            assert(via_d1 >= 0);
            mid_used[static_cast<std::size_t>(via_d1)] = true;
            int via_d2 = d2.partner(via_d1);  // top horizontal of d2
            assert(via_d2 < w);
            if (via_d2 == m0) break;
            m = via_d2;
        }
    }

    return {cycles, WalledDiagram(k, edges)};
}

WalledDiagram contraction_diagram(int k, int j) {
    if (j < 1 || j > k) throw std::invalid_argument("contraction_diagram: j out of range");
    std::vector<std::pair<int, int>> edges;
    for (int p = 1; p <= 2 * k; ++p) {
        if (p == j || p == k + j) continue;
        edges.emplace_back(WalledDiagram::top(k, p), WalledDiagram::bottom(k, p));
    }
    edges.emplace_back(WalledDiagram::top(k, j), WalledDiagram::top(k, k + j));
    edges.emplace_back(WalledDiagram::bottom(k, j), WalledDiagram::bottom(k, k + j));
    return WalledDiagram(k, edges);
}

bool has_forbidden_pair(const WalledDiagram& d) {
    const int k = d.k();
    for (int i = 1; i <= k; ++i) {
        if (d.partner(WalledDiagram::top(k, i)) == WalledDiagram::top(k, k + i)) return true;
        if (d.partner(WalledDiagram::bottom(k, i)) == WalledDiagram::bottom(k, k + i))
            return true;
    }
    return false;
}

DiagramAlgebraElement::DiagramAlgebraElement(int k, int n) : k_(k), n_(n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("DiagramAlgebraElement: k and n must be >= 1");
}

DiagramAlgebraElement DiagramAlgebraElement::of(const WalledDiagram& d, int n,
                                                const Rat& coeff) {
    DiagramAlgebraElement e(d.k(), n);
    e.add_term(d, coeff);
    return e;
}

Rat DiagramAlgebraElement::coefficient(const WalledDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rat(0) : it->second;
}

void DiagramAlgebraElement::add_term(const WalledDiagram& d, const Rat& coeff) {
    if (d.k() != k_) throw std::invalid_argument("DiagramAlgebraElement: k mismatch");
    auto [it, inserted] = terms_.emplace(d, coeff);
    if (!inserted) it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

DiagramAlgebraElement& DiagramAlgebraElement::operator+=(const DiagramAlgebraElement& other) {
    if (other.k_ != k_ || other.n_ != n_)
        throw std::invalid_argument("DiagramAlgebraElement: parameter mismatch");
    for (const auto& [d, c] : other.terms_) add_term(d, c);
    return *this;
}

DiagramAlgebraElement& DiagramAlgebraElement::operator-=(const DiagramAlgebraElement& other) {
    if (other.k_ != k_ || other.n_ != n_)
        throw std::invalid_argument("DiagramAlgebraElement: parameter mismatch");
    for (const auto& [d, c] : other.terms_) add_term(d, -c);
    return *this;
}

DiagramAlgebraElement& DiagramAlgebraElement::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [d, c] : terms_) c *= scalar;
    }
    return *this;
}

DiagramAlgebraElement operator+(DiagramAlgebraElement a, const DiagramAlgebraElement& b) {
    a += b;
    return a;
}

DiagramAlgebraElement operator-(DiagramAlgebraElement a, const DiagramAlgebraElement& b) {
    a -= b;
    return a;
}

DiagramAlgebraElement operator*(const Rat& s, DiagramAlgebraElement a) {
    a *= s;
    return a;
}

DiagramAlgebraElement multiply(const DiagramAlgebraElement& a, const DiagramAlgebraElement& b) {
    if (a.k() != b.k() || a.n() != b.n())
        throw std::invalid_argument("multiply: parameter mismatch");
    DiagramAlgebraElement out(a.k(), a.n());
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            auto [cycles, d] = compose_diagrams(da, db);
            out.add_term(d, ca * cb * int_pow(a.n(), static_cast<unsigned>(cycles)));
        }
    }
    return out;
}

DiagramAlgebraElement b_idempotent(int k, int n) {
    DiagramAlgebraElement b = DiagramAlgebraElement::of(WalledDiagram::identity(k), n);
    const Rat inv_n = make_rat(1, n);
    for (int j = 1; j <= k; ++j) {
        DiagramAlgebraElement factor =
            DiagramAlgebraElement::of(WalledDiagram::identity(k), n);
        factor.add_term(contraction_diagram(k, j), -inv_n);
        b = multiply(b, factor);
    }
    return b;
}

namespace {

// Endpoint relabeling of the two flips applied in order.
int flip_vertex(int k, int v) {
    const int w = 2 * k;
    bool is_top = v < w;
    int pos = (is_top ? v : v - w) + 1;
    // Flip 1: interchange the rightmost k dots of the two rows.
    if (pos > k) is_top = !is_top;
    // Flip 2: switch dots across the wall in the (new) top row.
    if (is_top) pos = pos > k ? pos - k : pos + k;
    return is_top ? pos - 1 : w + pos - 1;
}

// The flips undone: each is a swap, so the inverse applies them in reverse
// order.
int unflip_vertex(int k, int v) {
    const int w = 2 * k;
    bool is_top = v < w;
    int pos = (is_top ? v : v - w) + 1;
    if (is_top) pos = pos > k ? pos - k : pos + k;
    if (pos > k) is_top = !is_top;
    return is_top ? pos - 1 : w + pos - 1;
}

}  // namespace

Permutation flip_to_permutation(const WalledDiagram& d) {
    const int k = d.k();
    const int w = 2 * k;
    std::vector<int> images(static_cast<std::size_t>(w), 0);
    for (auto [a, b] : d.edges()) {
        int fa = flip_vertex(k, a);
        int fb = flip_vertex(k, b);
        if (fa > fb) std::swap(fa, fb);
        // fa is a top vertex, fb a bottom vertex: the flips straighten every
        // edge.
        images[static_cast<std::size_t>(fa)] = fb - w + 1;
    }
    return Permutation::from_images(std::move(images));
}

WalledDiagram diagram_from_permutation(const Permutation& sigma) {
    if (sigma.degree() % 2 != 0 || sigma.degree() == 0)
        throw std::invalid_argument("diagram_from_permutation: degree must be even");
    const int k = sigma.degree() / 2;
    const int w = 2 * k;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= w; ++i)
        edges.emplace_back(unflip_vertex(k, i - 1), unflip_vertex(k, w + sigma(i) - 1));
    return WalledDiagram(k, edges);
}

std::vector<WalledDiagram> enumerate_diagrams(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_diagrams: k must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(2 * k));
    std::iota(images.begin(), images.end(), 1);
    std::vector<WalledDiagram> out;
    do {
        out.push_back(diagram_from_permutation(Permutation::from_images(images)));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

int sandwich_basis_rank(int k, int n) {
    const auto all = enumerate_diagrams(k);
    std::map<WalledDiagram, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);

    const auto b = b_idempotent(k, n);
    std::vector<std::vector<Rat>> rows;
    for (const auto& d : all) {
        if (has_forbidden_pair(d)) continue;
        auto bdb = multiply(multiply(b, DiagramAlgebraElement::of(d, n)), b);
        std::vector<Rat> row(all.size(), Rat(0));
        for (const auto& [dd, c] : bdb.terms()) row[index.at(dd)] = c;
        rows.push_back(std::move(row));
    }
    return rank_exact(std::move(rows));
}

nlohmann::ordered_json diagram_to_json(const WalledDiagram& d) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [a, b] : d.edges())
        edges.push_back({vertex_label(d.k(), a), vertex_label(d.k(), b)});
    return {{"k", d.k()}, {"edges", edges}};
}

WalledDiagram diagram_from_json(const nlohmann::json& doc) {
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw std::invalid_argument("diagram_from_json: missing integer field 'k'");
    const int k = doc["k"].get<int>();
    if (k < 1) throw std::invalid_argument("diagram_from_json: k must be >= 1");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw std::invalid_argument("diagram_from_json: missing array field 'edges'");

    auto parse_vertex = [k](const std::string& label) {
        if (label.size() < 2 || (label[0] != 'T' && label[0] != 'B'))
            throw std::invalid_argument("diagram_from_json: bad vertex label '" + label + "'");
        int pos = 0;
        try {
            pos = std::stoi(label.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("diagram_from_json: bad vertex label '" + label + "'");
        }
        if (pos < 1 || pos > 2 * k)
            throw std::invalid_argument("diagram_from_json: vertex '" + label +
                                        "' out of range for k=" + std::to_string(k));
        return label[0] == 'T' ? WalledDiagram::top(k, pos) : WalledDiagram::bottom(k, pos);
    };

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument(
                "diagram_from_json: each edge must be a pair of vertex labels");
        edges.emplace_back(parse_vertex(e[0].get<std::string>()),
                           parse_vertex(e[1].get<std::string>()));
    }
    return WalledDiagram(k, edges);
}

}  // namespace sln
