#include "sln/multiplicity.hpp"

#include <stdexcept>

namespace sln {

namespace {

void check_pair(int k, const Partition& lambda, const Partition& mu) {
    if (k < 0) throw std::invalid_argument("multiplicity: k must be >= 0");
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument(
            "multiplicity: highest weight of the adjoint tensor power requires "
            "|lambda| = |mu|");
}

}  // namespace

Int multiplicity(int k, const Partition& lambda, const Partition& mu) {
    check_pair(k, lambda, mu);
    const int r = lambda.sum();
    if (r > k) return 0;
    const auto uk = static_cast<unsigned>(k);
    const auto ur = static_cast<unsigned>(r);
    Int sum = 0;
    for (unsigned j = 0; j <= uk - ur; ++j) {
        Int c = binomial(uk - j, ur);
        Int term = binomial(uk, j) * c * c * factorial(uk - ur - j);
        sum += (j % 2 == 0) ? term : -term;
    }
    return num_standard_tableaux(lambda) * num_standard_tableaux(mu) * sum;
}

Int multiplicity_hook_form(int k, const Partition& lambda, const Partition& mu) {
    check_pair(k, lambda, mu);
    const int r = lambda.sum();
    if (r > k) return 0;
    const auto uk = static_cast<unsigned>(k);
    const auto ur = static_cast<unsigned>(r);
    Int sum = 0;
    for (unsigned j = 0; j <= uk - ur; ++j) {
        // k!/j! and (k-j)!/(k-r-j)! are both integer falling factorials.
        Int term = (factorial(uk) / factorial(j)) *
                   (factorial(uk - j) / factorial(uk - ur - j));
        sum += (j % 2 == 0) ? term : -term;
    }
    Int denom = hook_product(lambda) * hook_product(mu);
    if (sum % denom != 0)
        throw std::logic_error("multiplicity_hook_form: non-integral result");
    return sum / denom;
}

const Int& MultiplicityTable::value(const Partition& lambda, const Partition& mu) const {
    for (const auto& e : entries)
        if (e.lambda == lambda && e.mu == mu) return e.value;
    throw std::invalid_argument("MultiplicityTable::value: pair (" + lambda.to_string() +
                                ") x (" + mu.to_string() + ") not in table");
}

MultiplicityTable full_table(int k) {
    if (k < 1) throw std::invalid_argument("full_table: k must be >= 1");
    MultiplicityTable table;
    table.k = k;
    for (int r = 0; r <= k; ++r) {
        const auto shapes = enumerate_partitions(r);
        for (const auto& lambda : shapes)
            for (const auto& mu : shapes)
                table.entries.push_back({lambda, mu, multiplicity(k, lambda, mu)});
    }
    return table;
}

Int checksum_sum_of_squares(int k) {
    Int sum = 0;
    for (const auto& e : full_table(k).entries) sum += e.value * e.value;
    return sum;
}

Int invariants_dimension(int k) { return multiplicity(k, Partition{}, Partition{}); }

Int adjoint_multiplicity(int k) {
    const Partition box({1});
    return multiplicity(k, box, box);
}

std::string table_to_csv(const MultiplicityTable& table) {
    std::string out;
    for (int r = 0; r <= table.k; ++r) {
        if (r > 0) out += "\n";
        const auto shapes = enumerate_partitions(r);
        out += "r=" + std::to_string(r);
        for (const auto& mu : shapes) out += ",\"" + mu.to_string() + "\"";
        out += "\n";
        for (const auto& lambda : shapes) {
            out += "\"" + lambda.to_string() + "\"";
            for (const auto& mu : shapes)
                out += "," + to_decimal(table.value(lambda, mu));
            out += "\n";
        }
    }
    return out;
}

nlohmann::ordered_json table_to_json(const MultiplicityTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : table.entries) {
        rows.push_back({{"lambda", e.lambda.to_string()},
                        {"mu", e.mu.to_string()},
                        {"r", e.lambda.sum()},
                        {"multiplicity", to_decimal(e.value)}});
    }
    return rows;
}

}  // namespace sln
