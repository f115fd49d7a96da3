#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sln/bigint.hpp"
#include "sln/partitions.hpp"

namespace sln {

// Multiplicity of the irreducible summand labelled (lambda, mu) in the k-th
// tensor power of the adjoint module, valid in the stable range n >= 2k:
//
//   f^lambda f^mu sum_{j=0}^{k-r} (-1)^j C(k,j) C(k-j,r)^2 (k-r-j)!
//
// with r = |lambda| = |mu|. The value is a pure function of (k, lambda, mu);
// callers owe the n >= 2k caveat to their users. Throws when |lambda| !=
// |mu|; returns 0 when r > k.
Int multiplicity(int k, const Partition& lambda, const Partition& mu);

// Same contract, evaluated independently through hook products:
//
//   (1 / (h(lambda) h(mu))) sum_{j=0}^{k-r} (-1)^j k! (k-j)! / (j! (k-r-j)!)
Int multiplicity_hook_form(int k, const Partition& lambda, const Partition& mu);

struct TableEntry {
    Partition lambda;
    Partition mu;
    Int value;
};

// All pairs with |lambda| = |mu| = r <= k, r ascending, partitions in
// decreasing lexicographic order (row-major lambda, then mu).
struct MultiplicityTable {
    int k = 0;
    std::vector<TableEntry> entries;

    // Throws if the pair is absent.
    const Int& value(const Partition& lambda, const Partition& mu) const;
};

MultiplicityTable full_table(int k);

// Sum of squared table entries; equals D_{2k} (the dimension of the
// centralizer algebra).
Int checksum_sum_of_squares(int k);

// multiplicity(k, {}, {}); equals D_k.
Int invariants_dimension(int k);

// multiplicity(k, (1), (1)); equals D_{k+1}.
Int adjoint_multiplicity(int k);

// Rows lambda, columns mu, one block per r, blocks separated by blank lines.
std::string table_to_csv(const MultiplicityTable& table);

// [{"lambda": ..., "mu": ..., "r": ..., "multiplicity": "<decimal>"}, ...]
nlohmann::ordered_json table_to_json(const MultiplicityTable& table);

}  // namespace sln
