#include "sln/exact_linalg.hpp"

#include <cassert>

namespace sln {

int rank_exact_int(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t nrows = m.size();
    const std::size_t ncols = m[0].size();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Int num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                assert(num % prev == 0);
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_exact(std::vector<std::vector<Rat>> rows) {
    std::vector<std::vector<Int>> scaled(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Int lcm = 1;
        for (const auto& q : rows[i])
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        scaled[i].reserve(rows[i].size());
        for (const auto& q : rows[i])
            scaled[i].push_back(q.get_num() * (lcm / q.get_den()));
    }
    return rank_exact_int(std::move(scaled));
}

}  // namespace sln
