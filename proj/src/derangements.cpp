#include "sln/derangements.hpp"

namespace sln {

Int derangement_incl_excl(unsigned k) {
    // Evaluate sum_{j} (-1)^j k!/j! with the partial quotients k!/j! built
    // from the top down, all integer.
    Int term = 1;  // k!/k!
    Int total = 0;
    int sign = (k % 2 == 0) ? 1 : -1;
    for (unsigned j = k;; --j) {
        total += sign * term;
        sign = -sign;
        if (j == 0) break;
        term *= j;  // k!/(j-1)! = j * k!/j!
    }
    return total;
}

Int derangement_recurrence(unsigned k) {
    Int prev = 1;  // D_0
    Int cur = 0;   // D_1
    if (k == 0) return prev;
    for (unsigned m = 1; m < k; ++m) {
        Int next = m * (cur + prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace sln
