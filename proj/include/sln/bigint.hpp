#pragma once

#include <gmpxx.h>

#include <string>

namespace sln {

// Exact arithmetic used throughout: arbitrary-precision integers and
// canonical rationals. Everything downstream is bit-exact; there are no
// tolerances anywhere in this library.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned n);

// Zero when k > n.
Int binomial(unsigned n, unsigned k);

Int int_pow(const Int& base, unsigned exp);

// num/den in lowest terms; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

std::string to_decimal(const Int& v);
std::string to_decimal(const Rat& v);

}  // namespace sln
