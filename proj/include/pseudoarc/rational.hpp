#pragma once

#include <gmpxx.h>

#include <string>

namespace pseudoarc {

using Q = mpq_class;
using Z = mpz_class;

// "num/den" always, also for integers.
std::string qstr(const Q& q);
// Accepts "a", "-a", "a/b".
Q parse_q(const std::string& s);

// canonical a/b; plain Q(a, b) is not reduced
Q frac(const Z& a, const Z& b);

Q qabs(const Q& q);
Q qmin(const Q& a, const Q& b);
Q qmax(const Q& a, const Q& b);
Z floor_q(const Q& q);
Z ceil_q(const Q& q);

}  // namespace pseudoarc
