#pragma once

#include <gmpxx.h>

namespace hsmf {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// Kernel dimensions and ranks are computed over Q, never in floating point.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize fractions built from raw numerator and
// denominator; this helper does.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace hsmf
