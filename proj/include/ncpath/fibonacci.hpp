#pragma once

#include <gmpxx.h>

namespace ncpath {

// Fibonacci numbers F_0 = 0, F_1 = 1, F_m = F_{m-1} + F_{m-2}, extended
// backward by one index only: F_{-1} = 1. Smaller indices are rejected.
mpz_class fib(long m);

// Checks the Catalan identity F_m^2 - F_{m+i} F_{m-i} = (-1)^{m-i} F_i^2
// in exact arithmetic. Requires i >= 0, m - i >= -1, m + i >= -1.
bool catalan_fib_identity(long m, long i);

}  // namespace ncpath
