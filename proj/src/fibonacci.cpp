#include "ncpath/fibonacci.hpp"

#include <stdexcept>
#include <string>

namespace ncpath {

mpz_class fib(long m) {
  if (m < -1)
    throw std::domain_error("fib: index " + std::to_string(m) + " below -1");
  if (m == -1) return 1;
  mpz_class a = 0, b = 1;  // F_0, F_1
  for (long i = 0; i < m; ++i) {
    a += b;      // F_{i+2}
    swap(a, b);  // (F_{i+1}, F_{i+2})
  }
  return a;
}

bool catalan_fib_identity(long m, long i) {
  if (i < 0 || m - i < -1 || m + i < -1)
    throw std::domain_error("catalan_fib_identity: indices out of range");
  mpz_class fm = fib(m);
  mpz_class fi = fib(i);
  mpz_class lhs = fm * fm - fib(m + i) * fib(m - i);
  mpz_class rhs = fi * fi;
  if ((m - i) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace ncpath
