#pragma once

// In-place binomial-factor kernels on dense coefficient buffers. Each acts on the
// first `len` entries and is exact modulo q^len. They are the O(N) building blocks
// of the Eulerian-sum builders, which would otherwise need a full convolution per term.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace stacklab::detail {

// buf *= (1 - q^k)
inline void mul_one_minus(std::vector<mpz_class>& buf, std::size_t k, std::size_t len) {
  for (std::size_t i = len; i-- > k;) buf[i] -= buf[i - k];
}

// buf *= (1 + q^k)
inline void mul_one_plus(std::vector<mpz_class>& buf, std::size_t k, std::size_t len) {
  for (std::size_t i = len; i-- > k;) buf[i] += buf[i - k];
}

// buf /= (1 - q^k), k >= 1
inline void div_one_minus(std::vector<mpz_class>& buf, std::size_t k, std::size_t len) {
  for (std::size_t i = k; i < len; ++i) buf[i] += buf[i - k];
}

// buf /= (1 + q^k), k >= 1
inline void div_one_plus(std::vector<mpz_class>& buf, std::size_t k, std::size_t len) {
  for (std::size_t i = k; i < len; ++i) buf[i] -= buf[i - k];
}

}  // namespace stacklab::detail
