#pragma once

#include "tubal/rng.hpp"
#include "tubal/tensor3.hpp"

namespace tubal::testing {

inline Tensor3 random_tensor(std::int64_t n1, std::int64_t n2, std::int64_t n3,
                             std::uint64_t seed) {
  Rng rng(seed);
  Tensor3 x(n1, n2, n3);
  for (double& v : x.data()) v = rng.normal();
  return x;
}

inline std::int64_t random_dim(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng.next_u64() %
                                        static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace tubal::testing
