#pragma once

#include <vector>

#include "tubal/tensor3.hpp"

namespace tubal {

enum class TsvdMode { full, skinny };

// Skinny t-SVD triple X = U * S * V^T with U: n1 x r x n3, S: r x r x n3
// F-diagonal, V: n2 x r x n3. U and V have orthonormal lateral slices;
// the diagonal of S's first frontal slice is nonnegative and nonincreasing.
struct TSvdFactors {
  Tensor3 u;
  Tensor3 s;
  Tensor3 v;
  std::int64_t r = 0;
};

// Per-Fourier-slice singular values: tubes[i][k] = sigma_i(Xbar^(k)), each
// slice sorted nonincreasing in i.
struct SingularTubes {
  std::vector<std::vector<double>> tubes;
};

// t-product via the Fourier path (slice-wise products of the mode-3 DFTs);
// equals fold(bcirc(a) * unfold(b)).
Tensor3 tprod(const Tensor3& a, const Tensor3& b);

TSvdFactors tsvd(const Tensor3& x, TsvdMode mode = TsvdMode::skinny);

// number of tubes whose max Fourier-domain singular value exceeds tol;
// tol < 0 selects the default 1e-10 * (largest singular value).
std::int64_t tubal_rank(const Tensor3& x, double tol = -1.0);

// tensor nuclear norm, computed as (1/n3) * sum of slice nuclear norms
double tnn(const Tensor3& x);

// nuclear norm via the skinny t-SVD first-slice diagonal; agrees with tnn()
// to round-off and exists as the second route of the dual-formula check
double tnn_tsvd_path(const Tensor3& x);

// proximal operator of tau*||.||_tnn: soft-thresholds the singular values of
// every Fourier slice at level tau
Tensor3 tsvt(const Tensor3& y, double tau);

SingularTubes singular_tubes(const Tensor3& x);

// best tubal-rank-r approximation: keeps the top r singular values of every
// Fourier slice (no-op when r >= tubal_rank(x))
Tensor3 truncate_tubal_rank(const Tensor3& x, std::int64_t r);

}  // namespace tubal
