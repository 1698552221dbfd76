#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace resonaut {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = std::vector<int>;

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, long long cols = -1);

/// Columns form a Z-basis of {v in Z^cols : A v = 0}; computed by unimodular column
/// operations on [A; I] followed by pairwise size reduction. Throws on int64 overflow.
IntMatrix integer_kernel(const IntMatrix& A);

/// A kills every kernel column of B and vice versa, i.e. the integer kernels coincide.
bool kernels_coincide(const IntMatrix& A, const IntMatrix& B);

IntVector mat_apply(const IntMatrix& A, const IntVector& v);
bool in_kernel(const IntMatrix& A, const IntVector& v);

/// Bracketed rows, e.g. "[1, -1, 0]" per line.
std::string format_matrix(const IntMatrix& A);

}  // namespace resonaut
