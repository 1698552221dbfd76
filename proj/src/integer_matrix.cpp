#include "resonaut/integer_matrix.hpp"

#include "resonaut/exactnum.hpp"

#include <cstdlib>
#include <utility>

namespace resonaut {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw StructuralError("integer overflow in lattice computation");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw StructuralError("integer overflow in lattice computation");
  return r;
}

// col_j -= q * col_i over all rows.
void col_axpy(IntMatrix& M, Eigen::Index j, Eigen::Index i, long long q) {
  if (q == 0) return;
  for (Eigen::Index r = 0; r < M.rows(); ++r) M(r, j) = checked_sub(M(r, j), checked_mul(q, M(r, i)));
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long round_div(long long a, long long b) {
  // nearest integer to a/b, b > 0
  return floor_div(2 * a + b, 2 * b);
}

long long squared_norm(const IntMatrix& M, Eigen::Index c) {
  long long s = 0;
  for (Eigen::Index r = 0; r < M.rows(); ++r) s += checked_mul(M(r, c), M(r, c));
  return s;
}

long long dot(const IntMatrix& M, Eigen::Index a, Eigen::Index b) {
  long long s = 0;
  for (Eigen::Index r = 0; r < M.rows(); ++r) s += checked_mul(M(r, a), M(r, b));
  return s;
}

}  // namespace

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, long long cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<long long>(rows[0].size());
  IntMatrix M(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<long long>(rows[r].size()) != cols) throw StructuralError("ragged matrix rows");
    for (long long c = 0; c < cols; ++c) M(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
  }
  return M;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  IntMatrix W(m + n, n);
  W.topRows(m) = A;
  W.bottomRows(n) = IntMatrix::Identity(n, n);

  // Column echelon form of the top block by Euclid on column pairs.
  Eigen::Index pivot_col = 0;
  for (Eigen::Index r = 0; r < m && pivot_col < n; ++r) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index c = pivot_col; c < n; ++c)
        if (W(r, c) != 0 && (best < 0 || std::llabs(W(r, c)) < std::llabs(W(r, best)))) best = c;
      if (best < 0) break;
      if (best != pivot_col) W.col(best).swap(W.col(pivot_col));
      bool done = true;
      for (Eigen::Index c = pivot_col + 1; c < n; ++c) {
        if (W(r, c) == 0) continue;
        col_axpy(W, c, pivot_col, floor_div(W(r, c), W(r, pivot_col)));
        if (W(r, c) != 0) done = false;
      }
      if (done) {
        ++pivot_col;
        break;
      }
    }
  }

  IntMatrix K = W.bottomRows(n).rightCols(n - pivot_col);
  // Pairwise size reduction keeps the entries small.
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (Eigen::Index i = 0; i < K.cols(); ++i)
      for (Eigen::Index j = 0; j < K.cols(); ++j) {
        if (i == j) continue;
        long long ni = squared_norm(K, i);
        if (ni == 0) continue;
        long long q = round_div(dot(K, j, i), ni);
        if (q == 0) continue;
        long long before = squared_norm(K, j);
        IntMatrix trial = K;
        col_axpy(trial, j, i, q);
        if (squared_norm(trial, j) < before) {
          K = std::move(trial);
          changed = true;
        }
      }
  }
  return K;
}

bool kernels_coincide(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols() != B.cols()) return false;
  IntMatrix ka = integer_kernel(A), kb = integer_kernel(B);
  if (ka.cols() != kb.cols()) return false;
  return (A * kb).isZero() && (B * ka).isZero();
}

IntVector mat_apply(const IntMatrix& A, const IntVector& v) {
  if (static_cast<Eigen::Index>(v.size()) != A.cols()) throw StructuralError("vector length does not match matrix");
  IntVector out(static_cast<std::size_t>(A.rows()), 0);
  for (Eigen::Index r = 0; r < A.rows(); ++r) {
    long long s = 0;
    for (Eigen::Index c = 0; c < A.cols(); ++c) s += A(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = static_cast<int>(s);
  }
  return out;
}

bool in_kernel(const IntMatrix& A, const IntVector& v) {
  for (int x : mat_apply(A, v))
    if (x) return false;
  return true;
}

std::string format_matrix(const IntMatrix& A) {
  std::string out;
  for (Eigen::Index r = 0; r < A.rows(); ++r) {
    out += "[";
    for (Eigen::Index c = 0; c < A.cols(); ++c) {
      if (c) out += ", ";
      out += std::to_string(A(r, c));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace resonaut
