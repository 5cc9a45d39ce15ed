#include "valfrob/int_linalg.hpp"

#include <algorithm>

#include "valfrob/errors.hpp"

namespace valfrob {

namespace {

std::size_t rows_of(const ZMatrix& m) { return m.size(); }
std::size_t cols_of(const ZMatrix& m) { return m.empty() ? 0 : m[0].size(); }

}  // namespace

std::vector<std::vector<mpz_class>> integer_kernel_basis(const ZMatrix& m) {
  std::size_t rows = rows_of(m), cols = cols_of(m);
  ZMatrix w = m;                      // rows x cols, reduced in place
  ZMatrix u(cols, std::vector<mpz_class>(cols, 0));  // tracks column ops
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(w[r][a], w[r][b]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][a], u[r][b]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    // col_dst -= q * col_src
    for (std::size_t r = 0; r < rows; ++r) w[r][dst] -= q * w[r][src];
    for (std::size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
  };
  auto col_negate = [&](std::size_t c) {
    for (std::size_t r = 0; r < rows; ++r) w[r][c] = -w[r][c];
    for (std::size_t r = 0; r < cols; ++r) u[r][c] = -u[r][c];
  };

  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
    // gcd out the row tail onto pivot_col via euclidean column ops
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot_col; c < cols; ++c)
        if (w[r][c] != 0 && (best == cols || abs(w[r][c]) < abs(w[r][best]))) best = c;
      if (best == cols) break;  // row tail is all zero
      col_swap(pivot_col, best);
      if (w[r][pivot_col] < 0) col_negate(pivot_col);
      bool cleared = true;
      for (std::size_t c = pivot_col + 1; c < cols; ++c) {
        if (w[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w[r][c].get_mpz_t(), w[r][pivot_col].get_mpz_t());
        col_axpy(c, pivot_col, q);
        if (w[r][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (w[r][pivot_col] != 0) ++pivot_col;
  }

  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t c = pivot_col; c < cols; ++c) {
    std::vector<mpz_class> v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ZMatrix& m) {
  std::size_t cols = cols_of(m);
  return cols - integer_kernel_basis(m).size();
}

mpz_class abs_det(const ZMatrix& m) {
  std::size_t n = rows_of(m);
  if (n == 0) return 1;
  if (cols_of(m) != n) throw DomainError("determinant of a non-square matrix");
  // Bareiss fraction-free elimination
  ZMatrix a = m;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      // row swap flips the sign; irrelevant for |det|
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return abs(a[n - 1][n - 1]);
}

std::optional<std::vector<mpz_class>> solve_integer(const ZMatrix& basis_cols,
                                                    const std::vector<mpz_class>& v) {
  std::size_t rows = rows_of(basis_cols);
  std::size_t cols = cols_of(basis_cols);
  if (v.size() != rows) throw DomainError("dimension mismatch in lattice solve");
  // Exact Gaussian elimination over Q on the augmented system.
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = basis_cols[r][c];
    a[r][cols] = v[r];
  }
  std::size_t lead = 0;
  std::vector<std::size_t> pivot_of_col(cols, rows);
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = lead; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[lead], a[piv]);
    mpq_class d = a[lead][c];
    for (std::size_t j = c; j <= cols; ++j) a[lead][j] /= d;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t j = c; j <= cols; ++j) a[r][j] -= f * a[lead][j];
    }
    pivot_of_col[c] = lead;
    ++lead;
  }
  // consistency: zero rows must have zero rhs
  for (std::size_t r = lead; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  std::vector<mpz_class> out(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] == rows) continue;  // free column: takes value 0
    mpq_class x = a[pivot_of_col[c]][cols];
    if (x.get_den() != 1) return std::nullopt;  // not an integer point
    out[c] = x.get_num();
  }
  return out;
}

}  // namespace valfrob
