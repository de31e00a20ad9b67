#include "hallforge/fq.hpp"

#include <algorithm>

#include "hallforge/error.hpp"

namespace hallforge {

Fq::Fq(int q) : q_(q) {
  if (q < 2 || q > 13) throw ConfigError("field size must be a small prime, got " + std::to_string(q));
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw ConfigError("field size must be prime, got " + std::to_string(q));
  inv_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (a * b % q == 1) inv_[a] = static_cast<std::uint8_t>(b);
  for (int g = 1; g < q; ++g) {
    int x = 1, order = 0;
    do {
      x = x * g % q;
      ++order;
    } while (x != 1);
    if (order == q - 1) {
      root_ = static_cast<std::uint8_t>(g);
      break;
    }
  }
}

std::uint8_t Fq::inv(std::uint8_t a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  return inv_[a];
}

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](std::uint8_t x) { return x == 0; });
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix mul(const Fq& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw InternalError("matrix shape mismatch in product");
  Matrix c(a.rows, b.cols);
  const int q = f.q();
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      int s = 0;
      for (int k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
      c(i, j) = static_cast<std::uint8_t>(s % q);
    }
  return c;
}

Matrix add(const Fq& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InternalError("matrix shape mismatch in sum");
  Matrix c(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = f.add(a.data[i], b.data[i]);
  return c;
}

Matrix sub(const Fq& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InternalError("matrix shape mismatch in difference");
  Matrix c(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = f.sub(a.data[i], b.data[i]);
  return c;
}

Matrix scale(const Fq& f, std::uint8_t s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data) x = f.mul(s, x);
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw InternalError("hstack row mismatch");
  Matrix c(a.rows, a.cols + b.cols);
  set_block(c, 0, 0, a);
  set_block(c, 0, a.cols, b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw InternalError("vstack column mismatch");
  Matrix c(a.rows + b.rows, a.cols);
  set_block(c, 0, 0, a);
  set_block(c, a.rows, 0, b);
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows + b.rows, a.cols + b.cols);
  set_block(c, 0, 0, a);
  set_block(c, a.rows, a.cols, b);
  return c;
}

Matrix submatrix(const Matrix& a, int r0, int nr, int c0, int nc) {
  Matrix s(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) s(i, j) = a(r0 + i, c0 + j);
  return s;
}

void set_block(Matrix& dst, int r0, int c0, const Matrix& src) {
  for (int i = 0; i < src.rows; ++i)
    for (int j = 0; j < src.cols; ++j) dst(r0 + i, c0 + j) = src(i, j);
}

Echelon rref(const Fq& f, Matrix a) {
  Echelon e;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int piv = -1;
    for (int r = row; r < a.rows; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < a.cols; ++c) std::swap(a(piv, c), a(row, c));
    std::uint8_t s = f.inv(a(row, col));
    for (int c = col; c < a.cols; ++c) a(row, c) = f.mul(s, a(row, c));
    for (int r = 0; r < a.rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      std::uint8_t m = a(r, col);
      for (int c = col; c < a.cols; ++c) a(r, c) = f.sub(a(r, c), f.mul(m, a(row, c)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.m = std::move(a);
  return e;
}

int rank(const Fq& f, const Matrix& a) {
  if (a.rows == 0 || a.cols == 0) return 0;
  return static_cast<int>(rref(f, a).pivots.size());
}

Matrix nullspace(const Fq& f, const Matrix& a) {
  Echelon e = rref(f, a);
  std::vector<bool> is_pivot(a.cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  int nfree = a.cols - static_cast<int>(e.pivots.size());
  Matrix n(a.cols, nfree);
  int k = 0;
  for (int c = 0; c < a.cols; ++c) {
    if (is_pivot[c]) continue;
    n(c, k) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) n(e.pivots[r], k) = f.neg(e.m(static_cast<int>(r), c));
    ++k;
  }
  return n;
}

Matrix left_nullspace(const Fq& f, const Matrix& a) { return transpose(nullspace(f, transpose(a))); }

Matrix column_basis(const Fq& f, const Matrix& a) {
  Echelon e = rref(f, a);
  Matrix b(a.rows, static_cast<int>(e.pivots.size()));
  for (size_t k = 0; k < e.pivots.size(); ++k)
    for (int r = 0; r < a.rows; ++r) b(r, static_cast<int>(k)) = a(r, e.pivots[k]);
  return b;
}

Matrix complement_basis(const Fq& f, const Matrix& basis) {
  int n = basis.rows;
  std::vector<bool> is_pivot(n, false);
  if (basis.cols > 0)
    for (int p : rref(f, transpose(basis)).pivots) is_pivot[p] = true;
  int k = 0;
  for (int i = 0; i < n; ++i) k += is_pivot[i] ? 0 : 1;
  Matrix c(n, k);
  int j = 0;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) c(i, j++) = 1;
  return c;
}

std::optional<Matrix> solve(const Fq& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw InternalError("solve shape mismatch");
  Echelon e = rref(f, hstack(a, b));
  for (int p : e.pivots)
    if (p >= a.cols) return std::nullopt;
  Matrix x(a.cols, b.cols);
  for (size_t r = 0; r < e.pivots.size(); ++r)
    for (int j = 0; j < b.cols; ++j) x(e.pivots[r], j) = e.m(static_cast<int>(r), a.cols + j);
  return x;
}

std::optional<Matrix> inverse(const Fq& f, const Matrix& a) {
  if (a.rows != a.cols) return std::nullopt;
  if (rank(f, a) != a.rows) return std::nullopt;
  return solve(f, a, Matrix::identity(a.rows));
}

bool is_invertible(const Fq& f, const Matrix& a) { return a.rows == a.cols && rank(f, a) == a.rows; }

}  // namespace hallforge
