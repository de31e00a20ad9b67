#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace hallforge {

/// Prime field F_q.
class Fq {
 public:
  explicit Fq(int q);

  int q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    int s = a + b;
    return static_cast<std::uint8_t>(s >= q_ ? s - q_ : s);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>(a >= b ? a - b : a + q_ - b);
  }
  std::uint8_t neg(std::uint8_t a) const { return static_cast<std::uint8_t>(a ? q_ - a : 0); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a * b) % q_); }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t from_int(long x) const {
    long r = x % q_;
    return static_cast<std::uint8_t>(r < 0 ? r + q_ : r);
  }
  /// Generator of the multiplicative group.
  std::uint8_t primitive_root() const { return root_; }

 private:
  int q_;
  std::uint8_t root_ = 1;
  std::vector<std::uint8_t> inv_;
};

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

  std::uint8_t& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  std::uint8_t operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  bool is_zero() const;
  static Matrix identity(int n);

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

Matrix mul(const Fq& f, const Matrix& a, const Matrix& b);
Matrix add(const Fq& f, const Matrix& a, const Matrix& b);
Matrix sub(const Fq& f, const Matrix& a, const Matrix& b);
Matrix scale(const Fq& f, std::uint8_t c, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
/// Rows [r0, r0+nr) and columns [c0, c0+nc).
Matrix submatrix(const Matrix& a, int r0, int nr, int c0, int nc);
void set_block(Matrix& dst, int r0, int c0, const Matrix& src);

struct Echelon {
  Matrix m;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};
Echelon rref(const Fq& f, Matrix a);
int rank(const Fq& f, const Matrix& a);
/// Columns form a basis of {x : a x = 0}.
Matrix nullspace(const Fq& f, const Matrix& a);
/// Rows form a basis of {y : y a = 0}.
Matrix left_nullspace(const Fq& f, const Matrix& a);
/// Columns form a basis of the column space of a (a maximal independent subset of its columns).
Matrix column_basis(const Fq& f, const Matrix& a);
/// Standard basis vectors completing the column space of a full-rank basis to F_q^n.
Matrix complement_basis(const Fq& f, const Matrix& basis);
/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Fq& f, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Fq& f, const Matrix& a);
bool is_invertible(const Fq& f, const Matrix& a);

}  // namespace hallforge
