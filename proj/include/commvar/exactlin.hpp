#ifndef COMMVAR_EXACTLIN_HPP
#define COMMVAR_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace commvar::exactlin {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using Dim = std::size_t;

/// Dense row-major matrix over the rationals.
class RatMat {
public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols);
  RatMat(std::initializer_list<std::initializer_list<long>> rows);

  static RatMat identity(std::size_t n);
  static RatMat zero(std::size_t rows, std::size_t cols) { return RatMat(rows, cols); }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RatMat from_columns(const std::vector<RatVec>& columns, std::size_t rows);
  static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  /// Row-major view of all entries.
  const RatVec& entries() const { return data_; }

  bool is_zero() const;
  RatMat transpose() const;
  RatMat block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMat& b);
  Rat trace() const;

  RatMat& operator+=(const RatMat& o);
  RatMat& operator-=(const RatMat& o);
  RatMat& operator*=(const Rat& s);

  friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
  friend RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }
  friend RatMat operator*(RatMat a, const Rat& s) { return a *= s; }
  friend RatMat operator*(const Rat& s, RatMat a) { return a *= s; }
  friend RatMat operator-(RatMat a) { return a *= Rat(-1); }
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat& a, const RatMat& b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatVec data_;
};

RatVec operator*(const RatMat& a, const RatVec& v);

/// xy - yx
RatMat commutator(const RatMat& x, const RatMat& y);
RatMat hstack(const RatMat& a, const RatMat& b);
RatMat vstack(const RatMat& a, const RatMat& b);
RatMat vstack(const std::vector<RatMat>& parts);
RatMat block_diagonal(const std::vector<RatMat>& blocks);
RatMat power(const RatMat& m, unsigned k);

bool is_zero(const RatVec& v);
RatVec add_scaled(RatVec a, const RatVec& b, const Rat& s);

/// Rank by fraction-free (Bareiss) elimination over the integers.
Dim rank(const RatMat& m);
/// Rank by Gauss-Jordan elimination with rational pivots. Independent of rank().
Dim rank_gauss(const RatMat& m);

/// Basis of the null space; one vector per free column of the reduced row echelon form.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

std::optional<RatMat> inverse(const RatMat& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMat& m);

/// Incrementally grown row space kept in reduced echelon form.
class RowSpace {
public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  Dim dim() const { return rows_.size(); }

  /// Reduces v against the current basis and keeps the remainder if nonzero.
  /// Returns true when v was independent.
  bool insert(const RatVec& v);
  bool contains(const RatVec& v) const;
  RatVec reduce(RatVec v) const;

  /// Coordinates of v with respect to basis(); nullopt if v is not in the span.
  std::optional<RatVec> coordinates(const RatVec& v) const;
  const std::vector<RatVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  std::size_t width_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Polynomial over Q, coefficients from the constant term upward.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(RatVec coeffs);
  static RatPoly monomial(const Rat& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVec& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  RatPoly derivative() const;
  RatPoly monic() const;
  Rat eval(const Rat& x) const;
  RatMat eval(const RatMat& m) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; b must be nonzero.
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
  static RatPoly gcd(RatPoly a, RatPoly b);

  std::string to_string() const;

private:
  void trim();
  RatVec c_;
};

/// det(tI - m), by Faddeev-LeVerrier.
RatPoly charpoly(const RatMat& m);
/// Monic minimal polynomial from the first linear dependency among I, m, m^2, ...
RatPoly minimal_polynomial(const RatMat& m);
/// Squarefree decomposition p = c * prod_j a_j^j (Yun); entry j-1 holds a_j.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

}  // namespace commvar::exactlin

#endif  // COMMVAR_EXACTLIN_HPP
