#include "commvar/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace commvar::exactlin {

RatMat::RatMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMat::RatMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMat: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_columns(const std::vector<RatVec>& columns, std::size_t rows) {
  RatMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool RatMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMat RatMat::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("RatMat::block");
  RatMat b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void RatMat::set_block(std::size_t r0, std::size_t c0, const RatMat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("RatMat::set_block");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Rat RatMat::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RatMat& RatMat::operator+=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMat& RatMat::operator-=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMat& RatMat::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: shape mismatch in *");
  RatMat p(a.rows_, b.cols_);
  Rat t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        p(i, j) += t;
      }
    }
  }
  return p;
}

bool operator==(const RatMat& a, const RatMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RatMat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).get_str();
    }
  }
  os << ']';
  return os.str();
}

RatVec operator*(const RatMat& a, const RatVec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("RatMat*RatVec: shape mismatch");
  RatVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

RatMat commutator(const RatMat& x, const RatMat& y) { return x * y - y * x; }

RatMat hstack(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  RatMat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

RatMat vstack(const RatMat& a, const RatMat& b) { return vstack(std::vector<RatMat>{a, b}); }

RatMat vstack(const std::vector<RatMat>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  const std::size_t cols = parts.front().cols();
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  RatMat m(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

RatMat block_diagonal(const std::vector<RatMat>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RatMat m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

RatMat power(const RatMat& m, unsigned k) {
  RatMat result = RatMat::identity(m.rows());
  RatMat base = m;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RatVec add_scaled(RatVec a, const RatVec& b, const Rat& s) {
  if (a.size() != b.size()) throw std::invalid_argument("add_scaled: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
  return a;
}

// --- elimination ------------------------------------------------------------

Dim rank(const RatMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& q = m(r, c);
      if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& q = m(r, c);
      if (sgn(q) != 0) a[r][c] = q.get_num() * (l / q.get_den());
    }
  }

  mpz_class prev = 1;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    const mpz_class piv = a[pivot_row][c];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      const mpz_class lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[i][j] * piv;
        if (sgn(lead) != 0 && sgn(a[pivot_row][j]) != 0) v -= lead * a[pivot_row][j];
        if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++pivot_row;
  }
  return pivot_row;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rat t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Dim rank_gauss(const RatMat& m) {
  RatMat copy = m;
  return rref(copy).size();
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
  RatMat r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMat aug = hstack(m, RatMat::identity(n));
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

// --- RowSpace ---------------------------------------------------------------

RatVec RowSpace::reduce(RatVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = v[pivots_[i]];
    if (sgn(f) != 0) v = add_scaled(std::move(v), rows_[i], -f);
  }
  return v;
}

bool RowSpace::insert(const RatVec& v) {
  if (v.size() != width_) throw std::invalid_argument("RowSpace: width mismatch");
  RatVec r = reduce(v);
  std::size_t p = 0;
  while (p < width_ && sgn(r[p]) == 0) ++p;
  if (p == width_) return false;
  const Rat inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  for (auto& row : rows_) {
    const Rat f = row[p];
    if (sgn(f) != 0) row = add_scaled(std::move(row), r, -f);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(const RatVec& v) const { return is_zero(reduce(v)); }

std::optional<RatVec> RowSpace::coordinates(const RatVec& v) const {
  RatVec coords(rows_.size());
  RatVec rest = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    coords[i] = v[pivots_[i]];
    if (sgn(coords[i]) != 0) rest = add_scaled(std::move(rest), rows_[i], -coords[i]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

// --- polynomials ------------------------------------------------------------

RatPoly::RatPoly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t degree) {
  RatVec v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  RatVec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatVec v = c_;
  const Rat lead = c_.back();
  for (auto& x : v) x /= lead;
  return RatPoly(std::move(v));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatMat RatPoly::eval(const RatMat& m) const {
  RatMat acc(m.rows(), m.cols());
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * m + c_[i] * RatMat::identity(m.rows());
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatVec v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  RatVec v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVec v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("RatPoly::divmod by zero");
  RatVec rem = a.c_;
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  RatVec quot(a.c_.size() - b.c_.size() + 1);
  const Rat lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rat q = rem[k + b.c_.size() - 1] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[i].get_str() << ')';
    if (i > 0) os << "*t^" << i;
  }
  return os.str();
}

RatPoly charpoly(const RatMat& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("charpoly: matrix not square");
  RatVec c(n + 1);
  c[n] = 1;
  RatMat mk(n, n);
  const RatMat id = RatMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * id;
    c[n - k] = -(a * mk).trace() / static_cast<long>(k);
  }
  return RatPoly(std::move(c));
}

RatPoly minimal_polynomial(const RatMat& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("minimal_polynomial: matrix not square");
  std::vector<RatVec> powers;
  RatMat p = RatMat::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (!powers.empty()) {
      const RatMat basis = RatMat::from_columns(powers, n * n);
      if (auto x = solve(basis, p.entries())) {
        RatVec coeffs(k + 1);
        for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*x)[i];
        coeffs[k] = 1;
        return RatPoly(std::move(coeffs));
      }
    }
    powers.push_back(p.entries());
    p = p * m;
  }
  throw std::logic_error("minimal_polynomial: no dependency found (Cayley-Hamilton violated)");
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  std::vector<RatPoly> out;
  if (p.degree() < 1) return out;
  const RatPoly one(RatVec{Rat(1)});
  const RatPoly a0 = RatPoly::gcd(p, p.derivative());
  RatPoly b = RatPoly::divmod(p, a0).first;
  RatPoly c = RatPoly::divmod(p.derivative(), a0).first;
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    const RatPoly a = RatPoly::gcd(b, d);
    out.push_back(a);
    b = RatPoly::divmod(b, a).first;
    c = RatPoly::divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace commvar::exactlin
