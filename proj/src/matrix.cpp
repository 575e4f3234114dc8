#include <utility>

#include "homquot/exalg.hpp"

namespace homquot {

namespace {

// Elimination runs on one of two raw grids: uint32 residues for GF(p)
// (the hot path for exhaustive scans) or mpq for the rationals.

struct FpGrid {
  std::uint32_t p;
  std::size_t rows, cols;
  std::vector<std::uint32_t> e;

  std::uint32_t& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  bool is_zero_at(std::size_t r, std::size_t c) const {
    return e[r * cols + c] == 0;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(a, c), at(b, c));
  }
  static std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
  }
  void scale_row(std::size_t r, std::size_t c) {
    std::uint64_t k = inv(at(r, c), p);
    for (std::size_t j = c; j < cols; ++j)
      at(r, j) = static_cast<std::uint32_t>(k * at(r, j) % p);
  }
  void eliminate(std::size_t j, std::size_t r, std::size_t c) {
    std::uint64_t f = p - at(j, c);  // row_j += f * row_r
    for (std::size_t k = c; k < cols; ++k) {
      std::uint64_t v = at(j, k) + f * at(r, k) % p;
      at(j, k) = static_cast<std::uint32_t>(v >= p ? v - p : v);
    }
  }
};

struct QGrid {
  std::size_t rows, cols;
  std::vector<mpq_class> e;

  mpq_class& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  bool is_zero_at(std::size_t r, std::size_t c) const {
    return sgn(e[r * cols + c]) == 0;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(a, c), at(b, c));
  }
  void scale_row(std::size_t r, std::size_t c) {
    mpq_class k = 1 / at(r, c);
    for (std::size_t j = c; j < cols; ++j) at(r, j) *= k;
  }
  void eliminate(std::size_t j, std::size_t r, std::size_t c) {
    mpq_class f = at(j, c);
    for (std::size_t k = c; k < cols; ++k) at(j, k) -= f * at(r, k);
  }
};

template <class G>
void grid_rref(G& g, std::vector<std::size_t>& pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < g.cols && r < g.rows; ++c) {
    std::size_t pr = r;
    while (pr < g.rows && g.is_zero_at(pr, c)) ++pr;
    if (pr == g.rows) continue;
    g.swap_rows(pr, r);
    g.scale_row(r, c);
    for (std::size_t j = 0; j < g.rows; ++j)
      if (j != r && !g.is_zero_at(j, c)) g.eliminate(j, r, c);
    pivots.push_back(c);
    ++r;
  }
}

FpGrid fp_of(const Matrix& m) {
  FpGrid g{m.field().p(), m.rows(), m.cols(), {}};
  g.e.reserve(g.rows * g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) g.e.push_back(m.at(r, c).residue());
  return g;
}

Matrix fp_back(const FieldSpec& f, const FpGrid& g) {
  Matrix m(f, g.rows, g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) {
      std::uint32_t v = g.e[r * g.cols + c];
      if (v != 0) m.set(r, c, Scalar::of(f, static_cast<long>(v)));
    }
  return m;
}

QGrid q_of(const Matrix& m) {
  QGrid g{m.rows(), m.cols(), {}};
  g.e.reserve(g.rows * g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) g.e.push_back(m.at(r, c).rat());
  return g;
}

Matrix q_back(const FieldSpec& f, QGrid& g) {
  Matrix m(f, g.rows, g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) {
      mpq_class& v = g.at(r, c);
      if (sgn(v) != 0) m.set(r, c, Scalar::rational(v));
    }
  return m;
}

Matrix rref_with_pivots(const Matrix& m, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if (m.field().is_prime_field()) {
    FpGrid g = fp_of(m);
    grid_rref(g, pivots);
    return fp_back(m.field(), g);
  }
  QGrid g = q_of(m);
  grid_rref(g, pivots);
  return q_back(m.field(), g);
}

}  // namespace

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                         std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  return e_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  if (v.field() != field_) throw FieldMismatch("entry field mismatch");
  e_[r * cols_ + c] = v;
}

Vec Matrix::row(std::size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw DimensionMismatch("matrix shapes differ in +");
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw DimensionMismatch("matrix shapes differ in *");
  Matrix m(field_, rows_, o.cols_);
  if (field_.is_prime_field()) {
    std::uint64_t p = field_.p();
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < o.cols_; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < cols_; ++k)
          acc = (acc + static_cast<std::uint64_t>(e_[r * cols_ + k].residue()) *
                           o.e_[k * o.cols_ + c].residue()) %
                p;
        if (acc != 0) m.set(r, c, Scalar::of(field_, static_cast<long>(acc)));
      }
    return m;
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) {
      mpq_class acc(0);
      for (std::size_t k = 0; k < cols_; ++k)
        acc += e_[r * cols_ + k].rat() * o.e_[k * o.cols_ + c].rat();
      if (sgn(acc) != 0) m.set(r, c, Scalar::rational(acc));
    }
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix/vector size mismatch");
  Vec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t c = 0; c < cols_; ++c) acc = acc + e_[r * cols_ + c] * v[c];
    out.push_back(acc);
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = c * e_[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_ || field_ != o.field_)
    throw DimensionMismatch("vstack column mismatch");
  Matrix m(field_, rows_ + o.rows_, cols_);
  m.e_ = e_;
  m.e_.insert(m.e_.end(), o.e_.begin(), o.e_.end());
  return m;
}

Matrix Matrix::from_flat(const FieldSpec& f, std::size_t rows, std::size_t cols,
                         const Vec& flat) {
  if (flat.size() != rows * cols) throw DimensionMismatch("flat size mismatch");
  Matrix m(f, rows, cols);
  m.e_ = flat;
  return m;
}

Matrix rref(const Matrix& m) {
  std::vector<std::size_t> pivots;
  return rref_with_pivots(m, pivots);
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref_with_pivots(m, pivots);
  return pivots.size();
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref_with_pivots(m, pivots);
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zero(f, m.cols());
    v[c] = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, c);
    basis.push_back(std::move(v));
  }
  return Subspace::from_vectors(f, m.cols(), basis);
}

std::optional<Vec> linear_solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("linear_solve: rhs length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols(), b[i]);
  }
  std::vector<std::size_t> pivots;
  Matrix r = rref_with_pivots(aug, pivots);
  for (std::size_t c : pivots)
    if (c == a.cols()) return std::nullopt;
  Vec x = vec_zero(a.field(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, a.cols());
  return x;
}

}  // namespace homquot
