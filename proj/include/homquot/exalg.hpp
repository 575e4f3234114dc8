#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homquot/context.hpp"
#include "homquot/errors.hpp"

namespace homquot {

enum class FieldKind { Rationals, Prime };

/// Ground field descriptor: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rationals; }
  bool is_prime_field() const { return kind_ == FieldKind::Prime; }
  std::uint32_t p() const { return p_; }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;

private:
  FieldSpec(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

/// Exact field element: a reduced fraction over the rationals, or a
/// canonical residue in [0, p) over GF(p).  No floating point anywhere.
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()), q_(0), r_(0) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of(const FieldSpec& f, long num, long den = 1);
  static Scalar rational(mpq_class q);
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order within one field (residue order over GF(p), numeric over Q);
  /// used only for canonical sorting, no algebraic meaning.
  int cmp(const Scalar& o) const;

  std::string str() const;

  std::uint32_t residue() const { return r_; }
  const mpq_class& rat() const { return q_; }

private:
  Scalar(const FieldSpec& f, mpq_class q, std::uint32_t r)
      : field_(f), q_(std::move(q)), r_(r) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;       // rationals only
  std::uint32_t r_;   // prime fields only
};

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, std::size_t n);
Vec vec_unit(const FieldSpec& f, std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& c, const Vec& a);
int vec_cmp(const Vec& a, const Vec& b);

/// Dense row-major matrix over one field.  Column-vector convention
/// everywhere: maps act on the left, (M·v)_r = Σ_c M[r][c]·v_c.
class Matrix {
public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                          std::size_t cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Vec apply(const Vec& v) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Stacks rows of o below this (same cols).
  Matrix vstack(const Matrix& o) const;

  Vec flat() const { return e_; }
  static Matrix from_flat(const FieldSpec& f, std::size_t rows,
                          std::size_t cols, const Vec& flat);

private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  Vec e_;
};

class Subspace;

/// Unique reduced row-echelon form; row space preserved.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// {v : m·v = 0} as a canonical subspace of F^cols.
Subspace kernel(const Matrix& m);
/// One solution of m·x = b (free variables zero), or nullopt.
std::optional<Vec> linear_solve(const Matrix& m, const Vec& b);

/// Subspace of F^n identified with its canonical RREF basis; equality is
/// entrywise on that basis, which makes all set-level results bit-exact.
class Subspace {
public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  static Subspace from_vectors(const FieldSpec& f, std::size_t ambient,
                               const std::vector<Vec>& vectors);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool member(const Vec& v) const;
  /// Coordinates of v in the RREF basis; throws if v is outside.
  Vec coordinates(const Vec& v) const;
  bool contains(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  /// Rows span the functionals vanishing exactly on this subspace:
  /// v is a member iff conditions()·v = 0.  Used to turn "⊆ L" into
  /// linear constraints.
  Matrix conditions() const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  Subspace(const FieldSpec& f, std::size_t ambient, Matrix basis)
      : field_(f), ambient_(ambient), basis_(std::move(basis)) {}
  friend Subspace kernel(const Matrix& m);

  FieldSpec field_;
  std::size_t ambient_;
  Matrix basis_;  // RREF, zero rows pruned
};

/// Deterministic total order on same-ambient subspaces: by dim, then
/// entrywise on the canonical basis.  Used for lattice canonicalization.
int subspace_cmp(const Subspace& a, const Subspace& b);

/// (p^dim - 1)/(p - 1), the number of projective points.
/// Throws EnumerationTooLarge if it exceeds the cap.
std::uint64_t projective_count(const FieldSpec& f, std::size_t dim,
                               std::uint64_t cap);

/// Streams one representative per projective point of F^dim, first nonzero
/// coordinate 1, in lexicographic order.  Digit form (residues) to keep hot
/// loops allocation-free.
class ProjectiveScan {
public:
  ProjectiveScan(const FieldSpec& f, std::size_t dim);
  /// Fills the next point; returns false when exhausted.
  bool next(std::vector<std::uint32_t>& digits);
  void reset();

private:
  std::uint32_t p_;
  std::size_t dim_;
  std::size_t lead_;  // current leading-one position
  std::vector<std::uint32_t> cur_;
  bool done_, started_;
};

Vec vec_from_digits(const FieldSpec& f, const std::vector<std::uint32_t>& d);

/// Materialized projective enumeration (cap-checked).
std::vector<Vec> enumerate_projective(const FieldSpec& f, std::size_t dim,
                                      const Ctx& ctx = {});

}  // namespace homquot
