#include "homquot/exalg.hpp"

namespace homquot {

namespace {

// Pivot column of an RREF row (first nonzero entry).
std::size_t pivot_col(const Matrix& basis, std::size_t row) {
  for (std::size_t c = 0; c < basis.cols(); ++c)
    if (!basis.at(row, c).is_zero()) return c;
  throw StructureViolation("zero row in pruned RREF basis");
}

Matrix prune_zero_rows(const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec v = m.row(r);
    if (!vec_is_zero(v)) rows.push_back(std::move(v));
  }
  return Matrix::from_rows(m.field(), rows, m.cols());
}

}  // namespace

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  return Subspace(f, ambient, Matrix(f, 0, ambient));
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  return Subspace(f, ambient, Matrix::identity(f, ambient));
}

Subspace Subspace::from_vectors(const FieldSpec& f, std::size_t ambient,
                                const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionMismatch("vector/ambient mismatch");
  Matrix m = Matrix::from_rows(f, vectors, ambient);
  return Subspace(f, ambient, prune_zero_rows(rref(m)));
}

bool Subspace::member(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("member: ambient mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = pivot_col(basis_, i);
    if (w[p].is_zero()) continue;
    Scalar c = w[p];
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - c * basis_.at(i, j);
  }
  return vec_is_zero(w);
}

Vec Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("coordinates: ambient mismatch");
  Vec w = v;
  Vec coords = vec_zero(field_, basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = pivot_col(basis_, i);
    if (w[p].is_zero()) continue;
    coords[i] = w[p];
    Scalar c = w[p];
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - c * basis_.at(i, j);
  }
  if (!vec_is_zero(w)) throw Error("coordinates: vector outside subspace");
  return coords;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!member(o.basis_row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_ || o.field_ != field_)
    throw DimensionMismatch("sum: ambient/field mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_row(i));
  for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_row(i));
  return from_vectors(field_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_ || o.field_ != field_)
    throw DimensionMismatch("intersect: ambient/field mismatch");
  // Solve u·A = w·B by the kernel-of-stacked-bases method: kernel of the
  // ambient×(ra+rb) matrix [Aᵀ | −Bᵀ], then map (u,w) ↦ u·A.
  std::size_t ra = dim(), rb = o.dim();
  Matrix m(field_, ambient_, ra + rb);
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t i = 0; i < ra; ++i) m.set(r, i, basis_.at(i, r));
    for (std::size_t j = 0; j < rb; ++j) m.set(r, ra + j, -o.basis_.at(j, r));
  }
  Subspace ker = kernel(m);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vec uw = ker.basis_row(k);
    Vec v = vec_zero(field_, ambient_);
    for (std::size_t i = 0; i < ra; ++i)
      if (!uw[i].is_zero()) v = vec_add(v, vec_scale(uw[i], basis_.row(i)));
    rows.push_back(std::move(v));
  }
  return from_vectors(field_, ambient_, rows);
}

Matrix Subspace::conditions() const { return kernel(basis_).basis(); }

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

int subspace_cmp(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    return a.ambient_dim() < b.ambient_dim() ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = vec_cmp(a.basis_row(i), b.basis_row(i));
    if (c != 0) return c;
  }
  return 0;
}

std::uint64_t projective_count(const FieldSpec& f, std::size_t dim,
                               std::uint64_t cap) {
  if (!f.is_prime_field())
    throw UnsupportedMode("projective enumeration requires a finite field");
  mpz_class total = 0, pk = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total += pk;
    pk *= f.p();
  }
  if (total > mpz_class(static_cast<unsigned long>(cap)))
    throw EnumerationTooLarge("projective scan of " + total.get_str() +
                              " points exceeds cap " + std::to_string(cap));
  return total.get_ui();
}

ProjectiveScan::ProjectiveScan(const FieldSpec& f, std::size_t dim)
    : p_(0), dim_(dim), lead_(0), cur_(dim, 0), done_(dim == 0), started_(false) {
  if (!f.is_prime_field())
    throw UnsupportedMode("projective enumeration requires a finite field");
  p_ = f.p();
}

void ProjectiveScan::reset() {
  std::fill(cur_.begin(), cur_.end(), 0);
  lead_ = 0;
  done_ = dim_ == 0;
  started_ = false;
}

bool ProjectiveScan::next(std::vector<std::uint32_t>& digits) {
  if (done_) return false;
  if (!started_) {
    lead_ = dim_ - 1;
    cur_[lead_] = 1;
    started_ = true;
    digits = cur_;
    return true;
  }
  for (std::size_t pos = dim_; pos-- > lead_ + 1;) {
    if (cur_[pos] + 1 < p_) {
      ++cur_[pos];
      for (std::size_t j = pos + 1; j < dim_; ++j) cur_[j] = 0;
      digits = cur_;
      return true;
    }
  }
  if (lead_ == 0) {
    done_ = true;
    return false;
  }
  --lead_;
  std::fill(cur_.begin(), cur_.end(), 0);
  cur_[lead_] = 1;
  digits = cur_;
  return true;
}

Vec vec_from_digits(const FieldSpec& f, const std::vector<std::uint32_t>& d) {
  Vec v;
  v.reserve(d.size());
  for (std::uint32_t x : d) v.push_back(Scalar::of(f, static_cast<long>(x)));
  return v;
}

std::vector<Vec> enumerate_projective(const FieldSpec& f, std::size_t dim,
                                      const Ctx& ctx) {
  std::uint64_t n = projective_count(f, dim, ctx.max_enum);
  std::vector<Vec> out;
  out.reserve(n);
  ProjectiveScan scan(f, dim);
  std::vector<std::uint32_t> d;
  while (scan.next(d)) out.push_back(vec_from_digits(f, d));
  return out;
}

}  // namespace homquot
