#include "reisner/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace reisner {

namespace {

// --- F_p elimination -------------------------------------------------------

std::size_t rref_fp_inplace(std::vector<long long>& a, std::size_t rows, std::size_t cols,
                            long long p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
    }
    const long long inv = fp::inv(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = fp::mul(a[r * cols + j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const long long f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = fp::sub(a[i * cols + j], fp::mul(f, a[r * cols + j], p), p);
      }
    }
    ++r;
  }
  return r;
}

// --- QQ elimination --------------------------------------------------------
//
// Working rows are primitive integer vectors (content stripped after every
// update), which keeps intermediate entries near minor size instead of
// letting rational canonicalization dominate.  Pivots are normalized to 1
// only when converting back.

void strip_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<std::vector<mpz_class>> to_integer_rows(const std::vector<mpq_class>& q,
                                                    std::size_t rows, std::size_t cols) {
  std::vector<std::vector<mpz_class>> out(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q[i * cols + j].get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class v = q[i * cols + j] * lcm;
      out[i][j] = v.get_num();
    }
    strip_content(out[i]);
  }
  return out;
}

std::size_t rref_q_inplace(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  mpz_class t1, t2;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpz_class f = a[i][c];
      const mpz_class& pv = a[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        t1 = pv * a[i][j];
        t2 = f * a[r][j];
        a[i][j] = t1 - t2;
      }
      strip_content(a[i]);
    }
    ++r;
  }
  return r;
}

}  // namespace

// --- Matrix ----------------------------------------------------------------

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_rational()) {
    q_.assign(rows * cols, mpq_class(0));
  } else {
    ip_.assign(rows * cols, 0);
  }
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix: index out of range");
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  if (field_.is_rational()) return Scalar(field_, q_[r * cols_ + c]);
  return Scalar(field_, ip_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check_index(r, c);
  if (v.field() != field_) throw std::invalid_argument("Matrix::set: mixed fields");
  if (field_.is_rational()) {
    q_[r * cols_ + c] = v.rational();
  } else {
    ip_[r * cols_ + c] = v.residue();
  }
}

void Matrix::set(std::size_t r, std::size_t c, long long v) { set(r, c, Scalar(field_, v)); }

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  set(r, c, at(r, c) + v);
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return field_.is_rational() ? q_ == o.q_ : ip_ == o.ip_;
}

std::size_t Matrix::rank() const {
  if (field_.is_rational()) {
    auto rows = to_integer_rows(q_, rows_, cols_);
    return rref_q_inplace(rows, cols_);
  }
  auto a = ip_;
  return rref_fp_inplace(a, rows_, cols_, field_.characteristic());
}

Matrix Matrix::rref(std::size_t* rank_out) const {
  Matrix out(field_, rows_, cols_);
  std::size_t rk = 0;
  if (field_.is_rational()) {
    auto rows = to_integer_rows(q_, rows_, cols_);
    rk = rref_q_inplace(rows, cols_);
    for (std::size_t i = 0; i < rk; ++i) {
      std::size_t lead = 0;
      while (lead < cols_ && rows[i][lead] == 0) ++lead;
      for (std::size_t j = lead; j < cols_; ++j) {
        mpq_class v(rows[i][j], rows[i][lead]);
        v.canonicalize();
        out.q_[i * cols_ + j] = v;
      }
    }
  } else {
    auto a = ip_;
    rk = rref_fp_inplace(a, rows_, cols_, field_.characteristic());
    out.ip_ = std::move(a);
  }
  if (rank_out) *rank_out = rk;
  return out;
}

Matrix Matrix::kernel_basis() const {
  std::size_t rk = 0;
  const Matrix r = rref(&rk);
  // Pivot columns of the echelon form; the rest are free.
  std::vector<std::size_t> pivot_col(rk);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t i = 0; i < rk; ++i) {
    std::size_t c = 0;
    while (c < cols_ && r.at(i, c).is_zero()) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Matrix kern(field_, cols_ - rk, cols_);
  std::size_t k = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    kern.set(k, f, 1);
    for (std::size_t i = 0; i < rk; ++i) kern.set(k, pivot_col[i], -r.at(i, f));
    ++k;
  }
  // Canonicalize so the output is deterministic reduced echelon form.
  return kern.rref();
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (field_ != o.field_) throw std::invalid_argument("Matrix::mul: mixed fields");
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  if (field_.is_rational()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = q_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          out.q_[i * o.cols_ + j] += a * o.q_[k * o.cols_ + j];
        }
      }
    }
  } else {
    const long long p = field_.characteristic();
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const long long a = ip_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          auto& cell = out.ip_[i * o.cols_ + j];
          cell = fp::add(cell, fp::mul(a, o.ip_[k * o.cols_ + j], p), p);
        }
      }
    }
  }
  return out;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(r, j));
  return out;
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
  return out;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("Matrix::hcat: mixed fields");
  if (a.rows_ != b.rows_) throw std::invalid_argument("Matrix::hcat: row mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols_; ++j) out.set(i, a.cols_ + j, b.at(i, j));
  }
  return out;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("Matrix::vcat: mixed fields");
  if (a.cols_ != b.cols_) throw std::invalid_argument("Matrix::vcat: column mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
  }
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) out.set(a.rows_ + i, j, b.at(i, j));
  }
  return out;
}

// --- RowSpan ----------------------------------------------------------------

RowSpan::RowSpan(FieldSpec field, std::size_t ambient) : field_(field), ambient_(ambient) {}

std::size_t RowSpan::reduce_fp(std::vector<long long>& row) const {
  const long long p = field_.characteristic();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const long long f = row[pivots_[k]];
    if (f == 0) continue;
    const auto& base = rows_fp_[k];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      if (base[j] != 0) row[j] = fp::sub(row[j], fp::mul(f, base[j], p), p);
    }
  }
  std::size_t lead = 0;
  while (lead < ambient_ && row[lead] == 0) ++lead;
  return lead;
}

std::size_t RowSpan::reduce_q(std::vector<mpq_class>& row) const {
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const mpq_class f = row[pivots_[k]];
    if (f == 0) continue;
    const auto& base = rows_q_[k];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      if (base[j] != 0) row[j] -= f * base[j];
    }
  }
  std::size_t lead = 0;
  while (lead < ambient_ && row[lead] == 0) ++lead;
  return lead;
}

bool RowSpan::insert_fp(std::vector<long long> row) {
  const long long p = field_.characteristic();
  const std::size_t lead = reduce_fp(row);
  if (lead == ambient_) return false;
  const long long inv = fp::inv(row[lead], p);
  for (std::size_t j = lead; j < ambient_; ++j) row[j] = fp::mul(row[j], inv, p);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const long long f = rows_fp_[k][lead];
    if (f == 0) continue;
    auto& base = rows_fp_[k];
    for (std::size_t j = lead; j < ambient_; ++j) {
      if (row[j] != 0) base[j] = fp::sub(base[j], fp::mul(f, row[j], p), p);
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_fp_.insert(rows_fp_.begin() + pos, std::move(row));
  return true;
}

bool RowSpan::insert_q(std::vector<mpq_class> row) {
  const std::size_t lead = reduce_q(row);
  if (lead == ambient_) return false;
  const mpq_class inv = 1 / row[lead];
  for (std::size_t j = lead; j < ambient_; ++j) {
    if (row[j] != 0) row[j] *= inv;
  }
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const mpq_class f = rows_q_[k][lead];
    if (f == 0) continue;
    auto& base = rows_q_[k];
    for (std::size_t j = lead; j < ambient_; ++j) {
      if (row[j] != 0) base[j] -= f * row[j];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_q_.insert(rows_q_.begin() + pos, std::move(row));
  return true;
}

bool RowSpan::insert(const std::vector<Scalar>& row) {
  if (row.size() != ambient_) throw std::invalid_argument("RowSpan::insert: length mismatch");
  if (field_.is_rational()) {
    std::vector<mpq_class> r(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (row[j].field() != field_) throw std::invalid_argument("RowSpan::insert: mixed fields");
      r[j] = row[j].rational();
    }
    return insert_q(std::move(r));
  }
  std::vector<long long> r(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (row[j].field() != field_) throw std::invalid_argument("RowSpan::insert: mixed fields");
    r[j] = row[j].residue();
  }
  return insert_fp(std::move(r));
}

bool RowSpan::insert_row_of(const Matrix& m, std::size_t r) { return insert(m.row(r)); }

bool RowSpan::insert_col_of(const Matrix& m, std::size_t c) { return insert(m.col(c)); }

void RowSpan::insert_all_rows(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) insert_row_of(m, r);
}

void RowSpan::insert_all_cols(const Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) insert_col_of(m, c);
}

bool RowSpan::contains(const std::vector<Scalar>& row) const {
  if (row.size() != ambient_) throw std::invalid_argument("RowSpan::contains: length mismatch");
  if (field_.is_rational()) {
    std::vector<mpq_class> r(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = row[j].rational();
    return reduce_q(r) == ambient_;
  }
  std::vector<long long> r(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) r[j] = row[j].residue();
  return reduce_fp(r) == ambient_;
}

Matrix RowSpan::basis() const {
  Matrix out(field_, pivots_.size(), ambient_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (field_.is_rational()) {
        out.set(i, j, Scalar(field_, rows_q_[i][j]));
      } else {
        out.set(i, j, Scalar(field_, rows_fp_[i][j]));
      }
    }
  }
  return out;
}

bool subspace_sum_and_membership(const Matrix& gens_a, const Matrix& gens_b,
                                 const std::vector<Scalar>& v) {
  if (gens_a.field() != gens_b.field()) {
    throw std::invalid_argument("subspace_sum_and_membership: mixed fields");
  }
  if (gens_a.cols() != gens_b.cols() || v.size() != gens_a.cols()) {
    throw std::invalid_argument("subspace_sum_and_membership: dimension mismatch");
  }
  RowSpan span(gens_a.field(), gens_a.cols());
  span.insert_all_rows(gens_a);
  span.insert_all_rows(gens_b);
  return span.contains(v);
}

}  // namespace reisner
