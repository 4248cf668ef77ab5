#pragma once

#include <cstddef>
#include <vector>

#include "reisner/field.hpp"

namespace reisner {

/// Dense matrix over a fixed coefficient field.  All entries share one
/// FieldSpec; mixing fields in any binary operation is a configuration
/// error.  Values are immutable in spirit: the mutating setters exist for
/// assembly, after which callers treat matrices as values.
///
/// Elimination uses the deterministic pivot convention (first nonzero
/// column, first nonzero row), so rref/kernel_basis outputs are
/// reproducible byte for byte.
class Matrix {
public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long long v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Rank over the matrix's field, by exact Gaussian elimination.
  std::size_t rank() const;

  /// Reduced row echelon form (unit pivots, zeros above and below).
  Matrix rref(std::size_t* rank_out = nullptr) const;

  /// Rows form the canonical reduced-echelon basis of the right kernel
  /// { x : M x = 0 }.  Row count equals cols() - rank().
  Matrix kernel_basis() const;

  Matrix transpose() const;
  Matrix mul(const Matrix& o) const;
  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> col(std::size_t c) const;

  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

private:
  friend class RowSpan;
  void check_index(std::size_t r, std::size_t c) const;

  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  // One of the two is in use, depending on the field.
  std::vector<long long> ip_;
  std::vector<mpq_class> q_;
};

/// Incremental row-space accumulator kept in reduced echelon form.
/// Used for subspace sums, membership tests, and quotient dimensions.
class RowSpan {
public:
  RowSpan(FieldSpec field, std::size_t ambient);

  /// Inserts a row vector; returns true if the rank grew.
  bool insert(const std::vector<Scalar>& row);
  bool insert_row_of(const Matrix& m, std::size_t r);
  bool insert_col_of(const Matrix& m, std::size_t c);
  void insert_all_rows(const Matrix& m);
  void insert_all_cols(const Matrix& m);

  bool contains(const std::vector<Scalar>& row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t ambient() const { return ambient_; }
  const FieldSpec& field() const { return field_; }

  /// Canonical basis (reduced echelon rows, sorted by pivot column).
  Matrix basis() const;

private:
  // Reduces `row` against the stored echelon rows in place; returns the
  // leading column or `ambient_` if the row reduced to zero.
  std::size_t reduce_fp(std::vector<long long>& row) const;
  std::size_t reduce_q(std::vector<mpq_class>& row) const;
  bool insert_fp(std::vector<long long> row);
  bool insert_q(std::vector<mpq_class> row);

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;  // pivot column per stored row, ascending
  std::vector<std::vector<long long>> rows_fp_;
  std::vector<std::vector<mpq_class>> rows_q_;
};

/// True iff v lies in span(rows of a) + span(rows of b).
bool subspace_sum_and_membership(const Matrix& gens_a, const Matrix& gens_b,
                                 const std::vector<Scalar>& v);

}  // namespace reisner
