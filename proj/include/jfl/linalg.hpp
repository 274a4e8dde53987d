#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, integer kernels, lattice
// membership, and homology of short chain complexes of finitely generated abelian groups.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jfl/integer.hpp"

namespace jfl {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> col(std::size_t c) const;
  Matrix transposed() const;
  bool is_zero() const;
  void append_row(const std::vector<Integer>& row);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Integer> operator*(const Matrix& a, const std::vector<Integer>& v);
// Entries reduced into [0, m) when m > 0; unchanged when m == 0.
Matrix reduce_mod(const Matrix& a, const Integer& m);

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const Matrix& a);

struct SmithForm {
  Matrix U, D, V;  // U * M * V = D
  std::size_t rank = 0;
  std::vector<Integer> diagonal() const;  // the first rank() diagonal entries
};

// U and V are unimodular; D is diagonal with nonnegative entries d1 | d2 | ... .
SmithForm smith_normal_form(const Matrix& m);

// Row-style Hermite normal form: the nonzero rows of the result are a basis of the row lattice,
// in echelon form with positive pivots and entries above each pivot reduced into [0, pivot).
Matrix hermite_normal_form(const Matrix& m);

// Reduces v against an HNF basis. The remainder is zero iff v lies in the row lattice.
std::vector<Integer> hnf_reduce(const Matrix& hnf, std::vector<Integer> v);
bool in_row_lattice(const Matrix& hnf, const std::vector<Integer>& v);
// Coordinates c with c * hnf = v, if v lies in the lattice.
std::optional<std::vector<Integer>> hnf_coordinates(const Matrix& hnf, const std::vector<Integer>& v);

// Basis (as rows) of {x in Z^cols : m x = 0}.
Matrix integer_kernel(const Matrix& m);

// Finitely generated abelian group Z^rank + sum Z/d_i with d1 | d2 | ..., each d_i >= 2.
struct FPAbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  static FPAbelianGroup from_invariant_factors(std::size_t generators, const std::vector<Integer>& diagonal);
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  // Every torsion factor is 2 and there is no free part.
  bool is_elementary_2() const;
  friend bool operator==(const FPAbelianGroup&, const FPAbelianGroup&) = default;
};

FPAbelianGroup direct_sum(const FPAbelianGroup& a, const FPAbelianGroup& b);
// Cokernel of the row lattice of m inside Z^cols.
FPAbelianGroup cokernel_of_rows(const Matrix& m);

std::string to_text(const FPAbelianGroup& g);
nlohmann::ordered_json to_json(const FPAbelianGroup& g);

// Three-term piece  prev --incoming--> mid --outgoing--> next  of a complex whose groups are
// Z^n modulo diag(order) (order 0 meaning free). Matrices act on column vectors.
struct ChainSegment {
  Matrix incoming;  // mid x prev
  Matrix outgoing;  // next x mid
  std::vector<Integer> prev_orders, mid_orders, next_orders;
};

struct HomologyResult {
  FPAbelianGroup group;
  Matrix cycles;  // rows: a basis of the cycle lattice in Z^mid (before quotienting)
};

// Throws NotAComplex if outgoing * incoming is nonzero in the next group.
HomologyResult homology_at(const ChainSegment& segment);

}  // namespace jfl
