#include "jfl/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "jfl/error.hpp"

namespace jfl {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> Matrix::row(std::size_t r) const {
  return std::vector<Integer>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Integer> Matrix::col(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

void Matrix::append_row(const std::vector<Integer>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void Matrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void Matrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Integer> operator*(const Matrix& a, const std::vector<Integer>& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  std::vector<Integer> out(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Matrix reduce_mod(const Matrix& a, const Integer& m) {
  if (m == 0) return a;
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mod_floor(a(i, j), m);
  return out;
}

Integer determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Integer(1);
  Matrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const Matrix& input) {
  const std::size_t r = input.rows(), c = input.cols();
  SmithForm s{Matrix::identity(r), input, Matrix::identity(c), 0};
  Matrix& D = s.D;
  Matrix& U = s.U;
  Matrix& V = s.V;

  auto bring_smallest_to = [&](std::size_t t, bool whole_block) -> bool {
    std::size_t bi = r, bj = c;
    Integer best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (!whole_block && i != t && j != t) continue;
        if (D(i, j) == 0) continue;
        Integer mag = abs(D(i, j));
        if (bi == r || mag < best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    if (bi == r) return false;
    D.swap_rows(t, bi);
    U.swap_rows(t, bi);
    D.swap_cols(t, bj);
    V.swap_cols(t, bj);
    return true;
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    if (!bring_smallest_to(t, true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_smallest_to(t, false);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j) {
          if (!divides(D(t, t), D(i, j))) {
            D.add_row_multiple(t, i, Integer(1));
            U.add_row_multiple(t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

namespace {

std::size_t leading_index(const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

struct HnfBuilder {
  std::size_t cols;
  std::vector<std::vector<Integer>> rows;  // sorted by pivot column
  std::vector<std::size_t> pivots;

  void reduce_above(std::size_t k) {
    const std::size_t p = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i][p] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][p].get_mpz_t(), rows[k][p].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = p; j < cols; ++j) rows[i][j] -= q * rows[k][j];
    }
  }

  void insert(std::vector<Integer> v) {
    std::size_t k = 0;
    while (true) {
      const std::size_t lead = leading_index(v);
      if (lead == cols) return;
      while (k < rows.size() && pivots[k] < lead) ++k;
      if (k == rows.size() || pivots[k] > lead) {
        if (v[lead] < 0)
          for (auto& x : v) x = -x;
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(k), lead);
        reduce_above(k);
        for (std::size_t j = k + 1; j < rows.size(); ++j) reduce_above(j);
        return;
      }
      // Same pivot column: replace by the gcd combination.
      auto& b = rows[k];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[lead].get_mpz_t(), v[lead].get_mpz_t());
      const Integer bq = b[lead] / g;
      const Integer vq = v[lead] / g;
      std::vector<Integer> nb(cols), nv(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        nb[j] = s * b[j] + t * v[j];
        nv[j] = bq * v[j] - vq * b[j];
      }
      if (nb[lead] < 0)
        for (auto& x : nb) x = -x;
      b = std::move(nb);
      v = std::move(nv);
      for (std::size_t j = k; j < rows.size(); ++j) reduce_above(j);
      // Keep v small against the rows below the pivot.
      for (std::size_t j = k + 1; j < rows.size(); ++j) {
        const std::size_t p = pivots[j];
        if (v[p] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), rows[j][p].get_mpz_t());
        for (std::size_t c = p; c < cols; ++c) v[c] -= q * rows[j][c];
      }
    }
  }
};

}  // namespace

Matrix hermite_normal_form(const Matrix& m) {
  HnfBuilder b{m.cols(), {}, {}};
  for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  Matrix out(0, m.cols());
  for (const auto& row : b.rows) out.append_row(row);
  return out;
}

std::vector<Integer> hnf_reduce(const Matrix& hnf, std::vector<Integer> v) {
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    const auto row = hnf.row(i);
    const std::size_t p = leading_index(row);
    if (p == row.size() || v[p] == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

bool in_row_lattice(const Matrix& hnf, const std::vector<Integer>& v) {
  const auto rem = hnf_reduce(hnf, v);
  return leading_index(rem) == rem.size();
}

std::optional<std::vector<Integer>> hnf_coordinates(const Matrix& hnf, const std::vector<Integer>& v_in) {
  std::vector<Integer> v = v_in;
  std::vector<Integer> coords(hnf.rows(), Integer(0));
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    const auto row = hnf.row(i);
    const std::size_t p = leading_index(row);
    if (v[p] == 0) continue;
    if (!divides(row[p], v[p])) return std::nullopt;
    coords[i] = v[p] / row[p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= coords[i] * row[j];
  }
  if (leading_index(v) != v.size()) return std::nullopt;
  return coords;
}

Matrix integer_kernel(const Matrix& m) {
  const auto s = smith_normal_form(m);
  Matrix out(0, m.cols());
  for (std::size_t j = s.rank; j < m.cols(); ++j) out.append_row(s.V.col(j));
  if (out.rows() == 0) return Matrix(0, m.cols());
  return hermite_normal_form(out);
}

FPAbelianGroup FPAbelianGroup::from_invariant_factors(std::size_t generators, const std::vector<Integer>& diagonal) {
  FPAbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (abs(d) > 1) g.torsion.push_back(abs(d));
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  g.rank = generators - nonzero;
  return g;
}

bool FPAbelianGroup::is_elementary_2() const {
  return rank == 0 && std::all_of(torsion.begin(), torsion.end(), [](const Integer& d) { return d == 2; });
}

FPAbelianGroup direct_sum(const FPAbelianGroup& a, const FPAbelianGroup& b) {
  // Recombine through a diagonal presentation so the invariant-factor chain is restored.
  std::vector<Integer> diag = a.torsion;
  diag.insert(diag.end(), b.torsion.begin(), b.torsion.end());
  const std::size_t n = diag.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
  FPAbelianGroup t = FPAbelianGroup::from_invariant_factors(n, smith_normal_form(m).diagonal());
  t.rank = a.rank + b.rank;
  return t;
}

FPAbelianGroup cokernel_of_rows(const Matrix& m) {
  if (m.rows() == 0) {
    FPAbelianGroup g;
    g.rank = m.cols();
    return g;
  }
  return FPAbelianGroup::from_invariant_factors(m.cols(), smith_normal_form(m).diagonal());
}

std::string to_text(const FPAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::vector<std::string> parts;
  if (g.rank == 1) parts.emplace_back("Z");
  else if (g.rank > 1) parts.push_back("Z^" + std::to_string(g.rank));
  // Group equal factors: Z/2 + Z/2 -> (Z/2)^2
  for (std::size_t i = 0; i < g.torsion.size();) {
    std::size_t j = i;
    while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
    const std::string base = "Z/" + g.torsion[i].get_str();
    parts.push_back(j - i == 1 ? base : "(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
  return os.str();
}

nlohmann::ordered_json to_json(const FPAbelianGroup& g) {
  nlohmann::ordered_json j;
  j["rank"] = g.rank;
  auto t = nlohmann::ordered_json::array();
  for (const auto& d : g.torsion) t.push_back(d.get_str());
  j["torsion"] = std::move(t);
  return j;
}

HomologyResult homology_at(const ChainSegment& seg) {
  const std::size_t m = seg.mid_orders.size();
  const std::size_t k = seg.next_orders.size();
  const std::size_t p = seg.prev_orders.size();
  if (seg.outgoing.rows() != k || (k > 0 && seg.outgoing.cols() != m)) {
    throw Error(ErrorCode::InvalidArgument, "outgoing matrix shape does not match the chain groups");
  }
  if (p > 0 && (seg.incoming.rows() != m || seg.incoming.cols() != p)) {
    throw Error(ErrorCode::InvalidArgument, "incoming matrix shape does not match the chain groups");
  }

  // Complex condition: outgoing * incoming vanishes modulo the orders of the next group.
  if (p > 0 && k > 0) {
    const Matrix comp = seg.outgoing * seg.incoming;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        const Integer& o = seg.next_orders[i];
        if ((o == 0 && comp(i, j) != 0) || (o != 0 && !divides(o, comp(i, j)))) {
          throw Error(ErrorCode::NotAComplex, "composite of consecutive differentials is nonzero");
        }
      }
  }

  HomologyResult out;
  if (m == 0) {
    out.cycles = Matrix(0, 0);
    return out;
  }

  // Cycles: x with outgoing * x in the relation lattice of the next group.
  if (k == 0) {
    out.cycles = Matrix::identity(m);
  } else {
    Matrix aug(k, m + k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < m; ++j) aug(i, j) = seg.outgoing(i, j);
      aug(i, m + i) = -seg.next_orders[i];
    }
    const Matrix ker = integer_kernel(aug);
    Matrix proj(0, m);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      auto row = ker.row(r);
      row.resize(m);
      proj.append_row(row);
    }
    out.cycles = proj.rows() ? hermite_normal_form(proj) : Matrix(0, m);
  }

  // Boundaries: images of the previous group plus the torsion relations of mid.
  Matrix rel(0, out.cycles.rows());
  auto add_boundary = [&](const std::vector<Integer>& v) {
    auto coords = hnf_coordinates(out.cycles, v);
    if (!coords) throw Error(ErrorCode::NotAComplex, "a boundary is not a cycle");
    if (!coords->empty()) rel.append_row(*coords);
  };
  for (std::size_t j = 0; j < p; ++j) add_boundary(seg.incoming.col(j));
  for (std::size_t i = 0; i < m; ++i) {
    if (seg.mid_orders[i] == 0) continue;
    std::vector<Integer> v(m, Integer(0));
    v[i] = seg.mid_orders[i];
    add_boundary(v);
  }
  out.group = cokernel_of_rows(rel.rows() ? rel : Matrix(0, out.cycles.rows()));
  return out;
}

}  // namespace jfl
