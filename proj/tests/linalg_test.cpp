#include <doctest.h>

#include <numeric>

#include "jfl/linalg.hpp"
#include "support.hpp"

using namespace jfl;
using test::error_code;

namespace {

Matrix rows(const std::vector<std::vector<long>>& r) {
  const std::size_t cols = r.empty() ? 0 : r.front().size();
  std::vector<std::vector<Integer>> out;
  for (const auto& row : r) out.emplace_back(row.begin(), row.end());
  return Matrix::from_rows(out, cols);
}

FPAbelianGroup group(std::size_t rank, std::vector<Integer> torsion = {}) {
  FPAbelianGroup g;
  g.rank = rank;
  g.torsion = std::move(torsion);
  return g;
}

}  // namespace

TEST_CASE("Smith form of a 2x2 matrix against gcd and determinant") {
  const Matrix m = rows({{2, 4}, {6, 8}});
  // d1 is the gcd of the entries and d1 d2 = |det|.
  const Integer g = gcd(gcd(m(0, 0), m(0, 1)), gcd(m(1, 0), m(1, 1)));
  const Integer det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  CHECK(g == 2);
  CHECK(det == -8);
  const SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal() == std::vector<Integer>{g, abs(det) / g});
  CHECK(s.D == rows({{2, 0}, {0, 4}}));
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
}

TEST_CASE("Smith form of identity and zero") {
  const Matrix id = Matrix::identity(3);
  CHECK(smith_normal_form(id).D == id);
  CHECK(smith_normal_form(id).rank == 3);
  const Matrix z(2, 3);
  CHECK(smith_normal_form(z).D == z);
  CHECK(smith_normal_form(z).rank == 0);
}

TEST_CASE("determinant") {
  CHECK(determinant(rows({{2, 4}, {6, 8}})) == -8);
  CHECK(determinant(rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(determinant(rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("Hermite form and lattice membership") {
  const Matrix h = hermite_normal_form(rows({{2, 4}, {6, 8}}));
  CHECK(h == rows({{2, 0}, {0, 4}}));
  CHECK(in_row_lattice(h, {Integer(2), Integer(4)}));
  CHECK_FALSE(in_row_lattice(h, {Integer(1), Integer(0)}));
  CHECK(hnf_coordinates(h, {Integer(4), Integer(-4)}) == std::vector<Integer>{2, -1});
  const Matrix dup = hermite_normal_form(rows({{1, 1}, {2, 2}}));
  CHECK(dup == rows({{1, 1}}));
}

TEST_CASE("integer kernel") {
  const Matrix k = integer_kernel(rows({{1, 2, 3}}));
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i) CHECK(k(i, 0) + 2 * k(i, 1) + 3 * k(i, 2) == 0);
  CHECK(integer_kernel(Matrix::identity(2)).rows() == 0);
}

TEST_CASE("cokernels") {
  CHECK(cokernel_of_rows(rows({{2, 0}, {0, 4}})) == group(0, {2, 4}));
  CHECK(cokernel_of_rows(rows({{2, 0}})) == group(1, {2}));
  CHECK(cokernel_of_rows(rows({{6, 0}, {0, 4}})) == group(0, {2, 12}));
  CHECK(to_text(group(2, {2})) == "Z^2 + Z/2");
  CHECK(to_text(group(0, {2, 2})) == "(Z/2)^2");
  CHECK(to_text(group(0)) == "0");
}

TEST_CASE("homology of short complexes") {
  SUBCASE("cokernel of multiplication by 2") {
    ChainSegment c{rows({{2}}), Matrix(0, 1), {Integer(0)}, {Integer(0)}, {}};
    CHECK(homology_at(c).group == group(0, {2}));
  }
  SUBCASE("zero differentials") {
    ChainSegment c{Matrix(2, 0), Matrix(0, 2), {}, {Integer(0), Integer(2)}, {}};
    CHECK(homology_at(c).group == group(1, {2}));
  }
  SUBCASE("free class hitting a 2-torsion class") {
    // Z{b2} -> (Z/2){h1^3}, b2 -> h1^3: kernel 2Z.
    ChainSegment c{Matrix(1, 0), rows({{1}}), {}, {Integer(0)}, {Integer(2)}};
    const auto h = homology_at(c);
    CHECK(h.group == group(1));
    CHECK(h.cycles == rows({{2}}));
  }
  SUBCASE("not a complex") {
    ChainSegment c{rows({{1}}), rows({{1}}), {Integer(0)}, {Integer(0)}, {Integer(0)}};
    CHECK(error_code([&] { homology_at(c); }) == ErrorCode::NotAComplex);
  }
  SUBCASE("composite vanishing mod 2 is a complex") {
    ChainSegment c{rows({{1}}), rows({{2}}), {Integer(0)}, {Integer(0)}, {Integer(2)}};
    CHECK(homology_at(c).group == group(0));
  }
}

TEST_CASE("group JSON") {
  CHECK(to_json(group(1, {2, 2})).dump() == R"({"rank":1,"torsion":["2","2"]})");
}
