#include <doctest.h>

#include <set>

#include "jfl/jacobi.hpp"
#include "jfl/jf_ring.hpp"
#include "support.hpp"

using namespace jfl;
using test::error_code;

namespace {

const JFElement b2 = JFElement::b2(), b3 = JFElement::b3(), b4 = JFElement::b4(), b8 = JFElement::b8();
const JFElement one = JFElement::constant(Integer(1));

JFElement c(long k) { return JFElement::constant(Integer(k)); }

// Monomials b2^i b3^j b4^e b8^l of degree d with e <= 1, by brute force.
std::set<JFMonomial> enumerate_normal(int d) {
  std::set<JFMonomial> out;
  for (int i = 0; 4 * i <= d; ++i)
    for (int j = 0; 6 * j <= d; ++j)
      for (int e = 0; e <= 1; ++e)
        for (int l = 0; 16 * l <= d; ++l)
          if (4 * i + 6 * j + 8 * e + 16 * l == d) out.insert({i, j, e, l});
  return out;
}

}  // namespace

TEST_CASE("normal form") {
  CHECK(JFElement::normal_form({{{0, 0, 2, 0}, Integer(1)}}) == b2 * b3 * b3 - c(4) * b8);
  const JFPolynomial sq = {{{2, 0, 0, 0}, Integer(1)}, {{1, 0, 1, 0}, Integer(2)}, {{0, 0, 2, 0}, Integer(1)}};
  CHECK(JFElement::normal_form(sq) == b2 * b2 + c(2) * b2 * b4 + b2 * b3 * b3 - c(4) * b8);
  CHECK(JFElement::normal_form({}).is_zero());
  // b4^3 = b4 (b2 b3^2 - 4 b8)
  CHECK(JFElement::normal_form({{{0, 0, 3, 0}, Integer(1)}}) == b2 * b3 * b3 * b4 - c(4) * b4 * b8);
}

TEST_CASE("multiplication") {
  CHECK(jf_mul(b4, b4) == b2 * b3 * b3 - c(4) * b8);
  CHECK(jf_mul(b2 + b4, one) == b2 + b4);
  const JFElement p = jf_mul(b2, b3);
  CHECK(p == JFElement::monomial({1, 1, 0, 0}));
  CHECK(p.degree() == 10);
  CHECK(pow(b4, 2) == jf_mul(b4, b4));
  CHECK(jf_add(b2, -b2).is_zero());
  for (const auto& [m, k] : pow(b2 + b4 + b8, 5).coeffs()) CHECK(m.is_normal());
}

TEST_CASE("degrees and homogeneity") {
  CHECK(b8.degree() == 16);
  CHECK((b2 + b4).is_homogeneous() == false);
  CHECK(error_code([&] { (void)(b2 + b4).degree(); }) == ErrorCode::Inhomogeneous);
  CHECK((b2 * b2 + b4).component(8) == b2 * b2 + b4);
  CHECK((b2 + b4).component(4) == b2);
}

TEST_CASE("degree bases") {
  CHECK(degree_basis(8) == std::vector<JFMonomial>{{2, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK(degree_basis(10) == std::vector<JFMonomial>{{1, 1, 0, 0}});
  CHECK(degree_basis(0) == std::vector<JFMonomial>{{0, 0, 0, 0}});
  CHECK(degree_basis(2).empty());
  for (int d = 0; d <= 64; d += 2) {
    CAPTURE(d);
    const auto basis = degree_basis(d);
    CHECK(std::set<JFMonomial>(basis.begin(), basis.end()) == enumerate_normal(d));
    CHECK(basis.size() == enumerate_normal(d).size());
  }
}

TEST_CASE("coordinates round trip") {
  const JFElement x = c(3) * b2 * b2 * b2 * b2 - b2 * b3 * b3 + c(7) * b8;
  const auto v = coordinates(x, 16);
  CHECK(v.size() == degree_basis(16).size());
  CHECK(from_coordinates(v, 16) == x);
}

TEST_CASE("evaluation") {
  const JFPolynomial relation = {{{0, 0, 2, 0}, Integer(1)}, {{1, 2, 0, 0}, Integer(-1)}, {{0, 0, 0, 1}, Integer(4)}};
  CHECK(eval_series(relation, 6).series.is_zero());
  const auto e1 = eval_series(one, 4);
  CHECK(e1.series == QYSeries::one(4));
  CHECK(e1.index == 0);
  const auto eb4 = eval_series(b4, 4);
  CHECK(eb4.series == gen_b4(4));
  CHECK(eb4.index == 4);
  // b2^2 and b4 share index 4; b2^2 - 24 b4 evaluates to c4 a^4.
  const auto c4 = eval_series(b2 * b2 - c(24) * b4, 6);
  const QYSeries a = gen_a(6);
  CHECK(c4.series == eisenstein_c4(6) * a * a * a * a);
  // Mixed indices are padded with powers of a.
  const auto mixed = eval_series(b2 * b3 + b4 * b8, 4);
  CHECK(mixed.index == 12);
}

TEST_CASE("image lattice") {
  CHECK(in_image(c(2) * b2));
  CHECK_FALSE(in_image(b2));
  CHECK(cokernel(8).is_trivial());
  const FPAbelianGroup g20 = cokernel(20);
  CHECK(g20.rank == 0);
  CHECK(g20.torsion == std::vector<Integer>{2, 2});
  CHECK(odd_b2_classes(20) == std::vector<JFMonomial>{{5, 0, 0, 0}, {1, 0, 0, 1}});
  CHECK(odd_b2_classes_generate_cokernel(20));
  CHECK(error_code([&] { in_image(b2 + b4); }) == ErrorCode::Inhomogeneous);
  for (const auto& g : image_generators()) CHECK(in_image(g));
  CHECK(image_generators().size() == 7);
}

TEST_CASE("cokernel ranks follow the count of b2^(2m+1) b8^n") {
  for (int d = 0; d <= 48; d += 2) {
    std::size_t count = 0;
    for (int m = 0; 4 * (2 * m + 1) <= d; ++m)
      if ((d - 4 * (2 * m + 1)) % 16 == 0) ++count;
    CAPTURE(d);
    CHECK(odd_b2_classes(d).size() == count);
    CHECK(cokernel(d).torsion.size() == count);
    CHECK(cokernel(d).rank == 0);
  }
}

TEST_CASE("text and JSON") {
  CHECK(to_text(c(387) * b4 + c(2) * b2 * b2) == "387*b4 + 2*b2^2");
  CHECK(to_text(JFElement{}) == "0");
  CHECK(to_text(-b2 * b4 + c(2) * b2 * b2 * b2) == "-b2*b4 + 2*b2^3");
  const JFElement x = c(-5) * b2 * b3 * b3 + JFElement::constant(Integer("99999999999999999999")) * b8;
  CHECK(jf_from_json(to_json(x)) == x);
  CHECK(to_json(b2 * b4).dump() == R"([{"a":1,"b":0,"e":1,"g":0,"c":"1"}])");
}

TEST_CASE("exact division") {
  CHECK(divide_exact(c(4) * b2 * b2, Integer(4)) == b2 * b2);
  CHECK(error_code([&] { divide_exact(c(3) * b2, Integer(2)); }) == ErrorCode::NonDivisible);
}
