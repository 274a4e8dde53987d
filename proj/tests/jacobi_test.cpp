#include <doctest.h>

#include "jfl/jacobi.hpp"
#include "support.hpp"

using namespace jfl;
using test::laurent_series;

namespace {

// Jacobi triple product in sum form with q^(1/8) removed:
// sum_n (-1)^n q^(n(n+1)/2) y^(n+1/2).
QYSeries theta_sum(int truncation) {
  std::vector<SeriesTerm> t;
  for (int n = -40; n <= 40; ++n) {
    const int e = n * (n + 1) / 2;
    if (e < truncation) t.push_back({e, 2 * n + 1, Integer(n % 2 == 0 ? 1 : -1)});
  }
  return QYSeries::make(t, truncation);
}

// eta^3 / q^(1/8) = sum_{n >= 0} (-1)^n (2n + 1) q^(n(n+1)/2).
QYSeries eta_cubed(int truncation) {
  std::vector<SeriesTerm> t;
  for (int n = 0; n * (n + 1) / 2 < truncation; ++n)
    t.push_back({n * (n + 1) / 2, 0, Integer((n % 2 == 0 ? 1 : -1) * (2 * n + 1))});
  return QYSeries::make(t, truncation);
}

Integer divisor_power_sum(int n, int k) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer p = 1;
      for (int i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}

// q prod (1 - q^n)^24 by repeated naive multiplication.
std::vector<Integer> delta_oracle(int truncation) {
  std::vector<Integer> c(truncation, Integer(0));
  if (truncation > 1) c[1] = 1;
  for (int n = 1; n < truncation; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = truncation - 1; i >= n; --i) c[i] -= c[i - n];
  return c;
}

}  // namespace

TEST_CASE("generator metadata") {
  CHECK(index_of(Generator::A) == 1);
  CHECK(index_of(Generator::B8) == 8);
  CHECK(degree_of(Generator::A) == 0);
  CHECK(degree_of(Generator::B2) == 4);
  CHECK(degree_of(Generator::B3) == 6);
  CHECK(degree_of(Generator::B4) == 8);
  CHECK(degree_of(Generator::B8) == 16);
  CHECK(parse_generator("b4") == Generator::B4);
  CHECK_FALSE(parse_generator("b5").has_value());
}

TEST_CASE("a against the triple product sum") {
  const int n = 12;
  CHECK(gen_a(n) * eta_cubed(n) == theta_sum(n));
  CHECK(gen_a(n).order(0) == Laurent{{1, 1}, {-1, -1}});
  CHECK(specialize_z0(gen_a(n)) == QSeries(n, Integer(0)));
  CHECK((gen_a(n) * gen_a(n)).order(0) == Laurent{{2, 1}, {0, -2}, {-2, 1}});
}

TEST_CASE("theta quotients") {
  CHECK(theta_quotient(2, 4).order(0) == Laurent{{1, 1}, {-1, 1}});
  CHECK(theta_quotient(3, 4).order(0) == Laurent{{2, 1}, {0, 1}, {-2, 1}});
  CHECK(specialize_z0(theta_quotient(2, 4)).at(0) == 2);
  // theta11(3z) / theta11(z) at z = 0 is 3 in every order.
  CHECK(specialize_z0(theta_quotient(3, 6)) == QSeries{3, 0, 0, 0, 0, 0});
  // Numerators agree with theta_sum(y -> y^k) divided by the denominator.
  CHECK(theta_quotient(2, 8) * theta_sum(8) == theta_sum(8).substitute_y_power(2));
}

TEST_CASE("generator anchors") {
  CHECK(gen_b4(3).order(0) == Laurent{{2, 1}, {0, 4}, {-2, 1}});
  CHECK(specialize_z0(gen_b2(3)).at(0) == 12);
  CHECK(specialize_z0(gen_b3(3)).at(0) == 2);
  CHECK((gen_b2(3) * gen_b2(3)).order(0) == Laurent{{4, 1}, {2, 20}, {0, 102}, {-2, 20}, {-4, 1}});
  CHECK(gen_b8(3).order(0) == Laurent{{2, 1}, {0, 1}, {-2, 1}});
  CHECK(gen_b2(3).order(0) == Laurent{{2, 1}, {0, 10}, {-2, 1}});
}

TEST_CASE("the ring relation") {
  // q^0 by hand: 4(y + 1 + 1/y) + (y + 4 + 1/y)^2 - (y + 10 + 1/y)(y + 2 + 1/y) = 0.
  const QYSeries b8 = laurent_series({{2, 1}, {0, 1}, {-2, 1}}, 1);
  const QYSeries b4 = laurent_series({{2, 1}, {0, 4}, {-2, 1}}, 1);
  const QYSeries b2 = laurent_series({{2, 1}, {0, 10}, {-2, 1}}, 1);
  const QYSeries b3 = laurent_series({{1, 1}, {-1, 1}}, 1);
  CHECK((scale(Integer(4), b8) + b4 * b4 - b2 * b3 * b3).is_zero());
  CHECK(verify_relation(1));
  CHECK(verify_relation(8));
  CHECK(relation_defect(8).is_zero());
  const QYSeries perturbed = relation_defect(8) + QYSeries::one(8);
  CHECK_FALSE(perturbed.is_zero());
}

TEST_CASE("modular forms against divisor sums and the product formula") {
  const int n = 10;
  const QYSeries c4 = eisenstein_c4(n), c6 = eisenstein_c6(n), d = discriminant(n);
  const auto delta = delta_oracle(n);
  for (int k = 0; k < n; ++k) {
    CAPTURE(k);
    CHECK(c4.coefficient(k, 0) == (k == 0 ? Integer(1) : 240 * divisor_power_sum(k, 3)));
    CHECK(c6.coefficient(k, 0) == (k == 0 ? Integer(1) : -504 * divisor_power_sum(k, 5)));
    CHECK(d.coefficient(k, 0) == delta[k]);
  }
  CHECK(c4.coefficient(1, 0) == 240);
  CHECK(d.coefficient(1, 0) == 1);
  CHECK(d.coefficient(2, 0) == -24);
  CHECK(weierstrass_c6(n) == -c6);
  CHECK(modular_relation_defect(8).is_zero());
}

TEST_CASE("modular form embeddings") {
  const auto checks = mf_embedding_checks(8);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.holds());
  }
  CHECK(verify_mf_embedding(8));
  const Calibration cal = calibrate(6);
  CHECK(cal.consistent);
  CHECK(cal.a_sign == 1);
  CHECK(cal.c6_is_minus_e6);
}

TEST_CASE("generator table is memoized and consistent") {
  const auto t1 = generator_table(5);
  const auto t2 = generator_table(5);
  CHECK(t1 == t2);
  CHECK(t1->get(Generator::B4) == gen_b4(5));
  CHECK(generator_table(3)->b2 == gen_b2(3));
}

TEST_CASE("definitional equalities, parity and a-divisibility") {
  const int n = 6;
  CHECK(gen_b3(n) == theta_quotient(2, n));
  CHECK(gen_b8(n) == theta_quotient(3, n));
  const auto t = generator_table(n);
  for (Generator g : kAllGenerators) {
    CAPTURE(name_of(g));
    CHECK(static_cast<int>(t->get(g).parity()) == index_of(g) % 2);
  }
  CHECK((t->b2 * t->b3).parity() == Parity::HalfIntegral);
  CHECK(exact_divide(t->b3 * t->a, t->a) == t->b3);
  CHECK(exact_divide(t->b2 * t->a * t->a, t->a) == t->b2 * t->a);
}
