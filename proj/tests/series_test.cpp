#include <doctest.h>

#include "support.hpp"

using namespace jfl;
using test::error_code;
using test::laurent_series;

namespace {

QYSeries y_half_minus() { return laurent_series({{1, 1}, {-1, -1}}); }
QYSeries y_half_plus() { return laurent_series({{1, 1}, {-1, 1}}); }

}  // namespace

TEST_CASE("make sums duplicates and drops zeros") {
  const SeriesTerm one[] = {{0, 0, Integer(1)}};
  CHECK(QYSeries::make(one, 4) == QYSeries::one(4));
  const SeriesTerm half[] = {{0, 1, Integer(1)}, {0, -1, Integer(-1)}};
  const QYSeries h = QYSeries::make(half, 4);
  CHECK(h.parity() == Parity::HalfIntegral);
  CHECK(to_text(h) == "-y^(-1/2) + y^(1/2)");
  const SeriesTerm cancel[] = {{0, 0, Integer(2)}, {0, 0, Integer(-2)}};
  CHECK(QYSeries::make(cancel, 4).is_zero());
}

TEST_CASE("make rejects mixed parity and bad exponents") {
  const SeriesTerm mixed[] = {{0, 0, Integer(1)}, {0, 1, Integer(1)}};
  CHECK(error_code([&] { QYSeries::make(mixed, 4); }) == ErrorCode::MixedParity);
  const SeriesTerm past[] = {{4, 0, Integer(1)}};
  CHECK(error_code([&] { QYSeries::make(past, 4); }) == ErrorCode::BadExponent);
  const SeriesTerm negative[] = {{-1, 0, Integer(1)}};
  CHECK(error_code([&] { QYSeries::make(negative, 4); }) == ErrorCode::BadExponent);
}

TEST_CASE("addition and scaling") {
  CHECK((QYSeries::one(4) + scale(Integer(-1), QYSeries::one(4))).is_zero());
  const QYSeries yh = laurent_series({{1, 1}});
  CHECK(yh + yh == laurent_series({{1, 2}}));
  CHECK(scale(Integer(3), laurent_series({{2, 1}, {-2, -1}})) == laurent_series({{2, 3}, {-2, -3}}));
  CHECK(error_code([&] { (void)(QYSeries::one(4) + yh); }) == ErrorCode::MixedParity);
}

TEST_CASE("multiplication") {
  CHECK(y_half_minus() * y_half_plus() == laurent_series({{2, 1}, {-2, -1}}));
  CHECK(y_half_minus() * y_half_minus() == laurent_series({{2, 1}, {0, -2}, {-2, 1}}));
  CHECK(y_half_minus() * QYSeries::one(4) == y_half_minus());
  CHECK((y_half_minus() * y_half_plus()).parity() == Parity::Integral);
}

TEST_CASE("truncations combine to the smaller one") {
  const QYSeries q = QYSeries::monomial(1, 0, Integer(1), 3);
  const QYSeries p = q * QYSeries::one(2);
  CHECK(p.truncation() == 2);
  CHECK(p.coefficient(1, 0) == 1);
  CHECK((q * q).coefficient(2, 0) == 1);
  CHECK((q * q * q).is_zero());
}

TEST_CASE("exact division") {
  const QYSeries sq = laurent_series({{2, 1}, {0, -2}, {-2, 1}});
  CHECK(exact_divide(sq, y_half_minus()) == y_half_minus());
  // (y + 1) = (y^(1/2) - y^(-1/2)) (y^(1/2) + ...) leaves a remainder.
  CHECK(error_code([&] { exact_divide(laurent_series({{2, 1}, {0, 1}}), y_half_minus()); }) ==
        ErrorCode::NonDivisible);
  CHECK(error_code([&] { divide_exact(laurent_series({{0, 3}}), Integer(2)); }) == ErrorCode::NonDivisible);
  CHECK(divide_exact(laurent_series({{0, 4}, {2, -6}}), Integer(2)) == laurent_series({{0, 2}, {2, -3}}));
}

TEST_CASE("exact division across q-orders") {
  // 1 / (1 - q) = 1 + q + q^2 + ..., so (1 - q^3) / (1 - q) = 1 + q + q^2.
  const SeriesTerm den[] = {{0, 0, Integer(1)}, {1, 0, Integer(-1)}};
  const SeriesTerm num[] = {{0, 0, Integer(1)}, {3, 0, Integer(-1)}};
  const SeriesTerm quo[] = {{0, 0, Integer(1)}, {1, 0, Integer(1)}, {2, 0, Integer(1)}};
  CHECK(exact_divide(QYSeries::make(num, 5), QYSeries::make(den, 5)) == QYSeries::make(quo, 5));
}

TEST_CASE("coefficient lookup") {
  const QYSeries f = laurent_series({{2, 1}, {0, -2}, {-2, 1}});
  CHECK(f.coefficient(0, 0) == -2);
  CHECK(f.coefficient(0, 2) == 1);
  CHECK(f.coefficient(3, 0) == 0);
  CHECK(error_code([&] { f.coefficient(4, 0); }) == ErrorCode::BadExponent);
}

TEST_CASE("specialization at z = 0") {
  CHECK(specialize_z0(laurent_series({{2, 1}, {0, 10}, {-2, 1}})).at(0) == 12);
  CHECK(specialize_z0(y_half_minus()).at(0) == 0);
  CHECK(specialize_z0(laurent_series({{2, 1}, {0, 4}, {-2, 1}})).at(0) == 6);
}

TEST_CASE("text rendering is ascending in q then y") {
  const SeriesTerm t[] = {{1, 2, Integer(-3)}, {0, 0, Integer(5)}, {1, -2, Integer(1)}, {0, 2, Integer(1)}};
  CHECK(to_text(QYSeries::make(t, 2)) == "5 + y + q*y^-1 - 3*q*y");
  CHECK(to_text(QYSeries(3)) == "0");
}

TEST_CASE("JSON round trip") {
  const SeriesTerm t[] = {{0, 1, Integer(1)}, {2, -3, Integer("123456789012345678901234567890")}};
  const QYSeries f = QYSeries::make(t, 3);
  const auto j = to_json(f);
  CHECK(series_from_json(j) == f);
  CHECK(nlohmann::ordered_json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("Laurent division") {
  CHECK(laurent_divide({{2, 1}, {-2, -1}}, {{1, 1}, {-1, -1}}) == Laurent{{1, 1}, {-1, 1}});
  CHECK(laurent_divide({{3, 1}, {-3, -1}}, {{1, 1}, {-1, -1}}) == Laurent{{2, 1}, {0, 1}, {-2, 1}});
}
