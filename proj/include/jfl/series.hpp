#pragma once

// Truncated two-variable series  sum c(n, r) q^n y^r  with n >= 0 and r in Z or Z + 1/2.
// The y-exponent is stored doubled (y2 = 2r) so that all arithmetic stays in integers.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jfl/integer.hpp"

namespace jfl {

enum class Parity : int { Integral = 0, HalfIntegral = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline Parity parity_of(int y2) { return (y2 % 2 == 0) ? Parity::Integral : Parity::HalfIntegral; }

struct SeriesTerm {
  int q;
  int y2;
  Integer coeff;
};

// A Laurent polynomial in y^(1/2): doubled exponent -> nonzero coefficient.
using Laurent = std::map<int, Integer>;

// Truncated integer q-series, entry n is the coefficient of q^n.
using QSeries = std::vector<Integer>;

class QYSeries {
 public:
  using Key = std::pair<int, int>;  // (q exponent, doubled y exponent)
  using TermMap = std::map<Key, Integer>;

  // The zero series.
  QYSeries(int truncation, Parity parity = Parity::Integral);

  // Sums duplicates and drops zeros. Throws MixedParity / BadExponent.
  static QYSeries make(std::span<const SeriesTerm> entries, int truncation);
  static QYSeries one(int truncation);
  static QYSeries monomial(int q, int y2, const Integer& c, int truncation);
  // A series in q alone.
  static QYSeries from_q_series(const QSeries& coeffs);

  int truncation() const noexcept { return truncation_; }
  Parity parity() const noexcept { return parity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Throws BadExponent for n outside [0, truncation).
  Integer coefficient(int n, int y2) const;
  // The Laurent polynomial multiplying q^n.
  Laurent order(int n) const;
  // Smallest q-exponent with a nonzero term; truncation() if zero.
  int valuation() const;
  // Largest |y2| among stored terms (0 for the zero series).
  int y_span() const;

  QYSeries truncated(int truncation) const;
  // y -> y^k.
  QYSeries substitute_y_power(int k) const;
  // y -> 1 on each q-order; the result is a pure q-series.
  QYSeries at_y_one() const;

  friend bool operator==(const QYSeries& a, const QYSeries& b) = default;

  QYSeries& operator+=(const QYSeries& other);
  QYSeries& operator-=(const QYSeries& other);

 private:
  void add_term(int q, int y2, const Integer& c);

  int truncation_;
  Parity parity_;
  TermMap terms_;
};

QYSeries operator+(const QYSeries& f, const QYSeries& g);
QYSeries operator-(const QYSeries& f, const QYSeries& g);
QYSeries operator-(const QYSeries& f);
QYSeries operator*(const QYSeries& f, const QYSeries& g);
QYSeries scale(const Integer& k, const QYSeries& f);
QYSeries pow(const QYSeries& f, int exponent);

// Order-by-order exact quotient f / g. Throws NonDivisible.
QYSeries exact_divide(const QYSeries& f, const QYSeries& g);
// Coefficientwise division by an integer. Throws NonDivisible.
QYSeries divide_exact(const QYSeries& f, const Integer& d);

// Exact Laurent polynomial quotient p / d. Throws NonDivisible.
Laurent laurent_divide(const Laurent& p, const Laurent& d);

QSeries specialize_z0(const QYSeries& f);
// Truncated Cauchy product of q-series.
QSeries convolve(const QSeries& a, const QSeries& b);

// Reinterpret a series in Q = q^(1/2) as a series in q. Every stored Q-exponent must be even;
// an odd one is an Internal error.
QYSeries halve_q_exponents(const QYSeries& f_in_sqrt_q);

std::string to_text(const QYSeries& f);
std::string to_text(const Laurent& p);
nlohmann::ordered_json to_json(const QYSeries& f);
QYSeries series_from_json(const nlohmann::ordered_json& j);

}  // namespace jfl
