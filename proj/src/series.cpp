#include "jfl/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "jfl/error.hpp"

namespace jfl {

namespace {

void require_positive_truncation(int truncation) {
  if (truncation < 1) throw Error(ErrorCode::InvalidArgument, "truncation must be positive");
}

void require_same_parity(const QYSeries& f, const QYSeries& g) {
  if (f.parity() != g.parity()) throw Error(ErrorCode::MixedParity, "operands have different y-parity");
}

std::string y_factor(int y2) {
  if (y2 % 2 == 0) {
    int e = y2 / 2;
    if (e == 1) return "y";
    return "y^" + std::to_string(e);
  }
  return "y^(" + std::to_string(y2) + "/2)";
}

}  // namespace

QYSeries::QYSeries(int truncation, Parity parity) : truncation_(truncation), parity_(parity) {
  require_positive_truncation(truncation);
}

void QYSeries::add_term(int q, int y2, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{q, y2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QYSeries QYSeries::make(std::span<const SeriesTerm> entries, int truncation) {
  require_positive_truncation(truncation);
  Parity parity = entries.empty() ? Parity::Integral : parity_of(entries.front().y2);
  QYSeries out(truncation, parity);
  for (const auto& e : entries) {
    if (e.q < 0 || e.q >= truncation) {
      throw Error(ErrorCode::BadExponent, "q-exponent " + std::to_string(e.q) + " outside [0, " +
                                              std::to_string(truncation) + ")");
    }
    if (parity_of(e.y2) != parity) throw Error(ErrorCode::MixedParity, "entries disagree on y2 mod 2");
    out.add_term(e.q, e.y2, e.coeff);
  }
  return out;
}

QYSeries QYSeries::one(int truncation) { return monomial(0, 0, Integer(1), truncation); }

QYSeries QYSeries::monomial(int q, int y2, const Integer& c, int truncation) {
  SeriesTerm t{q, y2, c};
  return make(std::span<const SeriesTerm>(&t, 1), truncation);
}

QYSeries QYSeries::from_q_series(const QSeries& coeffs) {
  QYSeries out(static_cast<int>(coeffs.size()));
  for (std::size_t n = 0; n < coeffs.size(); ++n) out.add_term(static_cast<int>(n), 0, coeffs[n]);
  return out;
}

Integer QYSeries::coefficient(int n, int y2) const {
  if (n < 0 || n >= truncation_) {
    throw Error(ErrorCode::BadExponent, "q^" + std::to_string(n) + " is past the truncation " +
                                            std::to_string(truncation_));
  }
  auto it = terms_.find(Key{n, y2});
  return it == terms_.end() ? Integer(0) : it->second;
}

Laurent QYSeries::order(int n) const {
  Laurent out;
  for (auto it = terms_.lower_bound(Key{n, std::numeric_limits<int>::min()});
       it != terms_.end() && it->first.first == n; ++it) {
    out.emplace(it->first.second, it->second);
  }
  return out;
}

int QYSeries::valuation() const { return terms_.empty() ? truncation_ : terms_.begin()->first.first; }

int QYSeries::y_span() const {
  int span = 0;
  for (const auto& [key, c] : terms_) span = std::max(span, std::abs(key.second));
  return span;
}

QYSeries QYSeries::truncated(int truncation) const {
  QYSeries out(std::min(truncation, truncation_), parity_);
  for (const auto& [key, c] : terms_) {
    if (key.first < out.truncation_) out.terms_.emplace(key, c);
  }
  return out;
}

QYSeries QYSeries::substitute_y_power(int k) const {
  Parity p = (k % 2 == 0) ? Parity::Integral : parity_;
  QYSeries out(truncation_, p);
  for (const auto& [key, c] : terms_) out.add_term(key.first, key.second * k, c);
  return out;
}

QYSeries QYSeries::at_y_one() const {
  QYSeries out(truncation_, Parity::Integral);
  for (const auto& [key, c] : terms_) out.add_term(key.first, 0, c);
  return out;
}

QYSeries& QYSeries::operator+=(const QYSeries& other) {
  require_same_parity(*this, other);
  if (other.truncation_ < truncation_) *this = truncated(other.truncation_);
  for (const auto& [key, c] : other.terms_) {
    if (key.first < truncation_) add_term(key.first, key.second, c);
  }
  return *this;
}

QYSeries& QYSeries::operator-=(const QYSeries& other) {
  require_same_parity(*this, other);
  if (other.truncation_ < truncation_) *this = truncated(other.truncation_);
  for (const auto& [key, c] : other.terms_) {
    if (key.first < truncation_) add_term(key.first, key.second, -c);
  }
  return *this;
}

QYSeries operator+(const QYSeries& f, const QYSeries& g) {
  QYSeries out = f;
  out += g;
  return out;
}

QYSeries operator-(const QYSeries& f, const QYSeries& g) {
  QYSeries out = f;
  out -= g;
  return out;
}

QYSeries operator-(const QYSeries& f) { return scale(Integer(-1), f); }

QYSeries scale(const Integer& k, const QYSeries& f) {
  std::vector<SeriesTerm> terms;
  if (k != 0) {
    terms.reserve(f.terms().size());
    for (const auto& [key, c] : f.terms()) terms.push_back({key.first, key.second, k * c});
  }
  if (terms.empty()) return QYSeries(f.truncation(), f.parity());
  return QYSeries::make(terms, f.truncation());
}

QYSeries operator*(const QYSeries& f, const QYSeries& g) {
  const int n = std::min(f.truncation(), g.truncation());
  QYSeries::TermMap acc;
  Integer prod;
  for (const auto& [kf, cf] : f.terms()) {
    if (kf.first >= n) break;
    for (const auto& [kg, cg] : g.terms()) {
      if (kf.first + kg.first >= n) break;
      prod = cf * cg;
      auto [it, inserted] = acc.try_emplace(QYSeries::Key{kf.first + kg.first, kf.second + kg.second}, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::vector<SeriesTerm> terms;
  terms.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (c != 0) terms.push_back({key.first, key.second, std::move(c)});
  }
  if (terms.empty()) return QYSeries(n, f.parity() + g.parity());
  return QYSeries::make(terms, n);
}

QYSeries pow(const QYSeries& f, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  QYSeries result = QYSeries::one(f.truncation());
  QYSeries base = f;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Laurent laurent_divide(const Laurent& p, const Laurent& d) {
  if (d.empty()) throw Error(ErrorCode::NonDivisible, "division by the zero Laurent polynomial");
  Laurent rem = p;
  Laurent quot;
  if (rem.empty()) return quot;
  const int d_top = d.rbegin()->first;
  const int d_bot = d.begin()->first;
  const Integer& d_lead = d.rbegin()->second;
  const int lowest_shift = rem.begin()->first - d_bot;
  while (!rem.empty()) {
    const int shift = rem.rbegin()->first - d_top;
    if (shift < lowest_shift || !divides(d_lead, rem.rbegin()->second)) {
      throw Error(ErrorCode::NonDivisible, "Laurent division leaves remainder " + to_text(rem));
    }
    Integer c = rem.rbegin()->second / d_lead;
    quot[shift] = c;
    for (const auto& [e, dc] : d) {
      auto [it, inserted] = rem.try_emplace(e + shift, -c * dc);
      if (!inserted) {
        it->second -= c * dc;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quot;
}

QYSeries exact_divide(const QYSeries& f, const QYSeries& g) {
  if (g.is_zero()) throw Error(ErrorCode::NonDivisible, "division by the zero series");
  const int shift = g.valuation();
  const int n = std::min(f.truncation(), g.truncation()) - shift;
  if (n < 1) throw Error(ErrorCode::NonDivisible, "no precision left after dividing by q^" + std::to_string(shift));
  if (f.valuation() < shift) throw Error(ErrorCode::NonDivisible, "dividend has lower q-order than divisor");
  const Laurent lead = g.order(shift);
  const Parity parity = static_cast<Parity>((static_cast<int>(f.parity()) + static_cast<int>(g.parity())) % 2);

  std::vector<Laurent> g_orders(n);
  for (int k = 0; k < n; ++k) g_orders[k] = g.order(shift + k);
  std::vector<Laurent> h(n);
  for (int m = 0; m < n; ++m) {
    Laurent rem = f.order(shift + m);
    for (int j = 0; j < m; ++j) {
      const Laurent& gk = g_orders[m - j];
      if (gk.empty() || h[j].empty()) continue;
      for (const auto& [e1, c1] : gk) {
        for (const auto& [e2, c2] : h[j]) {
          auto [it, inserted] = rem.try_emplace(e1 + e2, -c1 * c2);
          if (!inserted) {
            it->second -= c1 * c2;
            if (it->second == 0) rem.erase(it);
          }
        }
      }
    }
    try {
      h[m] = laurent_divide(rem, lead);
    } catch (const Error& e) {
      throw Error(ErrorCode::NonDivisible, "at q^" + std::to_string(m) + ": " + e.what());
    }
  }
  std::vector<SeriesTerm> terms;
  for (int m = 0; m < n; ++m) {
    for (const auto& [e, c] : h[m]) terms.push_back({m, e, c});
  }
  if (terms.empty()) return QYSeries(n, parity);
  return QYSeries::make(terms, n);
}

QYSeries divide_exact(const QYSeries& f, const Integer& d) {
  if (d == 0) throw Error(ErrorCode::NonDivisible, "division by zero");
  std::vector<SeriesTerm> terms;
  for (const auto& [key, c] : f.terms()) {
    if (!divides(d, c)) {
      throw Error(ErrorCode::NonDivisible, "coefficient " + to_string(c) + " is not divisible by " + to_string(d));
    }
    terms.push_back({key.first, key.second, c / d});
  }
  if (terms.empty()) return QYSeries(f.truncation(), f.parity());
  return QYSeries::make(terms, f.truncation());
}

QSeries specialize_z0(const QYSeries& f) {
  QSeries out(f.truncation(), Integer(0));
  for (const auto& [key, c] : f.terms()) out[key.first] += c;
  return out;
}

QSeries convolve(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  QSeries out(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QYSeries halve_q_exponents(const QYSeries& f) {
  std::vector<SeriesTerm> terms;
  for (const auto& [key, c] : f.terms()) {
    if (key.first % 2 != 0) {
      throw Error(ErrorCode::Internal, "fractional q-exponent " + std::to_string(key.first) + "/2 survived");
    }
    terms.push_back({key.first / 2, key.second, c});
  }
  const int n = (f.truncation() + 1) / 2;
  if (terms.empty()) return QYSeries(n, f.parity());
  return QYSeries::make(terms, n);
}

std::string to_text(const QYSeries& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    const auto [n, y2] = key;
    std::vector<std::string> factors;
    if (n == 1) factors.emplace_back("q");
    else if (n != 0) factors.push_back("q^" + std::to_string(n));
    if (y2 != 0) factors.push_back(y_factor(y2));

    Integer mag = abs(c);
    const bool negative = c < 0;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;

    std::string body;
    if (mag != 1 || factors.empty()) body = mag.get_str();
    for (const auto& fac : factors) {
      if (!body.empty()) body += "*";
      body += fac;
    }
    os << body;
  }
  return os.str();
}

std::string to_text(const Laurent& p) {
  std::vector<SeriesTerm> terms;
  for (const auto& [e, c] : p) terms.push_back({0, e, c});
  if (terms.empty()) return "0";
  bool mixed = false;
  for (const auto& t : terms) mixed |= parity_of(t.y2) != parity_of(terms.front().y2);
  if (mixed) return "<mixed-parity>";
  return to_text(QYSeries::make(terms, 1));
}

nlohmann::ordered_json to_json(const QYSeries& f) {
  nlohmann::ordered_json j;
  j["truncation"] = f.truncation();
  j["parity"] = static_cast<int>(f.parity());
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [key, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["q"] = key.first;
    t["y2"] = key.second;
    t["c"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

QYSeries series_from_json(const nlohmann::ordered_json& j) {
  const int truncation = j.at("truncation").get<int>();
  const auto parity = static_cast<Parity>(j.at("parity").get<int>());
  std::vector<SeriesTerm> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({t.at("q").get<int>(), t.at("y2").get<int>(), parse_integer(t.at("c").get<std::string>())});
  }
  if (terms.empty()) return QYSeries(truncation, parity);
  QYSeries out = QYSeries::make(terms, truncation);
  if (out.parity() != parity) throw Error(ErrorCode::MixedParity, "declared parity disagrees with terms");
  return out;
}

}  // namespace jfl
