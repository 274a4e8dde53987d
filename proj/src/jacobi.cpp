#include "jfl/jacobi.hpp"

#include <map>
#include <mutex>

#include "jfl/error.hpp"

namespace jfl {

namespace {

// f * (1 - q^n y^(y2/2))
QYSeries times_one_minus(const QYSeries& f, int n, int y2) {
  if (n >= f.truncation()) return f;
  return f * (QYSeries::one(f.truncation()) - QYSeries::monomial(n, y2, Integer(1), f.truncation()));
}

// prod_{n>=1} (1 - q^n)^power as a pure q-series.
QYSeries euler_product(int power, int truncation) {
  QYSeries f = QYSeries::one(truncation);
  for (int n = 1; n < truncation; ++n) {
    for (int i = 0; i < power; ++i) f = times_one_minus(f, n, 0);
  }
  return f;
}

Integer divisor_sigma(int n, int k) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
      s += t;
    }
  }
  return s;
}

// Theta series in the variable Q = q^(1/2), truncated at Q^qtrunc, with the q^(1/8) factor
// of theta10 dropped.
struct HalfPeriodThetas {
  QYSeries th00, th01, th10;
};

HalfPeriodThetas half_period_thetas(int qtrunc) {
  std::vector<SeriesTerm> t00, t01, t10;
  for (int n = -qtrunc; n <= qtrunc; ++n) {
    if (n * n < qtrunc) {
      t00.push_back({n * n, 2 * n, Integer(1)});
      t01.push_back({n * n, 2 * n, Integer(n % 2 == 0 ? 1 : -1)});
    }
    if (n * (n + 1) < qtrunc) t10.push_back({n * (n + 1), 2 * n + 1, Integer(1)});
  }
  return {QYSeries::make(t00, qtrunc), QYSeries::make(t01, qtrunc), QYSeries::make(t10, qtrunc)};
}

// The squares xi_00^2, xi_01^2 and 4 xi_10^2, all in Q = q^(1/2).
struct XiSquares {
  QYSeries x00, x01, x10_times4;
};

XiSquares xi_squares(int truncation) {
  const int qtrunc = 2 * truncation;
  const auto th = half_period_thetas(qtrunc);
  const QYSeries c00 = th.th00.at_y_one();
  const QYSeries c01 = th.th01.at_y_one();
  // theta10(0) = 2 q^(1/8) (1 + q + q^3 + ...); the factor 2 goes into x10_times4.
  const QYSeries c10_half = divide_exact(th.th10.at_y_one(), Integer(2));
  return {exact_divide(th.th00 * th.th00, c00 * c00), exact_divide(th.th01 * th.th01, c01 * c01),
          exact_divide(th.th10 * th.th10, c10_half * c10_half)};
}

}  // namespace

int index_of(Generator g) {
  switch (g) {
    case Generator::A: return 1;
    case Generator::B2: return 2;
    case Generator::B3: return 3;
    case Generator::B4: return 4;
    case Generator::B8: return 8;
  }
  return 0;
}

int degree_of(Generator g) { return g == Generator::A ? 0 : 2 * index_of(g); }

std::string_view name_of(Generator g) {
  switch (g) {
    case Generator::A: return "a";
    case Generator::B2: return "b2";
    case Generator::B3: return "b3";
    case Generator::B4: return "b4";
    case Generator::B8: return "b8";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view name) {
  for (Generator g : kAllGenerators) {
    if (name_of(g) == name) return g;
  }
  return std::nullopt;
}

QYSeries theta11_product(int k, int truncation) {
  const SeriesTerm lead[] = {{0, k, Integer(1)}, {0, -k, Integer(-1)}};
  QYSeries f = QYSeries::make(lead, truncation);
  for (int n = 1; n < truncation; ++n) {
    f = times_one_minus(f, n, 2 * k);
    f = times_one_minus(f, n, -2 * k);
    f = times_one_minus(f, n, 0);
  }
  return f;
}

QYSeries gen_a(int truncation) {
  // theta11 / eta^3: one Euler factor is already inside theta11_product.
  return exact_divide(theta11_product(1, truncation), euler_product(3, truncation));
}

QYSeries theta_quotient(int k, int truncation) {
  if (k != 2 && k != 3) throw Error(ErrorCode::InvalidArgument, "theta_quotient supports k = 2, 3");
  try {
    return exact_divide(theta11_product(k, truncation), theta11_product(1, truncation));
  } catch (const Error& e) {
    throw Error(ErrorCode::Internal, std::string("theta quotient not exact: ") + e.what());
  }
}

QYSeries gen_b2(int truncation) {
  const auto xi = xi_squares(truncation);
  return halve_q_exponents(scale(Integer(4), xi.x00 + xi.x01) + xi.x10_times4);
}

QYSeries gen_b3(int truncation) { return theta_quotient(2, truncation); }

QYSeries gen_b4(int truncation) {
  // 2 (xi00^2 xi01^2 + xi00^2 xi10^2 + xi01^2 xi10^2)
  const auto xi = xi_squares(truncation);
  const QYSeries doubled = scale(Integer(4), xi.x00 * xi.x01) + (xi.x00 + xi.x01) * xi.x10_times4;
  return halve_q_exponents(divide_exact(doubled, Integer(2)));
}

QYSeries gen_b8(int truncation) { return theta_quotient(3, truncation); }

QYSeries eisenstein_c4(int truncation) {
  QSeries c(truncation, Integer(0));
  c[0] = 1;
  for (int n = 1; n < truncation; ++n) c[n] = 240 * divisor_sigma(n, 3);
  return QYSeries::from_q_series(c);
}

QYSeries eisenstein_c6(int truncation) {
  QSeries c(truncation, Integer(0));
  c[0] = 1;
  for (int n = 1; n < truncation; ++n) c[n] = -504 * divisor_sigma(n, 5);
  return QYSeries::from_q_series(c);
}

QYSeries weierstrass_c6(int truncation) { return -eisenstein_c6(truncation); }

QYSeries discriminant(int truncation) {
  QYSeries q = truncation > 1 ? QYSeries::monomial(1, 0, Integer(1), truncation) : QYSeries(truncation);
  return q * euler_product(24, truncation);
}

const QYSeries& GeneratorTable::get(Generator g) const {
  switch (g) {
    case Generator::A: return a;
    case Generator::B2: return b2;
    case Generator::B3: return b3;
    case Generator::B4: return b4;
    case Generator::B8: return b8;
  }
  throw Error(ErrorCode::Internal, "unknown generator");
}

std::shared_ptr<const GeneratorTable> generator_table(int truncation) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const GeneratorTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(truncation); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const GeneratorTable>(GeneratorTable{
      truncation, gen_a(truncation), gen_b2(truncation), gen_b3(truncation), gen_b4(truncation),
      gen_b8(truncation)});
  std::lock_guard lock(mu);
  return cache.try_emplace(truncation, std::move(table)).first->second;
}

QYSeries relation_defect(int truncation) {
  const auto t = generator_table(truncation);
  return scale(Integer(4), t->b8) + t->b4 * t->b4 - t->b2 * t->b3 * t->b3;
}

bool verify_relation(int truncation) { return relation_defect(truncation).is_zero(); }

QYSeries modular_relation_defect(int truncation) {
  const QYSeries c4 = eisenstein_c4(truncation);
  const QYSeries c6 = eisenstein_c6(truncation);
  return c4 * c4 * c4 - c6 * c6 - scale(Integer(1728), discriminant(truncation));
}

namespace {

std::vector<IdentityCheck> embedding_checks(int truncation, const QYSeries& a, const QYSeries& c6) {
  const auto t = generator_table(truncation);
  const QYSeries& b2 = t->b2;
  const QYSeries& b3 = t->b3;
  const QYSeries& b4 = t->b4;
  const QYSeries& b8 = t->b8;
  const QYSeries b3sq = b3 * b3;
  const QYSeries b2sq = b2 * b2;

  std::vector<IdentityCheck> out;
  out.push_back({"c4*a^4 = b2^2 - 24*b4",
                 eisenstein_c4(truncation) * pow(a, 4) - (b2sq - scale(Integer(24), b4))});
  out.push_back({"c6*a^6 = -b2^3 + 36*b2*b4 - 216*b3^2",
                 c6 * pow(a, 6) - (-(b2sq * b2) + scale(Integer(36), b2 * b4) - scale(Integer(216), b3sq))});
  out.push_back({"Delta*a^12 = -b2^2*b8 - 8*b4^3 - 27*b3^4 + 9*b2*b3^2*b4",
                 discriminant(truncation) * pow(a, 12) -
                     (-(b2sq * b8) - scale(Integer(8), pow(b4, 3)) - scale(Integer(27), b3sq * b3sq) +
                      scale(Integer(9), b2 * b3sq * b4))});
  return out;
}

}  // namespace

std::vector<IdentityCheck> mf_embedding_checks(int truncation) {
  const Calibration cal = calibrate(truncation);
  const QYSeries c6 = cal.c6_is_minus_e6 ? weierstrass_c6(truncation) : eisenstein_c6(truncation);
  QYSeries a = generator_table(truncation)->a;
  if (cal.a_sign < 0) a = -a;
  return embedding_checks(truncation, a, c6);
}

bool verify_mf_embedding(int truncation) {
  if (!modular_relation_defect(truncation).is_zero()) return false;
  for (const auto& c : mf_embedding_checks(truncation)) {
    if (!c.holds()) return false;
  }
  return true;
}

Calibration calibrate(int truncation) {
  const QYSeries& a = generator_table(truncation)->a;
  Calibration cal;
  const auto plus_tate = embedding_checks(truncation, a, weierstrass_c6(truncation));
  const auto plus_e6 = embedding_checks(truncation, a, eisenstein_c6(truncation));
  cal.c6_is_minus_e6 = plus_tate[1].holds() || !plus_e6[1].holds();
  const auto& chosen = cal.c6_is_minus_e6 ? plus_tate : plus_e6;
  if (!chosen[2].holds()) {
    const auto minus = embedding_checks(truncation, -a, weierstrass_c6(truncation));
    if (minus[2].holds()) cal.a_sign = -1;
  }
  const auto final_checks = embedding_checks(truncation, cal.a_sign > 0 ? a : -a,
                                             cal.c6_is_minus_e6 ? weierstrass_c6(truncation)
                                                                : eisenstein_c6(truncation));
  cal.consistent = true;
  for (const auto& c : final_checks) cal.consistent = cal.consistent && c.holds();
  return cal;
}

}  // namespace jfl
