#pragma once

// q-expansions of the stable weak Jacobi form generators a, b2, b3, b4, b8 and of the
// integral modular forms c4, c6, Delta, together with the identities that pin them down.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jfl/series.hpp"

namespace jfl {

enum class Generator { A, B2, B3, B4, B8 };

inline constexpr Generator kAllGenerators[] = {Generator::A, Generator::B2, Generator::B3, Generator::B4,
                                               Generator::B8};

// Doubled index m: a -> 1, b_i -> i.
int index_of(Generator g);
// Topological degree 2(weight + m): a -> 0, b_i -> 2i.
int degree_of(Generator g);
std::string_view name_of(Generator g);
std::optional<Generator> parse_generator(std::string_view name);

// (y^(1/2) - y^(-1/2)) prod_{n>=1} (1 - q^n y^k)(1 - q^n y^-k)(1 - q^n), with y -> y^k applied to
// the prefactor as well; the q^(1/8) and phase factors are dropped.
QYSeries theta11_product(int k, int truncation);

QYSeries gen_a(int truncation);
// theta11(kz) / theta11(z) for k in {2, 3}.
QYSeries theta_quotient(int k, int truncation);
QYSeries gen_b2(int truncation);
QYSeries gen_b3(int truncation);
QYSeries gen_b4(int truncation);
QYSeries gen_b8(int truncation);

// Standard integral expansions: E4, E6 and q prod (1 - q^n)^24.
QYSeries eisenstein_c4(int truncation);
QYSeries eisenstein_c6(int truncation);
QYSeries discriminant(int truncation);
// The c6 of the Tate curve, -E6. This is the normalization under which the Weierstrass
// invariants embed into the Jacobi form ring with the signs used here.
QYSeries weierstrass_c6(int truncation);

struct GeneratorTable {
  int truncation;
  QYSeries a, b2, b3, b4, b8;

  const QYSeries& get(Generator g) const;
};

// Memoized; safe to call concurrently.
std::shared_ptr<const GeneratorTable> generator_table(int truncation);

// 4 b8 + b4^2 - b2 b3^2.
QYSeries relation_defect(int truncation);
bool verify_relation(int truncation);

// c4^3 - c6^2 - 1728 Delta (either sign convention for c6).
QYSeries modular_relation_defect(int truncation);

struct IdentityCheck {
  std::string name;
  QYSeries defect;  // lhs - rhs
  bool holds() const { return defect.is_zero(); }
};

// c4 a^4 = b2^2 - 24 b4, c6 a^6 = -b2^3 + 36 b2 b4 - 216 b3^2,
// Delta a^12 = -b2^2 b8 - 8 b4^3 - 27 b3^4 + 9 b2 b3^2 b4.
std::vector<IdentityCheck> mf_embedding_checks(int truncation);
bool verify_mf_embedding(int truncation);

// Which sign branches make the modular embeddings hold. The sign of a cannot be detected by
// even powers of a, so a_sign stays +1 unless the Delta check fails for both branches.
struct Calibration {
  int a_sign = 1;
  bool c6_is_minus_e6 = true;
  bool consistent = false;
};
Calibration calibrate(int truncation);

}  // namespace jfl
