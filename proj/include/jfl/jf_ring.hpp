#pragma once

// The graded ring jF = Z[b2, b3, b4, b8] / (4 b8 + b4^2 - b2 b3^2), its evaluation into
// q-expansions, and the degreewise lattice of the subring generated by
// 2 b2, b3, b4, b2^2, b2 b3, b2 b4, b8.

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "jfl/integer.hpp"
#include "jfl/linalg.hpp"
#include "jfl/series.hpp"

namespace jfl {

struct JFMonomial {
  int b2 = 0, b3 = 0, b4 = 0, b8 = 0;

  int degree() const { return 4 * b2 + 6 * b3 + 8 * b4 + 16 * b8; }
  // Sum of the doubled indices of the factors.
  int index() const { return 2 * b2 + 3 * b3 + 4 * b4 + 8 * b8; }
  bool is_normal() const { return b4 <= 1; }

  friend auto operator<=>(const JFMonomial&, const JFMonomial&) = default;
  friend JFMonomial operator*(const JFMonomial& x, const JFMonomial& y) {
    return {x.b2 + y.b2, x.b3 + y.b3, x.b4 + y.b4, x.b8 + y.b8};
  }
};

// A polynomial in b2, b3, b4, b8 with no relation imposed.
using JFPolynomial = std::map<JFMonomial, Integer>;

class JFElement {
 public:
  using CoeffMap = std::map<JFMonomial, Integer>;

  JFElement() = default;
  static JFElement constant(const Integer& c);
  static JFElement b2();
  static JFElement b3();
  static JFElement b4();
  static JFElement b8();
  static JFElement monomial(const JFMonomial& m, const Integer& c = Integer(1));

  // Rewrites b4^2 -> b2 b3^2 - 4 b8 until every monomial has b4-exponent <= 1.
  static JFElement normal_form(const JFPolynomial& p);

  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Integer coefficient(const JFMonomial& m) const;
  bool is_homogeneous() const;
  // Degree of a homogeneous nonzero element; throws Inhomogeneous otherwise (0 for zero).
  int degree() const;
  JFElement component(int degree) const;

  JFElement& operator+=(const JFElement& other);
  JFElement& operator-=(const JFElement& other);
  friend bool operator==(const JFElement&, const JFElement&) = default;

 private:
  void add(const JFMonomial& m, const Integer& c);
  CoeffMap coeffs_;
};

JFElement operator+(const JFElement& x, const JFElement& y);
JFElement operator-(const JFElement& x, const JFElement& y);
JFElement operator-(const JFElement& x);
JFElement operator*(const JFElement& x, const JFElement& y);
JFElement operator*(const Integer& k, const JFElement& x);
JFElement pow(const JFElement& x, int exponent);
// Coefficientwise exact division. Throws NonDivisible.
JFElement divide_exact(const JFElement& x, const Integer& d);

inline JFElement jf_add(const JFElement& x, const JFElement& y) { return x + y; }
inline JFElement jf_mul(const JFElement& x, const JFElement& y) { return x * y; }

// Normal-form monomials of degree d, in descending lexicographic order of (b2, b3, b4, b8).
std::vector<JFMonomial> degree_basis(int d);
// Coordinates of the degree-d component of x in degree_basis(d).
std::vector<Integer> coordinates(const JFElement& x, int d);
JFElement from_coordinates(const std::vector<Integer>& coords, int d);

struct EvaluatedSeries {
  QYSeries series;
  int index;
};

// Substitutes the generator q-expansions; monomials with smaller index are multiplied by the
// power of a that raises them to the largest index present.
EvaluatedSeries eval_series(const JFElement& x, int truncation);
// Same substitution for an unreduced polynomial.
EvaluatedSeries eval_series(const JFPolynomial& p, int truncation);

// 2 b2, b3, b4, b2^2, b2 b3, b2 b4, b8.
std::vector<JFElement> image_generators();

// Degreewise lattices of the subring generated by image_generators(), built by product closure.
class ImageLattice {
 public:
  // Rows: an HNF basis of the degree-d image in degree_basis(d) coordinates.
  Matrix basis(int d);
  // Throws Inhomogeneous for mixed-degree input.
  bool contains(const JFElement& x);
  FPAbelianGroup cokernel(int d);

  static ImageLattice& shared();

 private:
  Matrix compute(int d);
  std::mutex mu_;
  std::map<int, Matrix> cache_;
};

inline Matrix image_basis(int d) { return ImageLattice::shared().basis(d); }
inline bool in_image(const JFElement& x) { return ImageLattice::shared().contains(x); }
inline FPAbelianGroup cokernel(int d) { return ImageLattice::shared().cokernel(d); }

// Monomials b2^(2m+1) b8^n of degree d.
std::vector<JFMonomial> odd_b2_classes(int d);
// True iff the classes above generate the degree-d cokernel and each has order 2 in it.
bool odd_b2_classes_generate_cokernel(int d);

std::string to_text(const JFMonomial& m);
std::string to_text(const JFElement& x);
nlohmann::ordered_json to_json(const JFElement& x);
JFElement jf_from_json(const nlohmann::ordered_json& j);

}  // namespace jfl
