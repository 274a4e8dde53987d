#include "jfl/jf_ring.hpp"

#include <algorithm>
#include <sstream>

#include "jfl/error.hpp"
#include "jfl/jacobi.hpp"

namespace jfl {

JFElement JFElement::constant(const Integer& c) { return monomial({}, c); }
JFElement JFElement::b2() { return monomial({1, 0, 0, 0}); }
JFElement JFElement::b3() { return monomial({0, 1, 0, 0}); }
JFElement JFElement::b4() { return monomial({0, 0, 1, 0}); }
JFElement JFElement::b8() { return monomial({0, 0, 0, 1}); }

JFElement JFElement::monomial(const JFMonomial& m, const Integer& c) {
  JFPolynomial p;
  p[m] = c;
  return normal_form(p);
}

void JFElement::add(const JFMonomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

JFElement JFElement::normal_form(const JFPolynomial& p) {
  // b4^(2k+r) = (b2 b3^2 - 4 b8)^k b4^r, expanded binomially.
  JFElement out;
  for (const auto& [m, c] : p) {
    if (c == 0) continue;
    if (m.b2 < 0 || m.b3 < 0 || m.b4 < 0 || m.b8 < 0)
      throw Error(ErrorCode::InvalidArgument, "negative exponent in jF monomial");
    const int k = m.b4 / 2;
    Integer binom = 1;
    for (int j = 0; j <= k; ++j) {
      // j factors of -4 b8, k - j factors of b2 b3^2
      Integer term = c * binom;
      Integer four_pow;
      mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(j));
      term *= (j % 2 == 0) ? four_pow : Integer(-four_pow);
      out.add({m.b2 + (k - j), m.b3 + 2 * (k - j), m.b4 % 2, m.b8 + j}, term);
      binom = binom * (k - j) / (j + 1);
    }
  }
  return out;
}

Integer JFElement::coefficient(const JFMonomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

bool JFElement::is_homogeneous() const {
  if (coeffs_.empty()) return true;
  const int d = coeffs_.begin()->first.degree();
  return std::all_of(coeffs_.begin(), coeffs_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

int JFElement::degree() const {
  if (coeffs_.empty()) return 0;
  if (!is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, "element " + to_text(*this) + " is not homogeneous");
  return coeffs_.begin()->first.degree();
}

JFElement JFElement::component(int degree) const {
  JFElement out;
  for (const auto& [m, c] : coeffs_)
    if (m.degree() == degree) out.coeffs_.emplace(m, c);
  return out;
}

JFElement& JFElement::operator+=(const JFElement& other) {
  for (const auto& [m, c] : other.coeffs_) add(m, c);
  return *this;
}

JFElement& JFElement::operator-=(const JFElement& other) {
  for (const auto& [m, c] : other.coeffs_) add(m, -c);
  return *this;
}

JFElement operator+(const JFElement& x, const JFElement& y) {
  JFElement r = x;
  r += y;
  return r;
}

JFElement operator-(const JFElement& x, const JFElement& y) {
  JFElement r = x;
  r -= y;
  return r;
}

JFElement operator-(const JFElement& x) { return JFElement() - x; }

JFElement operator*(const JFElement& x, const JFElement& y) {
  JFPolynomial p;
  for (const auto& [mx, cx] : x.coeffs())
    for (const auto& [my, cy] : y.coeffs()) p[mx * my] += cx * cy;
  return JFElement::normal_form(p);
}

JFElement operator*(const Integer& k, const JFElement& x) { return JFElement::constant(k) * x; }

JFElement pow(const JFElement& x, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  JFElement r = JFElement::constant(1);
  for (int i = 0; i < exponent; ++i) r = r * x;
  return r;
}

JFElement divide_exact(const JFElement& x, const Integer& d) {
  JFPolynomial p;
  for (const auto& [m, c] : x.coeffs()) {
    if (!divides(d, c)) throw Error(ErrorCode::NonDivisible, to_text(x) + " is not divisible by " + d.get_str());
    p[m] = c / d;
  }
  return JFElement::normal_form(p);
}

std::vector<JFMonomial> degree_basis(int d) {
  std::vector<JFMonomial> out;
  if (d < 0 || d % 2 != 0) return out;
  for (int a = d / 4; a >= 0; --a)
    for (int b = (d - 4 * a) / 6; b >= 0; --b)
      for (int e = 1; e >= 0; --e) {
        const int rest = d - 4 * a - 6 * b - 8 * e;
        if (rest >= 0 && rest % 16 == 0) out.push_back({a, b, e, rest / 16});
      }
  return out;
}

std::vector<Integer> coordinates(const JFElement& x, int d) {
  const auto basis = degree_basis(d);
  std::vector<Integer> out(basis.size(), Integer(0));
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = x.coefficient(basis[i]);
  return out;
}

JFElement from_coordinates(const std::vector<Integer>& coords, int d) {
  const auto basis = degree_basis(d);
  if (coords.size() != basis.size()) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  JFPolynomial p;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coords[i] != 0) p[basis[i]] = coords[i];
  return JFElement::normal_form(p);
}

namespace {

EvaluatedSeries eval_monomials(const JFPolynomial& p, int truncation) {
  int index = 0;
  for (const auto& [m, c] : p)
    if (c != 0) index = std::max(index, m.index());
  const auto t = generator_table(truncation);
  QYSeries sum(truncation, parity_of(index));
  for (const auto& [m, c] : p) {
    if (c == 0) continue;
    QYSeries term = pow(t->b2, m.b2) * pow(t->b3, m.b3) * pow(t->b4, m.b4) * pow(t->b8, m.b8) *
                    pow(t->a, index - m.index());
    sum += scale(c, term);
  }
  return {std::move(sum), index};
}

}  // namespace

EvaluatedSeries eval_series(const JFElement& x, int truncation) {
  return eval_monomials(JFPolynomial(x.coeffs().begin(), x.coeffs().end()), truncation);
}

EvaluatedSeries eval_series(const JFPolynomial& p, int truncation) { return eval_monomials(p, truncation); }

std::vector<JFElement> image_generators() {
  const JFElement b2 = JFElement::b2(), b3 = JFElement::b3(), b4 = JFElement::b4(), b8 = JFElement::b8();
  return {Integer(2) * b2, b3, b4, b2 * b2, b2 * b3, b2 * b4, b8};
}

ImageLattice& ImageLattice::shared() {
  static ImageLattice instance;
  return instance;
}

Matrix ImageLattice::basis(int d) {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(d); it != cache_.end()) return it->second;
  }
  Matrix m = compute(d);
  std::lock_guard lock(mu_);
  return cache_.try_emplace(d, std::move(m)).first->second;
}

Matrix ImageLattice::compute(int d) {
  const std::size_t n = degree_basis(d).size();
  Matrix rows(0, n);
  if (n == 0) return rows;
  if (d == 0) return Matrix::identity(1);
  for (const auto& g : image_generators()) {
    const int e = g.degree();
    if (e > d) continue;
    const Matrix lower = basis(d - e);
    for (std::size_t r = 0; r < lower.rows(); ++r)
      rows.append_row(coordinates(g * from_coordinates(lower.row(r), d - e), d));
  }
  return hermite_normal_form(rows);
}

bool ImageLattice::contains(const JFElement& x) {
  if (x.is_zero()) return true;
  const int d = x.degree();
  return in_row_lattice(basis(d), coordinates(x, d));
}

FPAbelianGroup ImageLattice::cokernel(int d) {
  const Matrix b = basis(d);
  return cokernel_of_rows(b.rows() ? b : Matrix(0, degree_basis(d).size()));
}

std::vector<JFMonomial> odd_b2_classes(int d) {
  std::vector<JFMonomial> out;
  for (int n = 0; 16 * n <= d; ++n) {
    const int rest = d - 16 * n;
    if (rest % 4 == 0 && (rest / 4) % 2 == 1) out.push_back({rest / 4, 0, 0, n});
  }
  return out;
}

bool odd_b2_classes_generate_cokernel(int d) {
  auto& lattice = ImageLattice::shared();
  const Matrix b = lattice.basis(d);
  const std::size_t n = degree_basis(d).size();
  Matrix combined(0, n);
  for (std::size_t r = 0; r < b.rows(); ++r) combined.append_row(b.row(r));
  for (const auto& m : odd_b2_classes(d)) {
    const auto v = coordinates(JFElement::monomial(m), d);
    if (in_row_lattice(b, v)) return false;
    std::vector<Integer> twice = v;
    for (auto& x : twice) x *= 2;
    if (!in_row_lattice(b, twice)) return false;
    combined.append_row(v);
  }
  if (n == 0) return true;
  const Matrix h = hermite_normal_form(combined);
  if (h.rows() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (h(i, i) != 1) return false;
  return true;
}

std::string to_text(const JFMonomial& m) {
  std::vector<std::string> parts;
  auto factor = [&parts](const char* name, int e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
  };
  factor("b2", m.b2);
  factor("b3", m.b3);
  factor("b4", m.b4);
  factor("b8", m.b8);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

std::string to_text(const JFElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.coeffs()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = to_text(m);
    if (mono.empty()) os << mag.get_str();
    else if (mag == 1) os << mono;
    else os << mag.get_str() << "*" << mono;
  }
  return os.str();
}

nlohmann::ordered_json to_json(const JFElement& x) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : x.coeffs())
    arr.push_back({{"a", m.b2}, {"b", m.b3}, {"e", m.b4}, {"g", m.b8}, {"c", c.get_str()}});
  return arr;
}

JFElement jf_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "jF element JSON must be an array");
  JFPolynomial p;
  for (const auto& t : j) {
    const JFMonomial m{t.at("a").get<int>(), t.at("b").get<int>(), t.at("e").get<int>(), t.at("g").get<int>()};
    p[m] += parse_integer(t.at("c").get<std::string>());
  }
  return JFElement::normal_form(p);
}

}  // namespace jfl
