#include "jfl/properties.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "jfl/error.hpp"
#include "jfl/genus.hpp"
#include "jfl/jacobi.hpp"
#include "jfl/jf_ring.hpp"
#include "jfl/linalg.hpp"
#include "jfl/series.hpp"
#include "jfl/spectral.hpp"

namespace jfl {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Runs `body` cfg.cases times; a body returns an empty string on success.
PropertyResult run(const std::string& name, const PropertyConfig& cfg, std::uint64_t salt,
                   const std::function<std::string(Rng&)>& body) {
  PropertyResult r;
  r.name = name;
  Rng rng(cfg.seed ^ (salt * 0x9E3779B97F4A7C15ULL));
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!failure.empty()) {
      ++r.failures;
      if (!r.first_failure) r.first_failure = "case " + std::to_string(i) + ": " + failure;
    }
  }
  return r;
}

QYSeries random_series(Rng& rng, int truncation, Parity parity, int terms = 6, int span = 3) {
  std::vector<SeriesTerm> t;
  const int n = uniform(rng, 0, terms);
  for (int i = 0; i < n; ++i) {
    int y2 = 2 * uniform(rng, -span, span);
    if (parity == Parity::HalfIntegral) y2 += 1;
    t.push_back({uniform(rng, 0, truncation - 1), y2, Integer(uniform(rng, -5, 5))});
  }
  if (t.empty()) return QYSeries(truncation, parity);
  return QYSeries::make(t, truncation);
}

Parity random_parity(Rng& rng) { return uniform(rng, 0, 1) ? Parity::HalfIntegral : Parity::Integral; }

JFPolynomial random_polynomial(Rng& rng, int degree) {
  JFPolynomial p;
  // Unrestricted exponents of b4 so that the rewrite is exercised.
  for (int a = 0; 4 * a <= degree; ++a)
    for (int b = 0; 4 * a + 6 * b <= degree; ++b)
      for (int e = 0; 4 * a + 6 * b + 8 * e <= degree; ++e) {
        const int rest = degree - 4 * a - 6 * b - 8 * e;
        if (rest % 16 != 0) continue;
        if (uniform(rng, 0, 2) == 0) continue;
        const Integer c = uniform(rng, -4, 4);
        if (c != 0) p[{a, b, e, rest / 16}] = c;
      }
  return p;
}

int random_even_degree(Rng& rng, int max) { return 2 * uniform(rng, 0, max / 2); }

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

std::string show(const QYSeries& f) { return to_text(f.truncated(std::min(f.truncation(), 3))); }

}  // namespace

PropertyResult check_series_ring_axioms(const PropertyConfig& cfg) {
  return run("series ring axioms", cfg, 1, [](Rng& rng) -> std::string {
    const int n = uniform(rng, 1, 4);
    const Parity pf = random_parity(rng), pg = random_parity(rng), ph = random_parity(rng);
    const QYSeries f = random_series(rng, n, pf), g = random_series(rng, n, pg), h = random_series(rng, n, ph);
    const QYSeries h2 = random_series(rng, n, pg);
    if (f * g != g * f) return "mul not commutative for " + show(f) + ", " + show(g);
    if ((f * g) * h != f * (g * h)) return "mul not associative";
    if (f * (g + h2) != f * g + f * h2) return "mul does not distribute over add";
    if (f * QYSeries::one(n) != f || QYSeries::one(n) * f != f) return "1 is not a unit";
    if ((f * g).parity() != pf + pg) return "product parity is not additive";
    return {};
  });
}

PropertyResult check_series_linearity(const PropertyConfig& cfg) {
  return run("series coefficient linearity and z=0 specialization", cfg, 2, [](Rng& rng) -> std::string {
    const int n = uniform(rng, 1, 4);
    const Parity p = random_parity(rng);
    const QYSeries f = random_series(rng, n, p), g = random_series(rng, n, p);
    const QYSeries s = f + g;
    for (int q = 0; q < n; ++q)
      for (int y2 = -8; y2 <= 8; ++y2)
        if (s.coefficient(q, y2) != f.coefficient(q, y2) + g.coefficient(q, y2)) return "coefficient not additive";
    const QYSeries h = random_series(rng, n, random_parity(rng));
    if (specialize_z0(f * h) != convolve(specialize_z0(f), specialize_z0(h))) return "specialize_z0 not multiplicative";
    return {};
  });
}

PropertyResult check_exact_divide_roundtrip(const PropertyConfig& cfg) {
  return run("exact_divide round trip", cfg, 3, [](Rng& rng) -> std::string {
    const int n = uniform(rng, 1, 4);
    const QYSeries f = random_series(rng, n, random_parity(rng));
    QYSeries g = random_series(rng, n, random_parity(rng));
    if (g.is_zero()) g = QYSeries::monomial(0, g.parity() == Parity::Integral ? 0 : 1, Integer(1), n);
    const QYSeries fg = f * g;
    const QYSeries back = exact_divide(fg, g);
    if (back != f.truncated(back.truncation())) return "(f*g)/g != f for f = " + show(f) + ", g = " + show(g);
    return {};
  });
}

PropertyResult check_normal_form_homomorphism(const PropertyConfig& cfg) {
  return run("normal_form homomorphism", cfg, 4, [](Rng& rng) -> std::string {
    const JFPolynomial p = random_polynomial(rng, random_even_degree(rng, 24));
    const JFPolynomial q = random_polynomial(rng, random_even_degree(rng, 24));
    JFPolynomial pq;
    for (const auto& [mp, cp] : p)
      for (const auto& [mq, cq] : q) pq[mp * mq] += cp * cq;
    const JFElement np = JFElement::normal_form(p), nq = JFElement::normal_form(q);
    if (JFElement::normal_form(pq) != jf_mul(np, nq)) return "normal_form(p q) != nf(p) nf(q)";
    const JFPolynomial again(np.coeffs().begin(), np.coeffs().end());
    if (JFElement::normal_form(again) != np) return "normal_form is not idempotent";
    for (const auto& [m, c] : np.coeffs())
      if (!m.is_normal()) return "normal form keeps b4^2";
    // Evaluation is multiplicative on homogeneous elements.
    const auto ex = eval_series(np, 3), ey = eval_series(nq, 3), exy = eval_series(jf_mul(np, nq), 3);
    if (!np.is_zero() && !nq.is_zero() && exy.series != ex.series * ey.series) return "eval_series not multiplicative";
    return {};
  });
}

PropertyResult check_kernel_certification(const PropertyConfig& cfg) {
  const JFPolynomial relation = {{{0, 0, 0, 1}, Integer(4)}, {{0, 0, 2, 0}, Integer(1)}, {{1, 2, 0, 0}, Integer(-1)}};
  return run("kernel of evaluation is the relation ideal", cfg, 5, [&relation](Rng& rng) -> std::string {
    const int d = random_even_degree(rng, 28);
    JFPolynomial p;
    if (uniform(rng, 0, 1) == 0) p = random_polynomial(rng, d);
    if (d >= 16) {
      // add multiple of the relation
      for (const auto& [m, c] : random_polynomial(rng, d - 16))
        for (const auto& [rm, rc] : relation) p[m * rm] += c * rc;
    }
    const bool zero_series = eval_series(p, 6).series.is_zero();
    const bool zero_nf = JFElement::normal_form(p).is_zero();
    if (zero_series != zero_nf) return "degree " + std::to_string(d) + ": evaluation and normal form disagree on zero";
    return {};
  });
}

PropertyResult check_smith_postconditions(const PropertyConfig& cfg) {
  return run("Smith normal form postconditions", cfg, 6, [](Rng& rng) -> std::string {
    const std::size_t r = uniform(rng, 1, 5), c = uniform(rng, 1, 5);
    Matrix m = random_matrix(rng, r, c, 9);
    if (uniform(rng, 0, 3) == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);  // force rank deficiency
    const SmithForm s = smith_normal_form(m);
    if (s.U * m * s.V != s.D) return "U M V != D";
    if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return "U or V not unimodular";
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j && s.D(i, j) != 0) return "D not diagonal";
        if (i == j && s.D(i, j) < 0) return "negative invariant factor";
      }
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      if (!divides(diag[i], diag[i + 1])) return "divisibility chain broken";
    for (std::size_t i = s.rank; i < std::min(r, c); ++i)
      if (s.D(i, i) != 0) return "rank miscounted";
    return {};
  });
}

PropertyResult check_exact_complex_homology(const PropertyConfig& cfg) {
  return run("homology of exact complexes vanishes", cfg, 7, [](Rng& rng) -> std::string {
    const std::size_t m = uniform(rng, 1, 5);
    const std::size_t rk = uniform(rng, 0, static_cast<int>(m));
    // Random unimodular U with inverse, by elementary operations.
    Matrix U = Matrix::identity(m), Uinv = Matrix::identity(m);
    for (int step = 0; step < 8 && m > 1; ++step) {
      const std::size_t a = uniform(rng, 0, static_cast<int>(m) - 1);
      std::size_t b = uniform(rng, 0, static_cast<int>(m) - 2);
      if (b >= a) ++b;
      const Integer k = uniform(rng, -3, 3);
      U.add_col_multiple(a, b, k);      // U <- U E
      Uinv.add_row_multiple(b, a, -k);  // E^-1 Uinv
    }
    // incoming: first rk columns of U, mixed by a random unimodular on the right.
    Matrix A(m, rk);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < rk; ++j) A(i, j) = U(i, j);
    for (int step = 0; step < 4 && rk > 1; ++step) {
      const std::size_t a = uniform(rng, 0, static_cast<int>(rk) - 1);
      std::size_t b = uniform(rng, 0, static_cast<int>(rk) - 2);
      if (b >= a) ++b;
      A.add_col_multiple(a, b, Integer(uniform(rng, -2, 2)));
    }
    // outgoing: the last m - rk rows of U^-1, whose kernel is exactly the image of A.
    Matrix B(m - rk, m);
    for (std::size_t i = rk; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) B(i - rk, j) = Uinv(i, j);
    ChainSegment seg{A, B, std::vector<Integer>(rk, Integer(0)), std::vector<Integer>(m, Integer(0)),
                     std::vector<Integer>(m - rk, Integer(0))};
    const auto h = homology_at(seg);
    if (!h.group.is_trivial()) return "exact complex has homology " + to_text(h.group);
    return {};
  });
}

namespace {

const std::vector<const BigradedPage*>& property_pages() {
  static const BigradedPage tjf = tjf_page(22);
  static const BigradedPage msu = msu_page(22);
  static const BigradedPage literal = tjf_page(22, {true});
  static const std::vector<const BigradedPage*> pages = {&tjf, &msu, &literal};
  return pages;
}

std::pair<int, int> random_bidegree(Rng& rng, const BigradedPage& page, int max_n) {
  const auto bds = page.bidegrees();
  while (true) {
    const auto& bd = bds[uniform(rng, 0, static_cast<int>(bds.size()) - 1)];
    if (bd.first <= max_n) return bd;
  }
}

}  // namespace

PropertyResult check_d3_squared_zero(const PropertyConfig& cfg) {
  return run("d3 o d3 = 0", cfg, 8, [](Rng& rng) -> std::string {
    const auto& pages = property_pages();
    const BigradedPage& page = *pages[uniform(rng, 0, static_cast<int>(pages.size()) - 1)];
    const auto [n, s] = random_bidegree(rng, page, page.max_degree());
    std::vector<Integer> v(page.basis(n, s).size());
    for (auto& x : v) x = uniform(rng, -6, 6);
    const PagePoly x = page.from_coordinates(v, n, s);
    if (!page.d3(page.d3(x)).empty()) return page.spec().name + ": d3 d3 != 0 on " + page.to_text(x);
    if (n >= 2) {
      const Matrix comp = page.d3_matrix(n - 1, s + 3) * page.d3_matrix(n, s);
      if (!reduce_mod(comp, Integer(2)).is_zero()) return page.spec().name + ": matrix composite nonzero";
    }
    return {};
  });
}

PropertyResult check_signed_leibniz(const PropertyConfig& cfg) {
  return run("signed Leibniz rule", cfg, 9, [](Rng& rng) -> std::string {
    const auto& pages = property_pages();
    const BigradedPage& page = *pages[uniform(rng, 0, static_cast<int>(pages.size()) - 1)];
    const auto [nu, su] = random_bidegree(rng, page, page.max_degree() / 2);
    const auto [nv, sv] = random_bidegree(rng, page, page.max_degree() / 2);
    const auto& bu = page.basis(nu, su);
    const auto& bv = page.basis(nv, sv);
    const PagePoly u = page.monomial(bu[uniform(rng, 0, static_cast<int>(bu.size()) - 1)]);
    const PagePoly v = page.monomial(bv[uniform(rng, 0, static_cast<int>(bv.size()) - 1)]);
    const PagePoly lhs = page.d3(page.multiply(u, v));
    PagePoly rhs = page.multiply(page.d3(u), v);
    const int sign = nu % 2 == 0 ? 1 : -1;
    for (const auto& [m, c] : page.multiply(u, page.d3(v))) rhs[m] += sign * c;
    if (lhs != page.normalize(rhs))
      return page.spec().name + ": Leibniz fails on " + page.to_text(u) + " * " + page.to_text(v);
    return {};
  });
}

PropertyResult check_genus_properties(const PropertyConfig& cfg) {
  return run("genus additivity, multiplicativity, Euler anchor, image", cfg, 10, [](Rng& rng) -> std::string {
    const Integer k1 = uniform(rng, -20, 20), k2 = uniform(rng, -20, 20), k3 = uniform(rng, -20, 20);
    // c2 of a closed SU-surface is divisible by 24.
    const ChernData x(2, {{{2}, 24 * k1}}), y(2, {{{2}, 24 * k2}}), xy(2, {{{2}, 24 * (k1 + k2)}});
    if (genus_deg4(xy) != genus_deg4(x) + genus_deg4(y)) return "genus_deg4 not additive";
    const ChernData s(2, {{{2}, 24 * k3 * k1}});
    if (genus_deg4(s) != k3 * genus_deg4(x)) return "genus_deg4 not linear under scaling";
    const ChernData t3(3, {{{3}, 2 * k1}}), u3(3, {{{3}, 2 * k2}}), tu3(3, {{{3}, 2 * (k1 + k2)}});
    if (genus_deg6(tu3) != genus_deg6(t3) + genus_deg6(u3)) return "genus_deg6 not additive";
    const ChernData p = product(x, y);
    const JFElement gp = genus_deg8(p);
    if (gp != jf_mul(genus_deg4(x), genus_deg4(y))) return "genus of product is not the product of genera";
    for (const auto& [data, g] : {std::pair{x, genus_deg4(x)}, std::pair{t3, genus_deg6(t3)}, std::pair{p, gp}}) {
      const Integer top = data.get({data.complex_dim()});
      if (genus_at_z0(g) != top) return "Euler anchor fails for " + to_text(g);
      if (!in_image(g)) return to_text(g) + " is not in the image lattice";
    }
    // Degree 8 with N-parametrized data hitting the generator class.
    const Integer N = uniform(rng, -5, 5);
    const JFElement g8 = genus_deg8(b4_realizing_data(N));
    if (!in_image(g8) || genus_at_z0(g8) != b4_realizing_data(N).get({4})) return "B4 data fails anchor or image";
    return {};
  });
}

std::vector<PropertyResult> run_all_properties(const PropertyConfig& cfg) {
  return {check_series_ring_axioms(cfg),       check_series_linearity(cfg),     check_exact_divide_roundtrip(cfg),
          check_normal_form_homomorphism(cfg), check_kernel_certification(cfg), check_smith_postconditions(cfg),
          check_exact_complex_homology(cfg),   check_d3_squared_zero(cfg),      check_signed_leibniz(cfg),
          check_genus_properties(cfg)};
}

}  // namespace jfl
