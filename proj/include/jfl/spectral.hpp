#pragma once

// Bigraded E2-pages presented as monomial algebras over Z with a 2-torsion sector, the d3
// differential extended by the Leibniz rule, homology per bidegree, and the comparison of the
// MSU sub-page with the tjF page.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jfl/integer.hpp"
#include "jfl/jf_ring.hpp"
#include "jfl/linalg.hpp"

namespace jfl {

// Exponent vector indexed like PageSpec::generators.
using PageMonomial = std::vector<int>;
using PagePoly = std::map<PageMonomial, Integer>;

struct PageGenerator {
  std::string name;
  int degree;       // t - s
  int filtration;   // s
  int torsion_order;  // 0 for free, 2 for h1
};

// lead^2 -> replacement
struct RewriteRule {
  std::size_t lead;
  PagePoly replacement;
};

struct PageSpec {
  std::string name;
  std::vector<PageGenerator> generators;
  std::vector<RewriteRule> rewrites;
  // Generators whose product with any torsion generator vanishes.
  std::vector<std::size_t> torsion_killers;
  std::map<std::size_t, PagePoly> d3;
  int max_degree = 0;
  std::vector<std::string> deviations;

  std::optional<std::size_t> index_of(const std::string& generator) const;
  PageMonomial unit() const { return PageMonomial(generators.size(), 0); }
  PageMonomial generator(const std::string& name) const;
  int degree(const PageMonomial& m) const;
  int filtration(const PageMonomial& m) const;
  bool is_torsion(const PageMonomial& m) const;
};

struct PageOptions {
  // Use only the relations printed in the presentations: h1 is killed by odd generators alone.
  bool literal_relations = false;
};

using Bidegree = std::pair<int, int>;  // (n = t - s, s)

class BigradedPage {
 public:
  // Enumerates normal monomials in every bidegree with n <= spec.max_degree. Throws
  // InvalidArgument if a rewrite or a d3 image is inhomogeneous.
  explicit BigradedPage(PageSpec spec);

  const PageSpec& spec() const noexcept { return spec_; }
  int max_degree() const noexcept { return spec_.max_degree; }

  const std::vector<PageMonomial>& basis(int n, int s) const;
  std::vector<Integer> orders(int n, int s) const;
  std::vector<Bidegree> bidegrees() const;

  // Normal form: rewrites applied, killed torsion monomials dropped, torsion coefficients mod 2.
  PagePoly normalize(const PagePoly& p) const;
  PagePoly multiply(const PagePoly& a, const PagePoly& b) const;
  PagePoly monomial(const PageMonomial& m, const Integer& c = Integer(1)) const;

  // Signed Leibniz: d3(g1 g2 ... gk) = sum_i (-1)^{|g1 ... g(i-1)|} g1 ... d3(gi) ... gk.
  PagePoly d3(const PageMonomial& m) const;
  PagePoly d3(const PagePoly& p) const;
  // (n, s) -> (n - 1, s + 3) in the chosen bases; torsion-target entries reduced mod 2.
  Matrix d3_matrix(int n, int s) const;

  // Coordinates of a homogeneous normal-form polynomial in basis(n, s).
  std::vector<Integer> coordinates(const PagePoly& p, int n, int s) const;
  PagePoly from_coordinates(const std::vector<Integer>& c, int n, int s) const;

  // Requires n + 1 <= max_degree.
  HomologyResult homology(int n, int s) const;

  std::string to_text(const PageMonomial& m) const;
  std::string to_text(const PagePoly& p) const;

 private:
  void enumerate();
  PagePoly reduce_coefficients(PagePoly p) const;

  PageSpec spec_;
  std::map<Bidegree, std::vector<PageMonomial>> basis_;
  std::map<Bidegree, std::map<PageMonomial, std::size_t>> position_;
};

// Presentation of Z[b2, b3, b4, b8, h1] / (2 h1, b3 h1, b4 h1, 4 b8 + b4^2 - b2 b3^2), d3(b2) = h1^3.
PageSpec tjf_spec(int max_degree, PageOptions options = {});
// Presentation of Z[h1, B2, B3, ..., C8, C12, ...] / (2 h1, B_odd h1, B_2n h1 (n >= 2),
// B_2n^2 + 4 C_4n - B2 B_(2n-1)^2), d3(B2) = h1^3.
PageSpec msu_spec(int max_degree, PageOptions options = {});
// Generators h1, B2, B3, B4, C8 with 4 C8 + B4^2 - B2 B3^2.
PageSpec msu_subpage_spec(int max_degree, PageOptions options = {});

inline constexpr int kMsuMaxDegree = 32;

// Pages for homotopy through degree d are built to degree d + 1. msu_page throws
// UnsupportedDegree for d > kMsuMaxDegree.
BigradedPage tjf_page(int d, PageOptions options = {});
BigradedPage msu_page(int d, PageOptions options = {});
BigradedPage msu_subpage(int d, PageOptions options = {});

struct HomotopyEntry {
  int n;
  FPAbelianGroup group;
  std::map<int, FPAbelianGroup> by_filtration;  // nonzero contributions only
};

std::vector<HomotopyEntry> homotopy_table(const BigradedPage& page, int d);
// The direct sum over filtrations of homology in each degree n <= d.
std::map<int, FPAbelianGroup> homotopy_groups(const BigradedPage& page, int d);

// Rows: an HNF basis, in degree_basis(d) coordinates, of the d3-cycles in filtration 0 of the
// tjF page.
Matrix tjf_free_cycle_lattice(const BigradedPage& page, int d);

struct DegreeComparison {
  int n;
  FPAbelianGroup computed;
  FPAbelianGroup expected;
  bool match = false;
  std::vector<std::string> notes;
};

struct ComparisonReport {
  std::string name;
  std::vector<DegreeComparison> degrees;
  std::vector<std::string> deviations;
  bool all_match() const;
  std::optional<int> first_mismatch() const;
};

nlohmann::ordered_json to_json(const ComparisonReport& r);

// pi_n MSU for n <= 16 against the known ranks, torsion and free generators.
ComparisonReport check_msu_low_degrees(PageOptions options = {});
// pi_n tjF for n <= max_degree against the description via x2, x3, x4, x4', x5, x6, x8, eta, and
// the free image lattice against the subring generated by 2b2, b3, b4, b2^2, b2b3, b2b4, b8.
ComparisonReport check_tjf_ring_structure(int max_degree = 24, PageOptions options = {});

struct BidegreeMapCheck {
  int n, s;
  std::size_t source_dim, target_dim;
  bool torsion;
  Integer determinant;  // over Z (free) or of the 0/1 matrix (torsion)
  bool chain_map;
  bool ok;
};

struct SurjectivityReport {
  Integer N;
  int max_degree;
  std::string c8_image;
  // The substitution must send 4 C8 + B4^2 - B2 B3^2 to zero.
  bool relation_preserved = false;
  std::string printed_c8_image;
  bool printed_relation_preserved = false;
  std::vector<BidegreeMapCheck> checks;
  std::vector<std::string> deviations;

  bool isomorphism() const;
  std::optional<Bidegree> first_failure() const;
};

// Maps the sub-page through h1 -> h1, B2 -> b2, B3 -> b3, B4 -> -b4 + 2N b2^2, with C8 sent to
// the value forced by the relation, and checks every bidegree with n <= d.
SurjectivityReport surjectivity_check(const Integer& N, int d, PageOptions options = {});
nlohmann::ordered_json to_json(const SurjectivityReport& r);

}  // namespace jfl
