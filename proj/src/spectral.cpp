#include "jfl/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "jfl/error.hpp"

namespace jfl {

namespace {

constexpr const char* kDevB4 = "b4*h1=0";
constexpr const char* kDevB2n = "B2n*h1=0";
constexpr const char* kDevSquared = "squared relation";

PageMonomial add_exponents(const PageMonomial& a, const PageMonomial& b) {
  PageMonomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Parses "2*B2^3", "B3*B5", "-b4" against a spec's generator names.
PagePoly parse_term(const PageSpec& spec, const std::string& text) {
  std::string body = text;
  Integer coeff = 1;
  if (!body.empty() && body[0] == '-') {
    coeff = -1;
    body = body.substr(1);
  }
  PageMonomial m = spec.unit();
  std::stringstream ss(body);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (!factor.empty() && std::isdigit(static_cast<unsigned char>(factor[0]))) {
      coeff *= parse_integer(factor);
      continue;
    }
    const auto caret = factor.find('^');
    const std::string name = factor.substr(0, caret);
    const int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    const auto idx = spec.index_of(name);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown page generator " + name);
    m[*idx] += e;
  }
  return {{m, coeff}};
}

PagePoly parse_poly(const PageSpec& spec, const std::vector<std::string>& terms) {
  PagePoly out;
  for (const auto& t : terms)
    for (const auto& [m, c] : parse_term(spec, t)) out[m] += c;
  return out;
}

void add_generator(PageSpec& spec, std::string name, int degree, int filtration, int order) {
  spec.generators.push_back({std::move(name), degree, filtration, order});
}

}  // namespace

std::optional<std::size_t> PageSpec::index_of(const std::string& g) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == g) return i;
  return std::nullopt;
}

PageMonomial PageSpec::generator(const std::string& g) const {
  const auto idx = index_of(g);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown page generator " + g);
  PageMonomial m = unit();
  m[*idx] = 1;
  return m;
}

int PageSpec::degree(const PageMonomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators[i].degree;
  return d;
}

int PageSpec::filtration(const PageMonomial& m) const {
  int s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * generators[i].filtration;
  return s;
}

bool PageSpec::is_torsion(const PageMonomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0 && generators[i].torsion_order != 0) return true;
  return false;
}

BigradedPage::BigradedPage(PageSpec spec) : spec_(std::move(spec)) {
  for (const auto& r : spec_.rewrites) {
    PageMonomial lead_sq = spec_.unit();
    lead_sq[r.lead] = 2;
    for (const auto& [m, c] : r.replacement) {
      if (spec_.degree(m) != spec_.degree(lead_sq) || spec_.filtration(m) != spec_.filtration(lead_sq))
        throw Error(ErrorCode::InvalidArgument, "inhomogeneous rewrite rule for " + spec_.generators[r.lead].name);
    }
  }
  for (const auto& [g, image] : spec_.d3) {
    PageMonomial gm = spec_.unit();
    gm[g] = 1;
    for (const auto& [m, c] : image) {
      if (spec_.degree(m) != spec_.degree(gm) - 1 || spec_.filtration(m) != spec_.filtration(gm) + 3)
        throw Error(ErrorCode::InvalidArgument, "d3 image of " + spec_.generators[g].name + " in wrong bidegree");
    }
  }
  enumerate();
}

void BigradedPage::enumerate() {
  const std::size_t k = spec_.generators.size();
  std::vector<bool> is_lead(k, false), is_killer(k, false);
  for (const auto& r : spec_.rewrites) is_lead[r.lead] = true;
  for (std::size_t g : spec_.torsion_killers) is_killer[g] = true;

  PageMonomial m(k, 0);
  auto visit = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == k) {
      if (spec_.is_torsion(m)) {
        for (std::size_t g = 0; g < k; ++g)
          if (is_killer[g] && m[g] > 0) return;
      }
      basis_[{spec_.degree(m), spec_.filtration(m)}].push_back(m);
      return;
    }
    const int deg = spec_.generators[i].degree;
    const int cap = is_lead[i] ? 1 : budget / deg;
    for (int e = 0; e <= cap && e * deg <= budget; ++e) {
      m[i] = e;
      self(self, i + 1, budget - e * deg);
    }
    m[i] = 0;
  };
  visit(visit, 0, spec_.max_degree);

  for (auto& [bd, list] : basis_) {
    std::sort(list.begin(), list.end(), std::greater<>());
    auto& pos = position_[bd];
    for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
  }
}

const std::vector<PageMonomial>& BigradedPage::basis(int n, int s) const {
  static const std::vector<PageMonomial> kEmpty;
  auto it = basis_.find({n, s});
  return it == basis_.end() ? kEmpty : it->second;
}

std::vector<Integer> BigradedPage::orders(int n, int s) const {
  std::vector<Integer> out;
  for (const auto& m : basis(n, s)) out.emplace_back(spec_.is_torsion(m) ? 2 : 0);
  return out;
}

std::vector<Bidegree> BigradedPage::bidegrees() const {
  std::vector<Bidegree> out;
  for (const auto& [bd, list] : basis_) out.push_back(bd);
  return out;
}

PagePoly BigradedPage::reduce_coefficients(PagePoly p) const {
  for (auto it = p.begin(); it != p.end();) {
    if (spec_.is_torsion(it->first)) it->second = mod_floor(it->second, Integer(2));
    it = it->second == 0 ? p.erase(it) : std::next(it);
  }
  return p;
}

PagePoly BigradedPage::normalize(const PagePoly& p) const {
  PagePoly out;
  std::vector<std::pair<PageMonomial, Integer>> work(p.begin(), p.end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    if (c == 0) continue;
    if (spec_.is_torsion(m) &&
        std::any_of(spec_.torsion_killers.begin(), spec_.torsion_killers.end(), [&](std::size_t g) { return m[g] > 0; }))
      continue;
    const auto rule = std::find_if(spec_.rewrites.begin(), spec_.rewrites.end(),
                                   [&](const RewriteRule& r) { return m[r.lead] >= 2; });
    if (rule != spec_.rewrites.end()) {
      PageMonomial rest = m;
      rest[rule->lead] -= 2;
      for (const auto& [rm, rc] : rule->replacement) work.emplace_back(add_exponents(rest, rm), c * rc);
      continue;
    }
    out[m] += c;
  }
  return reduce_coefficients(std::move(out));
}

PagePoly BigradedPage::multiply(const PagePoly& a, const PagePoly& b) const {
  PagePoly p;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) p[add_exponents(ma, mb)] += ca * cb;
  return normalize(p);
}

PagePoly BigradedPage::monomial(const PageMonomial& m, const Integer& c) const { return normalize({{m, c}}); }

PagePoly BigradedPage::d3(const PageMonomial& m) const {
  PagePoly raw;
  int prefix = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int e = m[i];
    const int deg = spec_.generators[i].degree;
    auto it = spec_.d3.find(i);
    if (e > 0 && it != spec_.d3.end()) {
      PageMonomial rest = m;
      rest[i] -= 1;
      for (int k = 0; k < e; ++k) {
        const int sign = ((prefix + k * deg) % 2 == 0) ? 1 : -1;
        for (const auto& [dm, dc] : it->second) raw[add_exponents(rest, dm)] += sign * dc;
      }
    }
    prefix += e * deg;
  }
  return normalize(raw);
}

PagePoly BigradedPage::d3(const PagePoly& p) const {
  PagePoly raw;
  for (const auto& [m, c] : p)
    for (const auto& [dm, dc] : d3(m)) raw[dm] += c * dc;
  return normalize(raw);
}

std::vector<Integer> BigradedPage::coordinates(const PagePoly& p, int n, int s) const {
  const auto& list = basis(n, s);
  std::vector<Integer> out(list.size(), Integer(0));
  if (p.empty()) return out;
  auto pit = position_.find({n, s});
  for (const auto& [m, c] : p) {
    if (pit == position_.end()) throw Error(ErrorCode::Internal, "monomial " + to_text(m) + " outside the page basis");
    auto it = pit->second.find(m);
    if (it == pit->second.end()) throw Error(ErrorCode::Internal, "monomial " + to_text(m) + " outside the page basis");
    out[it->second] = c;
  }
  return out;
}

PagePoly BigradedPage::from_coordinates(const std::vector<Integer>& c, int n, int s) const {
  const auto& list = basis(n, s);
  if (c.size() != list.size()) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  PagePoly p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p[list[i]] = c[i];
  return normalize(p);
}

Matrix BigradedPage::d3_matrix(int n, int s) const {
  const auto& src = basis(n, s);
  const auto& dst = basis(n - 1, s + 3);
  Matrix out(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto coords = coordinates(d3(src[j]), n - 1, s + 3);
    for (std::size_t i = 0; i < dst.size(); ++i) out(i, j) = coords[i];
  }
  return out;
}

HomologyResult BigradedPage::homology(int n, int s) const {
  if (n + 1 > spec_.max_degree)
    throw Error(ErrorCode::InvalidArgument, "page " + spec_.name + " is not built past degree " + std::to_string(n));
  ChainSegment seg;
  seg.mid_orders = orders(n, s);
  seg.next_orders = orders(n - 1, s + 3);
  seg.outgoing = d3_matrix(n, s);
  if (s >= 3) {
    seg.prev_orders = orders(n + 1, s - 3);
    seg.incoming = d3_matrix(n + 1, s - 3);
  }
  return homology_at(seg);
}

std::string BigradedPage::to_text(const PageMonomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += spec_.generators[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string BigradedPage::to_text(const PagePoly& p) const {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const std::string mono = to_text(m);
    if (mono == "1") os << mag.get_str();
    else if (mag == 1) os << mono;
    else os << mag.get_str() << "*" << mono;
  }
  return os.str();
}

PageSpec tjf_spec(int max_degree, PageOptions options) {
  PageSpec spec;
  spec.name = "tjF";
  spec.max_degree = max_degree;
  add_generator(spec, "b2", 4, 0, 0);
  add_generator(spec, "b3", 6, 0, 0);
  add_generator(spec, "b4", 8, 0, 0);
  add_generator(spec, "b8", 16, 0, 0);
  add_generator(spec, "h1", 1, 1, 2);
  spec.rewrites.push_back({*spec.index_of("b4"), parse_poly(spec, {"b2*b3^2", "-4*b8"})});
  spec.torsion_killers.push_back(*spec.index_of("b3"));
  if (!options.literal_relations) {
    spec.torsion_killers.push_back(*spec.index_of("b4"));
    spec.deviations.emplace_back(kDevB4);
  }
  spec.d3[*spec.index_of("b2")] = parse_poly(spec, {"h1^3"});
  return spec;
}

namespace {

PageSpec msu_like_spec(std::string name, int max_degree, int top_b, bool full, PageOptions options) {
  PageSpec spec;
  spec.name = std::move(name);
  spec.max_degree = max_degree;
  add_generator(spec, "h1", 1, 1, 2);
  for (int n = 2; n <= top_b; ++n) add_generator(spec, "B" + std::to_string(n), 2 * n, 0, 0);
  // C_4n accompanies B_2n so that every product of page elements has a normal form.
  for (int n = 2; 2 * n <= top_b; ++n) {
    if (!full && n > 2) break;
    add_generator(spec, "C" + std::to_string(4 * n), 8 * n, 0, 0);
  }
  for (int n = 2; 2 * n <= top_b; ++n) {
    if (!full && n > 2) break;
    const std::string b = "B" + std::to_string(2 * n);
    const std::string prev = "B" + std::to_string(2 * n - 1);
    const std::string c = "C" + std::to_string(4 * n);
    spec.rewrites.push_back({*spec.index_of(b), parse_poly(spec, {"B2*" + prev + "^2", "-4*" + c})});
  }
  for (int n = 3; n <= top_b; n += 2) spec.torsion_killers.push_back(*spec.index_of("B" + std::to_string(n)));
  if (!options.literal_relations) {
    for (int n = 4; n <= top_b; n += 2) spec.torsion_killers.push_back(*spec.index_of("B" + std::to_string(n)));
    spec.deviations.emplace_back(kDevB2n);
  }
  spec.deviations.emplace_back(kDevSquared);
  spec.d3[*spec.index_of("B2")] = parse_poly(spec, {"h1^3"});
  return spec;
}

}  // namespace

PageSpec msu_spec(int max_degree, PageOptions options) {
  return msu_like_spec("MSU", max_degree, std::max(2, max_degree / 2), true, options);
}

PageSpec msu_subpage_spec(int max_degree, PageOptions options) {
  return msu_like_spec("MSU sub-page", max_degree, 4, false, options);
}

BigradedPage tjf_page(int d, PageOptions options) { return BigradedPage(tjf_spec(d + 1, options)); }

BigradedPage msu_page(int d, PageOptions options) {
  if (d > kMsuMaxDegree)
    throw Error(ErrorCode::UnsupportedDegree,
                "MSU generator table covers degrees up to " + std::to_string(kMsuMaxDegree));
  return BigradedPage(msu_spec(d + 1, options));
}

BigradedPage msu_subpage(int d, PageOptions options) { return BigradedPage(msu_subpage_spec(d + 1, options)); }

std::vector<HomotopyEntry> homotopy_table(const BigradedPage& page, int d) {
  if (d + 1 > page.max_degree())
    throw Error(ErrorCode::InvalidArgument, "page must be built to degree " + std::to_string(d + 1));
  std::vector<HomotopyEntry> out;
  for (int n = 0; n <= d; ++n) {
    HomotopyEntry e{n, {}, {}};
    for (int s = 0; s <= n; ++s) {
      if (page.basis(n, s).empty()) continue;
      const auto h = page.homology(n, s).group;
      if (h.is_trivial()) continue;
      e.by_filtration[s] = h;
      e.group = direct_sum(e.group, h);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::map<int, FPAbelianGroup> homotopy_groups(const BigradedPage& page, int d) {
  std::map<int, FPAbelianGroup> out;
  for (auto& e : homotopy_table(page, d)) out[e.n] = std::move(e.group);
  return out;
}

Matrix tjf_free_cycle_lattice(const BigradedPage& page, int d) {
  const auto jf_basis = degree_basis(d);
  Matrix out(0, jf_basis.size());
  if (page.basis(d, 0).empty()) return out;
  const auto cycles = page.homology(d, 0).cycles;
  const auto& spec = page.spec();
  const std::size_t i2 = *spec.index_of("b2"), i3 = *spec.index_of("b3"), i4 = *spec.index_of("b4"),
                    i8 = *spec.index_of("b8");
  for (std::size_t r = 0; r < cycles.rows(); ++r) {
    const PagePoly p = page.from_coordinates(cycles.row(r), d, 0);
    JFPolynomial q;
    for (const auto& [m, c] : p) q[{m[i2], m[i3], m[i4], m[i8]}] += c;
    out.append_row(coordinates(JFElement::normal_form(q), d));
  }
  return hermite_normal_form(out);
}

bool ComparisonReport::all_match() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& d) { return d.match; });
}

std::optional<int> ComparisonReport::first_mismatch() const {
  for (const auto& d : degrees)
    if (!d.match) return d.n;
  return std::nullopt;
}

namespace {

nlohmann::ordered_json torsion_json(const FPAbelianGroup& g) {
  auto t = nlohmann::ordered_json::array();
  for (const auto& x : g.torsion) t.push_back(x.get_str());
  return t;
}

FPAbelianGroup group_of(std::size_t rank, std::size_t twos) {
  FPAbelianGroup g;
  g.rank = rank;
  g.torsion.assign(twos, Integer(2));
  return g;
}

struct MsuRow {
  int n;
  std::size_t rank;
  std::size_t twos;
  std::vector<std::string> free_generators;
};

const std::vector<MsuRow>& msu_low_degree_rows() {
  static const std::vector<MsuRow> rows = {
      {0, 1, 0, {"1"}},
      {1, 0, 1, {}},
      {2, 0, 1, {}},
      {3, 0, 0, {}},
      {4, 1, 0, {"2*B2"}},
      {5, 0, 0, {}},
      {6, 1, 0, {"B3"}},
      {7, 0, 0, {}},
      {8, 2, 0, {"B2^2", "B4"}},
      {9, 0, 1, {}},
      {10, 2, 1, {"B2*B3", "B5"}},
      {11, 0, 0, {}},
      {12, 4, 0, {"2*B2^3", "B3^2", "B2*B4", "B6"}},
      {13, 0, 0, {}},
      {14, 4, 0, {"B2^2*B3", "B2*B5", "B4*B3", "B7"}},
      {15, 0, 0, {}},
      {16, 7, 0, {"B2^4", "B2^2*B4", "B2*B3^2", "B2*B6", "C8", "B3*B5", "B8"}},
  };
  return rows;
}

// Torsion pattern Z/2 {eta, eta^2} . monomials in x4, x8.
std::size_t eta_torsion_count(int n) {
  std::size_t count = 0;
  for (int shift : {1, 2}) {
    const int rest = n - shift;
    if (rest < 0) continue;
    for (int j = 0; 16 * j <= rest; ++j)
      if ((rest - 16 * j) % 8 == 0) ++count;
  }
  return count;
}

}  // namespace

nlohmann::ordered_json to_json(const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  auto degs = nlohmann::ordered_json::array();
  for (const auto& d : r.degrees) {
    nlohmann::ordered_json e;
    e["n"] = d.n;
    e["rank"] = d.computed.rank;
    e["torsion"] = torsion_json(d.computed);
    e["expected"] = {{"rank", d.expected.rank}, {"torsion", torsion_json(d.expected)}};
    e["match"] = d.match;
    if (!d.notes.empty()) e["notes"] = d.notes;
    degs.push_back(std::move(e));
  }
  j["degrees"] = std::move(degs);
  j["all_match"] = r.all_match();
  j["deviations_adopted"] = r.deviations;
  return j;
}

ComparisonReport check_msu_low_degrees(PageOptions options) {
  const BigradedPage page = msu_page(16, options);
  const auto table = homotopy_table(page, 16);
  ComparisonReport report{"pi_n MSU, n <= 16", {}, page.spec().deviations};
  for (const auto& row : msu_low_degree_rows()) {
    DegreeComparison cmp{row.n, table[row.n].group, group_of(row.rank, row.twos), false, {}};
    cmp.match = cmp.computed == cmp.expected;
    if (!row.free_generators.empty() && !page.basis(row.n, 0).empty()) {
      Matrix expected(0, page.basis(row.n, 0).size());
      for (const auto& g : row.free_generators) {
        const PagePoly p = page.normalize(parse_term(page.spec(), g));
        expected.append_row(page.coordinates(p, row.n, 0));
      }
      const bool lattice_ok = hermite_normal_form(expected) == page.homology(row.n, 0).cycles;
      if (!lattice_ok) {
        cmp.match = false;
        cmp.notes.push_back("free generators differ from the expected lattice");
      }
    }
    report.degrees.push_back(std::move(cmp));
  }
  return report;
}

ComparisonReport check_tjf_ring_structure(int max_degree, PageOptions options) {
  const BigradedPage page = tjf_page(max_degree, options);
  const auto table = homotopy_table(page, max_degree);
  ComparisonReport report{"pi_n tjF, n <= " + std::to_string(max_degree), {}, page.spec().deviations};
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t rank = degree_basis(n).size();
    DegreeComparison cmp{n, table[n].group, group_of(rank, eta_torsion_count(n)), false, {}};
    cmp.match = cmp.computed == cmp.expected;
    if (rank > 0) {
      const Matrix cycles = tjf_free_cycle_lattice(page, n);
      const Matrix image = image_basis(n);
      if (cycles != image) {
        cmp.match = false;
        cmp.notes.push_back("free image differs from the subring generated by 2b2, b3, b4, b2^2, b2b3, b2b4, b8");
      }
      const FPAbelianGroup coker = cokernel_of_rows(cycles.rows() ? cycles : Matrix(0, rank));
      if (coker != group_of(0, odd_b2_classes(n).size())) {
        cmp.match = false;
        cmp.notes.push_back("cokernel in jF is " + to_text(coker));
      }
      if (n <= 8) {
        std::string gens;
        for (std::size_t r = 0; r < cycles.rows(); ++r)
          gens += (r ? ", " : "") + to_text(from_coordinates(cycles.row(r), n));
        cmp.notes.push_back("free image: " + gens);
      }
    }
    if (!cmp.match && cmp.computed != cmp.expected)
      cmp.notes.push_back("computed " + to_text(cmp.computed) + ", expected " + to_text(cmp.expected));
    report.degrees.push_back(std::move(cmp));
  }
  return report;
}

bool SurjectivityReport::isomorphism() const {
  return std::all_of(checks.begin(), checks.end(), [](const BidegreeMapCheck& c) { return c.ok; });
}

std::optional<Bidegree> SurjectivityReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return Bidegree{c.n, c.s};
  return std::nullopt;
}

namespace {

class PageMap {
 public:
  PageMap(const BigradedPage& source, const BigradedPage& target, std::vector<PagePoly> images)
      : source_(source), target_(target), images_(std::move(images)) {}

  PagePoly apply(const PageMonomial& m) const {
    PagePoly acc = target_.monomial(target_.spec().unit());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) acc = target_.multiply(acc, images_[i]);
    return acc;
  }

  Matrix matrix(int n, int s) const {
    const auto& src = source_.basis(n, s);
    const auto& dst = target_.basis(n, s);
    Matrix out(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      const auto c = target_.coordinates(apply(src[j]), n, s);
      for (std::size_t i = 0; i < dst.size(); ++i) out(i, j) = c[i];
    }
    return out;
  }

 private:
  const BigradedPage& source_;
  const BigradedPage& target_;
  std::vector<PagePoly> images_;
};

bool congruent_mod2(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return reduce_mod(a, Integer(2)) == reduce_mod(b, Integer(2));
}

}  // namespace

SurjectivityReport surjectivity_check(const Integer& N, int d, PageOptions options) {
  const BigradedPage source = msu_subpage(d, options);
  const BigradedPage target = tjf_page(d, options);
  const auto& ts = target.spec();
  const auto& ss = source.spec();
  auto t = [&](std::vector<std::string> terms) { return target.normalize(parse_poly(ts, terms)); };
  auto combo = [&](std::vector<std::pair<Integer, std::string>> parts) {
    PagePoly out;
    for (const auto& [k, mono] : parts)
      for (const auto& [m, c] : parse_term(ts, mono)) out[m] += k * c;
    return target.normalize(out);
  };
  const Integer N2 = N * N;

  const PagePoly b4_image = combo({{Integer(-1), "b4"}, {2 * N, "b2^2"}});
  const PagePoly c8_image = combo({{Integer(1), "b8"}, {N, "b2^2*b4"}, {-N2, "b2^4"}});
  const PagePoly c8_printed = combo({{Integer(-1), "b8"}, {-N, "b2^2*b4"}, {N2, "b2^4"}});

  std::vector<PagePoly> images(ss.generators.size());
  images[*ss.index_of("h1")] = t({"h1"});
  images[*ss.index_of("B2")] = t({"b2"});
  images[*ss.index_of("B3")] = t({"b3"});
  images[*ss.index_of("B4")] = b4_image;
  images[*ss.index_of("C8")] = c8_image;

  SurjectivityReport report;
  report.N = N;
  report.max_degree = d;
  report.c8_image = target.to_text(c8_image);
  report.printed_c8_image = target.to_text(c8_printed);
  report.deviations = ss.deviations;
  for (const auto& dev : ts.deviations)
    if (std::find(report.deviations.begin(), report.deviations.end(), dev) == report.deviations.end())
      report.deviations.push_back(dev);

  auto relation_image = [&](const PagePoly& c8) {
    const PagePoly b2 = t({"b2"}), b3 = t({"b3"});
    PagePoly sum;
    for (const auto& [m, c] : c8) sum[m] += 4 * c;
    for (const auto& [m, c] : target.multiply(b4_image, b4_image)) sum[m] += c;
    for (const auto& [m, c] : target.multiply(b2, target.multiply(b3, b3))) sum[m] -= c;
    return target.normalize(sum);
  };
  report.relation_preserved = relation_image(c8_image).empty();
  report.printed_relation_preserved = relation_image(c8_printed).empty();

  const PageMap map(source, target, images);
  std::vector<Bidegree> bds = source.bidegrees();
  for (const auto& bd : target.bidegrees()) bds.push_back(bd);
  std::sort(bds.begin(), bds.end());
  bds.erase(std::unique(bds.begin(), bds.end()), bds.end());

  for (const auto& [n, s] : bds) {
    if (n > d) continue;
    BidegreeMapCheck c{n, s, source.basis(n, s).size(), target.basis(n, s).size(), s > 0, Integer(0), true, false};
    const Matrix m = map.matrix(n, s);
    if (c.source_dim == c.target_dim) {
      if (c.torsion) {
        c.determinant = determinant(reduce_mod(m, Integer(2)));
        c.ok = mpz_odd_p(c.determinant.get_mpz_t()) != 0;
      } else {
        c.determinant = determinant(m);
        c.ok = abs(c.determinant) == 1;
      }
    }
    if (n >= 1) {
      const Matrix lhs = target.d3_matrix(n, s) * m;
      const Matrix rhs = map.matrix(n - 1, s + 3) * source.d3_matrix(n, s);
      c.chain_map = congruent_mod2(lhs, rhs);
    }
    c.ok = c.ok && c.chain_map;
    report.checks.push_back(std::move(c));
  }
  return report;
}

nlohmann::ordered_json to_json(const SurjectivityReport& r) {
  nlohmann::ordered_json j;
  j["N"] = r.N.get_str();
  j["max_degree"] = r.max_degree;
  j["isomorphism"] = r.isomorphism();
  if (auto f = r.first_failure()) j["first_failure"] = {{"n", f->first}, {"s", f->second}};
  j["c8_image"] = r.c8_image;
  j["relation_preserved"] = r.relation_preserved;
  j["printed_c8_image"] = r.printed_c8_image;
  j["printed_relation_preserved"] = r.printed_relation_preserved;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    arr.push_back({{"n", c.n},
                   {"s", c.s},
                   {"source_dim", c.source_dim},
                   {"target_dim", c.target_dim},
                   {"sector", c.torsion ? "torsion" : "free"},
                   {"determinant", c.determinant.get_str()},
                   {"chain_map", c.chain_map},
                   {"ok", c.ok}});
  }
  j["bidegrees"] = std::move(arr);
  j["deviations_adopted"] = r.deviations;
  return j;
}

}  // namespace jfl
