#include "jfl/genus.hpp"

#include <algorithm>
#include <sstream>

#include "jfl/error.hpp"
#include "jfl/series.hpp"

namespace jfl {

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

Rational ratio(const Integer& num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool has_one(const Partition& p) { return std::find(p.begin(), p.end(), 1) != p.end(); }

Integer to_integer(const Rational& r, const std::string& what) {
  if (r.get_den() != 1) throw Error(ErrorCode::NonIntegralGenus, what + " = " + r.get_str() + " is not an integer");
  return r.get_num();
}

void require_dim(const ChernData& d, int dim) {
  if (d.complex_dim() != dim)
    throw Error(ErrorCode::UnsupportedDim, "expected complex dimension " + std::to_string(dim) + ", got " +
                                               std::to_string(d.complex_dim()));
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_without_ones(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions(n))
    if (!has_one(p)) out.push_back(std::move(p));
  return out;
}

std::string to_text(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size() || v <= 0) throw std::invalid_argument(part);
      p.push_back(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad partition '" + text + "'");
    }
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

ChernData::ChernData(int complex_dim, const std::map<Partition, Integer>& numbers) : dim_(complex_dim) {
  if (complex_dim <= 0) throw Error(ErrorCode::InvalidArgument, "complex dimension must be positive");
  for (const auto& p : partitions(complex_dim)) numbers_[p] = 0;
  for (const auto& [p_in, v] : numbers) {
    Partition p = p_in;
    std::sort(p.begin(), p.end(), std::greater<>());
    if (!numbers_.contains(p))
      throw Error(ErrorCode::InvalidArgument, "partition " + to_text(p) + " does not have size " + std::to_string(dim_));
    if (has_one(p) && v != 0)
      throw Error(ErrorCode::InvalidArgument, "Chern number c_" + to_text(p) + " must vanish when c1 = 0");
    numbers_[p] = v;
  }
}

Integer ChernData::get(const Partition& p_in) const {
  Partition p = p_in;
  std::sort(p.begin(), p.end(), std::greater<>());
  auto it = numbers_.find(p);
  if (it == numbers_.end()) throw Error(ErrorCode::InvalidArgument, "partition " + to_text(p) + " has the wrong size");
  return it->second;
}

ChernData chern_data_from_total_class(int complex_dim, const std::vector<Integer>& c, const Integer& top_integral) {
  auto coeff = [&c](int i) { return i < static_cast<int>(c.size()) ? c[i] : Integer(0); };
  std::map<Partition, Integer> numbers;
  for (const auto& p : partitions(complex_dim)) {
    Integer v = top_integral;
    for (int part : p) v *= coeff(part);
    numbers[p] = v;
  }
  return ChernData(complex_dim, numbers);
}

ChernData product(const ChernData& x, const ChernData& y) {
  const int dx = x.complex_dim(), dy = y.complex_dim();
  std::map<Partition, Integer> numbers;
  for (const auto& lambda : partitions(dx + dy)) {
    // Distribute each factor c_k(X x Y) = sum_{a+b=k} c_a(X) c_b(Y); keep splits of dimension (dx, dy).
    Integer total = 0;
    Partition px, py;
    auto rec = [&](auto&& self, std::size_t j, int sx) -> void {
      if (sx > dx) return;
      if (j == lambda.size()) {
        if (sx != dx) return;
        total += x.get(px) * y.get(py);
        return;
      }
      for (int a = 0; a <= lambda[j]; ++a) {
        const int b = lambda[j] - a;
        if (a) px.push_back(a);
        if (b) py.push_back(b);
        self(self, j + 1, sx + a);
        if (a) px.pop_back();
        if (b) py.pop_back();
      }
    };
    rec(rec, 0, 0);
    numbers[lambda] = total;
  }
  // Products of SU-manifolds are SU; the c1-partitions vanish identically.
  return ChernData(dx + dy, numbers);
}

nlohmann::ordered_json to_json(const ChernData& d) {
  nlohmann::ordered_json j;
  j["dim"] = d.complex_dim();
  nlohmann::ordered_json nums = nlohmann::ordered_json::object();
  for (auto it = d.numbers().rbegin(); it != d.numbers().rend(); ++it) nums[to_text(it->first)] = it->second.get_str();
  j["numbers"] = std::move(nums);
  return j;
}

ChernData chern_from_json(const nlohmann::ordered_json& j) {
  const int dim = j.at("dim").get<int>();
  std::map<Partition, Integer> numbers;
  for (const auto& [key, value] : j.at("numbers").items()) {
    const Integer v = value.is_string() ? parse_integer(value.get<std::string>()) : Integer(value.get<long>());
    numbers[parse_partition(key)] = v;
  }
  return ChernData(dim, numbers);
}

Integer milnor_m(int i) {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "milnor_m needs i >= 1");
  int n = i + 1;
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? Integer(p) : Integer(1);
}

Integer milnor_s(const ChernData& d) {
  switch (d.complex_dim()) {
    case 2: return -2 * d.get({2});
    case 3: return 3 * d.get({3});
    case 4: return 2 * d.get({2, 2}) - 4 * d.get({4});
    default: throw Error(ErrorCode::UnsupportedDim, "Milnor numbers are tabulated for complex dimensions 2, 3, 4");
  }
}

Integer minimal_milnor_number(int i) {
  if (i < 2) throw Error(ErrorCode::InvalidArgument, "MSU has no indecomposables below real dimension 4");
  if (i == 2) return -48;
  if (i % 2 == 0) return 2 * milnor_m(i) * milnor_m(i - 1);
  return milnor_m(i) * milnor_m(i - 1);
}

JFElement genus_deg4(const ChernData& d) {
  require_dim(d, 2);
  return to_integer(ratio(d.get({2}), 12), "c2/12") * JFElement::b2();
}

JFElement genus_deg6(const ChernData& d) {
  require_dim(d, 3);
  return to_integer(ratio(d.get({3}), 2), "c3/2") * JFElement::b3();
}

JFElement genus_deg8(const ChernData& d) {
  require_dim(d, 4);
  const Rational b4_coeff = -ratio(milnor_s(d), 20);
  const Rational b2sq_coeff = ratio(d.get({2, 2}), 240) - ratio(d.get({4}), 720);
  const JFElement b2 = JFElement::b2();
  return to_integer(b4_coeff, "-s4/20") * JFElement::b4() +
         to_integer(b2sq_coeff, "c2^2/240 - c4/720") * (b2 * b2);
}

JFElement elliptic_genus(const ChernData& d) {
  switch (d.complex_dim()) {
    case 2: return genus_deg4(d);
    case 3: return genus_deg6(d);
    case 4: return genus_deg8(d);
    default: throw Error(ErrorCode::UnsupportedDim, "genus formulas cover real dimensions 4, 6, 8");
  }
}

Integer genus_at_z0(const JFElement& genus) {
  const auto ev = eval_series(genus, 1);
  return specialize_z0(ev.series).at(0);
}

ChernData b4_realizing_data(const Integer& N) {
  return ChernData(4, {{{2, 2}, Integer(576 * N - 2)}, {{4}, Integer(288 * N - 6)}});
}

std::vector<GeneratorGenus> generator_genus_table(const Integer& N) {
  // c2 = -s2/2, c3 = s3/3.
  const ChernData k3(2, {{{2}, Integer(-minimal_milnor_number(2) / 2)}});
  const ChernData b3(3, {{{3}, Integer(minimal_milnor_number(3) / 3)}});
  const JFElement g2b2 = genus_deg4(k3);
  const JFElement gb3 = genus_deg6(b3);
  const JFElement gb4 = genus_deg8(b4_realizing_data(N));
  return {
      {"[2B2]", g2b2},
      {"[B3]", gb3},
      {"[B2^2]", divide_exact(g2b2 * g2b2, Integer(4))},
      {"[B4]", gb4},
      {"[B2B4]", divide_exact(g2b2 * gb4, Integer(2))},
  };
}

}  // namespace jfl
