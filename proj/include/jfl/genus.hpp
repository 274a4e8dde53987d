#pragma once

// Classical elliptic genus of SU-manifolds in real dimensions 4, 6, 8 from Chern numbers,
// Milnor numbers and their values on MSU generators.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jfl/integer.hpp"
#include "jfl/jf_ring.hpp"

namespace jfl {

// Parts in descending order.
using Partition = std::vector<int>;

std::vector<Partition> partitions(int n);
std::vector<Partition> partitions_without_ones(int n);
std::string to_text(const Partition& p);  // "2,2"
Partition parse_partition(const std::string& text);

class ChernData {
 public:
  // Missing SU partitions default to 0. Throws InvalidArgument if a partition has the wrong
  // size or a partition with a part equal to 1 carries a nonzero value.
  ChernData(int complex_dim, const std::map<Partition, Integer>& numbers);

  int complex_dim() const noexcept { return dim_; }
  // Every partition of complex_dim, including those with parts equal to 1.
  const std::map<Partition, Integer>& numbers() const noexcept { return numbers_; }
  Integer get(const Partition& p) const;

  friend bool operator==(const ChernData&, const ChernData&) = default;

 private:
  int dim_;
  std::map<Partition, Integer> numbers_;
};

// Chern numbers of a manifold whose total Chern class is sum_i c[i] h^i with h^dim integrating
// to top_integral.
ChernData chern_data_from_total_class(int complex_dim, const std::vector<Integer>& total_class,
                                      const Integer& top_integral);

// Chern numbers of X x Y via c(X x Y) = c(X) c(Y).
ChernData product(const ChernData& x, const ChernData& y);

nlohmann::ordered_json to_json(const ChernData& d);
ChernData chern_from_json(const nlohmann::ordered_json& j);

// p if i + 1 is a power of the prime p, 1 otherwise.
Integer milnor_m(int i);
// s2 = -2 c2, s3 = 3 c3, s4 = 2 c2^2 - 4 c4. Throws UnsupportedDim outside complex dims 2..4.
Integer milnor_s(const ChernData& d);
// Minimal positive Milnor number of an indecomposable in MSU_2i: -48 for i = 2 (the K3
// surface), 2 m_i m_(i-1) for even i >= 4, m_i m_(i-1) for odd i >= 3.
Integer minimal_milnor_number(int i);

// c2/12 b2, c3/2 b3, -s4/20 b4 + (c2^2/240 - c4/720) b2^2. Throw UnsupportedDim when the data
// has another dimension and NonIntegralGenus when a coefficient is not an integer.
JFElement genus_deg4(const ChernData& d);
JFElement genus_deg6(const ChernData& d);
JFElement genus_deg8(const ChernData& d);
// Dispatches on complex dimension.
JFElement elliptic_genus(const ChernData& d);

// q^0 value at z = 0 of the genus; equals the Euler characteristic.
Integer genus_at_z0(const JFElement& genus);

struct GeneratorGenus {
  std::string name;
  JFElement genus;
};

// [2B2], [B3], [B2^2], [B4], [B2B4]. The first, second and fourth come from Chern data with
// the minimal Milnor numbers; the products use the multiplicativity of the genus.
std::vector<GeneratorGenus> generator_genus_table(const Integer& N);

// Chern data with s4 = 20 whose degree-8 genus is -b4 + 2N b2^2.
ChernData b4_realizing_data(const Integer& N);

}  // namespace jfl
