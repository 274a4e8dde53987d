#include <doctest.h>

#include "jfl/genus.hpp"
#include "support.hpp"

using namespace jfl;
using test::error_code;

namespace {

const JFElement b2 = JFElement::b2(), b3 = JFElement::b3(), b4 = JFElement::b4();

JFElement c(long k) { return JFElement::constant(Integer(k)); }

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficient of h^k in (1 + h)^6 / (1 + 6h) = sum_i C(6, i) h^i sum_j (-6h)^j.
Integer sextic_class(int k) {
  Integer s = 0, p = 1;
  for (int j = 0; j <= k; ++j) {
    s += binomial(6, k - j) * p;
    p *= -6;
  }
  return s;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions_without_ones(4) == std::vector<Partition>{{4}, {2, 2}});
  CHECK(partitions_without_ones(8).size() == 7);
  CHECK(to_text(Partition{2, 2}) == "2,2");
  CHECK(parse_partition("2,3") == Partition{3, 2});
  CHECK(error_code([] { parse_partition("2,x"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Chern data validation") {
  CHECK(error_code([] { ChernData(2, {{{1, 1}, Integer(3)}}); }) == ErrorCode::InvalidArgument);
  CHECK(error_code([] { ChernData(2, {{{3}, Integer(3)}}); }) == ErrorCode::InvalidArgument);
  const ChernData d(4, {{{4}, Integer(7)}});
  CHECK(d.get({2, 2}) == 0);
  CHECK(d.get({4}) == 7);
  CHECK(d.numbers().size() == 5);
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_m(1) == 2);
  CHECK(milnor_m(2) == 3);
  CHECK(milnor_m(3) == 2);
  CHECK(milnor_m(4) == 5);
  CHECK(milnor_m(5) == 1);
  CHECK(milnor_s(ChernData(2, {{{2}, Integer(24)}})) == -48);
  CHECK(milnor_s(ChernData(4, {{{2, 2}, Integer(1350)}, {{4}, Integer(2610)}})) == -7740);
  CHECK(milnor_s(ChernData(3, {})) == 0);
  CHECK(error_code([] { milnor_s(ChernData(5, {})); }) == ErrorCode::UnsupportedDim);
  CHECK(minimal_milnor_number(2) == -48);
  CHECK(minimal_milnor_number(3) == 6);
  CHECK(minimal_milnor_number(4) == 20);
}

TEST_CASE("K3 surface") {
  const ChernData k3(2, {{{2}, Integer(24)}});
  CHECK(genus_deg4(k3) == c(2) * b2);
  CHECK(genus_at_z0(genus_deg4(k3)) == 24);
}

TEST_CASE("sextic fourfold against its total Chern class") {
  CHECK(sextic_class(2) == 15);
  CHECK(sextic_class(4) == 435);
  const ChernData x = chern_data_from_total_class(4, {Integer(1), sextic_class(1), sextic_class(2),
                                                      sextic_class(3), sextic_class(4)},
                                                  Integer(6));
  CHECK(sextic_class(1) == 0);
  CHECK(x.get({2, 2}) == 6 * 15 * 15);
  CHECK(x.get({4}) == 6 * 435);
  const JFElement g = genus_deg8(x);
  CHECK(g == c(387) * b4 + c(2) * b2 * b2);
  CHECK(genus_at_z0(g) == 387 * 6 + 2 * 144);
  CHECK(genus_at_z0(g) == x.get({4}));
}

TEST_CASE("twisted projective space") {
  // (1 + h)^2 (1 - h)^2 = 1 - 2h^2 + h^4.
  const ChernData x = chern_data_from_total_class(3, {Integer(1), Integer(0), Integer(-2), Integer(0)}, Integer(1));
  CHECK(x.get({3}) == 0);
  CHECK(genus_deg6(x).is_zero());
}

TEST_CASE("products") {
  const ChernData k3(2, {{{2}, Integer(24)}});
  const ChernData kk = product(k3, k3);
  // c(K3 x K3) = (1 + c2)(1 + c2').
  CHECK(kk.get({4}) == 576);
  CHECK(kk.get({2, 2}) == 1152);
  CHECK(genus_deg8(kk) == c(4) * b2 * b2);
}

TEST_CASE("genus errors") {
  CHECK(error_code([] { genus_deg4(ChernData(2, {{{2}, Integer(6)}})); }) == ErrorCode::NonIntegralGenus);
  CHECK(error_code([] { genus_deg6(ChernData(3, {{{3}, Integer(1)}})); }) == ErrorCode::NonIntegralGenus);
  CHECK(error_code([] { genus_deg8(ChernData(2, {})); }) == ErrorCode::UnsupportedDim);
  CHECK(error_code([] { elliptic_genus(ChernData(5, {})); }) == ErrorCode::UnsupportedDim);
  try {
    genus_deg4(ChernData(2, {{{2}, Integer(6)}}));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }
}

TEST_CASE("generator genera") {
  for (int n : {-2, -1, 0, 1, 3}) {
    CAPTURE(n);
    const Integer N(n);
    const auto table = generator_genus_table(N);
    REQUIRE(table.size() == 5);
    CHECK(table[0].genus == c(2) * b2);
    CHECK(table[1].genus == b3);
    CHECK(table[2].genus == b2 * b2);
    CHECK(table[3].genus == -b4 + c(2 * n) * b2 * b2);
    CHECK(table[4].genus == -b2 * b4 + c(2 * n) * b2 * b2 * b2);
    for (const auto& g : table) CHECK(in_image(g.genus));
    const ChernData d = b4_realizing_data(N);
    CHECK(milnor_s(d) == 20);
    CHECK(genus_deg8(d) == table[3].genus);
  }
}

TEST_CASE("Chern data JSON round trip") {
  const ChernData d(4, {{{2, 2}, Integer(1350)}, {{4}, Integer(2610)}});
  const auto j = to_json(d);
  CHECK(chern_from_json(j) == d);
  CHECK(j["dim"] == 4);
  CHECK(j["numbers"]["2,2"] == "1350");
  CHECK(chern_from_json(nlohmann::ordered_json::parse(R"({"dim":2,"numbers":{"2":24}})")) ==
        ChernData(2, {{{2}, Integer(24)}}));
}
