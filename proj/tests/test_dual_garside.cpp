#include <doctest.h>

#include <random>

#include "braidspan/dual_garside.hpp"
#include "braidspan/quantum_rep.hpp"
#include "support.hpp"

using namespace braidspan;

namespace {

SimpleElement blocks(int n, std::vector<Block> b) { return SimpleElement::from_blocks(n, std::move(b)); }

bool same_braid_by_matrix(const BraidWord& u, const BraidWord& v) {
  return rho_v_word(u.strands, 2, u) == rho_v_word(v.strands, 2, v);
}

}  // namespace

TEST_CASE("simple elements from partitions") {
  CHECK(blocks(3, {{1, 2, 3}}) == SimpleElement::delta(3));
  CHECK(blocks(3, {{1}, {2}, {3}}).is_identity());
  CHECK_THROWS_AS(blocks(4, {{1, 3}, {2, 4}}), NotSimpleError);
  CHECK_THROWS_AS(blocks(3, {{1, 2}}), NotSimpleError);
  CHECK_THROWS_AS(blocks(3, {{1, 2}, {2, 3}}), NotSimpleError);
}

TEST_CASE("band words of simples") {
  CHECK(simple_to_band_word(SimpleElement::delta(3)).letters == std::vector<int>{1, 2});
  CHECK(simple_to_band_word(blocks(3, {{1, 3}, {2}})).letters == std::vector<int>{-2, 1, 2});
  CHECK(simple_to_band_word(SimpleElement::identity(4)).letters.empty());
}

TEST_CASE("meet") {
  const auto d = SimpleElement::delta(3);
  const auto a12 = SimpleElement::band(3, 1, 2);
  const auto a23 = SimpleElement::band(3, 2, 3);
  const auto a13 = SimpleElement::band(3, 1, 3);
  CHECK(meet(d, a12) == a12);
  CHECK(meet(a12, a23).is_identity());
  CHECK(meet(d, a13) == a13);
}

TEST_CASE("right complement") {
  const auto a12 = SimpleElement::band(3, 1, 2);
  CHECK(right_complement(a12) == SimpleElement::band(3, 2, 3));
  CHECK(right_complement(SimpleElement::delta(3)).is_identity());
  CHECK(right_complement(SimpleElement::band(3, 1, 3)) == a12);
}

TEST_CASE("tau") {
  CHECK(tau(SimpleElement::band(3, 1, 2), 1) == SimpleElement::band(3, 1, 3));
  CHECK(tau(SimpleElement::delta(3), 1) == SimpleElement::delta(3));
  for (int n = 2; n <= 5; ++n)
    for (const auto& x : enumerate_simples(n)) {
      CHECK(tau(x, n) == x);
      CHECK(tau(tau(x, 1), -1) == x);
    }
}

TEST_CASE("Catalan counts") {
  CHECK(enumerate_simples(1).size() == 1);
  CHECK(enumerate_simples(2).size() == 2);
  CHECK(enumerate_simples(3).size() == 5);
  CHECK(enumerate_simples(4).size() == 14);
  CHECK(enumerate_simples(5).size() == 42);
  CHECK(enumerate_simples(8).size() == 1430);
}

TEST_CASE("lattice laws over all simples") {
  for (int n = 3; n <= 5; ++n) {
    const auto all = enumerate_simples(n);
    for (const auto& x : all) {
      // x d(x) = delta and d(d(x)) = tau(x)
      CHECK(simple_product(x, right_complement(x)).is_delta());
      CHECK(right_complement(right_complement(x)) == tau(x, 1));
      CHECK(x.band_length() == exponent_sum(simple_to_band_word(x)));
      for (const auto& y : all) {
        const auto h = meet(x, y);
        CHECK(refines(h, x));
        CHECK(refines(h, y));
        CHECK(meet(x, y) == meet(y, x));
      }
    }
    // meet is the greatest lower bound
    for (const auto& x : all)
      for (const auto& y : all) {
        const auto h = meet(x, y);
        for (const auto& z : all)
          if (refines(z, x) && refines(z, y)) CHECK(refines(z, h));
      }
  }
}

TEST_CASE("simple words reproduce the simple") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& x : enumerate_simples(n)) {
      const auto w = simple_to_band_word(x);
      CHECK(word_permutation(w) == x.permutation());
      const auto nf = normal_form(w);
      if (x.is_identity()) {
        CHECK(nf.factors.empty());
        CHECK(nf.delta_power == 0);
      } else if (x.is_delta()) {
        CHECK(nf.factors.empty());
        CHECK(nf.delta_power == 1);
      } else {
        REQUIRE(nf.factors.size() == 1);
        CHECK(nf.factors[0] == x);
        CHECK(nf.delta_power == 0);
      }
    }
}

TEST_CASE("normal forms") {
  auto nf = normal_form(parse_word("1 2", 3));
  CHECK(nf.delta_power == 1);
  CHECK(nf.factors.empty());

  nf = normal_form(parse_word("-1", 3));
  CHECK(nf.delta_power == -1);
  REQUIRE(nf.factors.size() == 1);
  CHECK(nf.factors[0] == SimpleElement::band(3, 1, 3));

  nf = normal_form(parse_word("1 1", 3));
  CHECK(nf.delta_power == 0);
  CHECK(nf.factors == std::vector{SimpleElement::band(3, 1, 2), SimpleElement::band(3, 1, 2)});

  CHECK(sup_inf_len(normal_form(delta_word(4))) == GarsideBounds{1, 1, 1});
  CHECK(sup_inf_len(normal_form(parse_word("-1", 3))) == GarsideBounds{-1, 0, 1});
  CHECK(sup_inf_len(normal_form(BraidWord(3, {}))) == GarsideBounds{0, 0, 0});
}

TEST_CASE("canonical length") {
  CHECK(garside_length(1, 1) == 1);
  CHECK(garside_length(-1, 0) == 1);
  CHECK(garside_length(-2, 3) == 5);
  CHECK(garside_length(2, 3) == 3);
  CHECK(garside_length(-3, -1) == 3);
}

TEST_CASE("normal form invariants on random words") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 3;
    const auto w = testsupport::random_word(rng, n, 10);
    const auto nf = normal_form(w);
    for (std::size_t k = 0; k < nf.factors.size(); ++k) {
      CHECK_FALSE(nf.factors[k].is_identity());
      CHECK_FALSE(nf.factors[k].is_delta());
      if (k + 1 < nf.factors.size()) CHECK(is_left_weighted(nf.factors[k], nf.factors[k + 1]));
    }
    CHECK(word_permutation(normal_form_word(nf)) == word_permutation(w));
    if (n <= 4) CHECK(same_braid_by_matrix(normal_form_word(nf), w));
    // exponent sum is (n-1) p + sum of band lengths
    int e = (n - 1) * nf.delta_power;
    for (const auto& x : nf.factors) e += x.band_length();
    CHECK(e == exponent_sum(w));
  }
}

TEST_CASE("word problem") {
  CHECK(braids_equal(parse_word("1 2 1", 3), parse_word("2 1 2", 3)));
  CHECK(braids_equal(parse_word("1 -1", 3), BraidWord(3, {})));
  CHECK_FALSE(braids_equal(parse_word("1", 3), parse_word("2", 3)));
  CHECK(braids_equal(parse_word("1 3", 4), parse_word("3 1", 4)));
  CHECK_FALSE(braids_equal(parse_word("1 2", 3), parse_word("2 1", 3)));
}

TEST_CASE("brute-force inf and sup") {
  CHECK(sup_inf_oracle(parse_word("1", 3), 6) == std::pair{0, 1});
  CHECK(sup_inf_oracle(delta_word(3), 6) == std::pair{1, 1});
  CHECK(sup_inf_oracle(parse_word("1 -2", 3), 6) == std::pair{-1, 1});
  CHECK(sup_inf_oracle(BraidWord(3, {}), 6) == std::pair{0, 0});
  CHECK_THROWS(sup_inf_oracle(BraidWord(5, {1}), 6));
  CHECK_THROWS(sup_inf_oracle(BraidWord(3, {1, 1, 1}), 2));
}

TEST_CASE("normal form agrees with brute force on B4") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = testsupport::random_word(rng, 4, 2);
    const auto b = sup_inf_len(normal_form(w));
    CHECK(sup_inf_oracle(w, 6) == std::pair{b.inf, b.sup});
  }
}
