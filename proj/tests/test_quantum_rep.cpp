#include <doctest.h>

#include <random>

#include "braidspan/dual_garside.hpp"
#include "braidspan/quantum_rep.hpp"
#include "support.hpp"

using namespace braidspan;
using testsupport::matrix_of;
using testsupport::mono;

namespace {

LaurentPoly one() { return LaurentPoly::constant(1); }
LaurentPoly zero() { return LaurentPoly(); }

int rescale(const WeightIndex& e) { return basis_rescaling(e); }

// Image of the coordinate vector x (rescaled basis, weight m) under E, in the
// rescaled basis of weight m - 1.
std::vector<LaurentPoly> e_image(int n, int m, const std::vector<LaurentPoly>& x) {
  const WeightBasis from(n, m), to(n, m - 1);
  testsupport::RawVector raw;
  for (int k = 0; k < from.size(); ++k)
    if (!x[k].is_zero()) raw[from[k]] += x[k].scaled(1, 0, rescale(from[k]));
  std::vector<LaurentPoly> out(to.size());
  for (const auto& [f, c] : testsupport::apply_e(raw)) out[to.rank(f)] += c.scaled(1, 0, -rescale(f));
  return out;
}

std::vector<LaurentPoly> column(const PolyMatrix& a, int c) {
  std::vector<LaurentPoly> out;
  for (int r = 0; r < a.rows(); ++r) out.push_back(a(r, c));
  return out;
}

std::vector<LaurentPoly> times(const PolyMatrix& a, const std::vector<LaurentPoly>& x) {
  std::vector<LaurentPoly> out(a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

}  // namespace

TEST_CASE("weight indices in colex order") {
  CHECK(enumerate_weight_indices(2, 2) == std::vector<WeightIndex>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(enumerate_weight_indices(3, 1).size() == 3);
  CHECK(enumerate_weight_indices(4, 3).size() == 20);
  CHECK(enumerate_weight_indices(1, 4) == std::vector<WeightIndex>{{4}});
  CHECK(weight_space_dim(3, 2) == 3);
  CHECK(weight_space_dim(5, 3) == 20);
  CHECK(weight_space_dim(2, 7) == 1);
  for (int l = 1; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m) {
      const WeightBasis b(l, m);
      CHECK(b.size() == weight_space_dim(l + 1, m));
      for (int k = 0; k < b.size(); ++k) CHECK(b.rank(b[k]) == k);
    }
  CHECK(WeightBasis(2, 2).rank({3, 0}) == -1);
}

TEST_CASE("R-matrix images") {
  using Key = std::pair<int, int>;
  auto r00 = r_matrix_image(0, 0);
  CHECK(r00.size() == 1);
  CHECK(r00.at(Key{0, 0}) == one());
  auto r10 = r_matrix_image(1, 0);
  CHECK(r10.size() == 2);
  CHECK(r10.at(Key{0, 1}) == mono(1, 0, -1));
  CHECK(r10.at(Key{1, 0}) == one() - mono(1, 0, -2));
  auto r01 = r_matrix_image(0, 1);
  CHECK(r01.size() == 1);
  CHECK(r01.at(Key{1, 0}) == mono(1, 0, -1));
  CHECK(r_matrix_image(0, 2).at(Key{2, 0}) == mono(1, 0, -2));
}

TEST_CASE("generator matrices, n = 2") {
  const auto plus = rho_v_generator(2, 1, 1, 1);
  CHECK(plus.basis == std::vector<WeightIndex>{{1, 0}, {0, 1}});
  CHECK(plus.entries == matrix_of({{one() - mono(1, 0, -2), one()}, {mono(1, 0, -2), zero()}}));
  const auto minus = rho_v_generator(2, 1, 1, -1);
  CHECK(minus.entries == matrix_of({{zero(), mono(1, 0, 2)}, {one(), one() - mono(1, 0, 2)}}));
  CHECK(determinant(plus.entries) == mono(-1, 0, -2));

  const auto sq = rho_v_generator(2, 2, 1, 1);
  CHECK(sq.basis == std::vector<WeightIndex>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(column(sq.entries, 2) == std::vector<LaurentPoly>{one(), zero(), zero()});

  CHECK_THROWS(rho_v_generator(3, 1, 3, 1));
  CHECK_THROWS(rho_v_generator(3, 1, 1, 2));
}

TEST_CASE("inverse generators") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int i = 1; i < n; ++i) {
        const auto p = rho_v_generator(n, m, i, 1).entries;
        const auto q = rho_v_generator(n, m, i, -1).entries;
        CHECK((p * q).is_identity());
        CHECK((q * p).is_identity());
        CHECK(unit_inverse(p) == q);
      }
}

TEST_CASE("word matrices") {
  CHECK(rho_v_word(3, 2, BraidWord(3, {})).entries.is_identity());
  CHECK(rho_v_word(2, 2, parse_word("1 -1", 2)).entries.is_identity());
  CHECK(rho_v_word(3, 2, parse_word("1 2 1", 3)) == rho_v_word(3, 2, parse_word("2 1 2", 3)));
  CHECK_THROWS(rho_v_word(3, 2, BraidWord(4, {1})));
}

TEST_CASE("braid relations hold exactly") {
  for (int n = 3; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      for (int i = 1; i + 1 < n; ++i) {
        CHECK(rho_v_word(n, m, BraidWord(n, {i, i + 1, i})) == rho_v_word(n, m, BraidWord(n, {i + 1, i, i + 1})));
        CHECK(rho_v_word(n, m, BraidWord(n, {-i, -(i + 1), -i})) ==
              rho_v_word(n, m, BraidWord(n, {-(i + 1), -i, -(i + 1)})));
      }
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
          CHECK(rho_v_word(n, m, BraidWord(n, {i, j})) == rho_v_word(n, m, BraidWord(n, {j, i})));
    }
}

TEST_CASE("word evaluation is multiplicative") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = testsupport::random_word(rng, 4, 4);
    const auto v = testsupport::random_word(rng, 4, 4);
    CHECK(rho_v_word(4, 2, u.concat(v)).entries == rho_v_word(4, 2, u).entries * rho_v_word(4, 2, v).entries);
    CHECK((rho_v_word(4, 2, u).entries * rho_v_word(4, 2, u.inverse()).entries).is_identity());
  }
}

TEST_CASE("E and K on tensors") {
  auto a = e_power_action({0, 1}, 1);
  CHECK(a.size() == 1);
  CHECK(a.at({0, 0}) == one());
  auto b = e_power_action({1, 0}, 1);
  CHECK(b.size() == 1);
  CHECK(b.at({0, 0}) == mono(1, 0, 1));
  CHECK(e_power_action({0, 0}, 1).empty());
  CHECK(e_power_action({2, 1}, 0).at({2, 1}) == one());
  CHECK(k_action({1, 2}) == mono(1, -6, 2));
}

TEST_CASE("E-action matches the coproduct recursion") {
  for (int l = 1; l <= 4; ++l)
    for (int m = 0; m <= 3; ++m)
      for (const auto& e : enumerate_weight_indices(l, m)) {
        testsupport::RawVector v{{e, one()}};
        for (int k = 0; k <= m + 1; ++k) {
          auto lib = e_power_action(e, k);
          CHECK(lib == v);
          v = testsupport::apply_e(v);
        }
      }
}

TEST_CASE("K weights") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& e : enumerate_weight_indices(n, m)) {
        CHECK(k_action(e) == mono(1, -2 * m, n));
        CHECK(testsupport::coproduct_k(e) == mono(1, -2 * m, n));
      }
}

TEST_CASE("null-vector matrix") {
  const auto p21 = phi_matrix(2, 1);
  CHECK(p21 == matrix_of({{-one()}, {one()}}));
  const auto p22 = phi_matrix(2, 2);
  CHECK(p22 == matrix_of({{mono(1, 2, 0)}, {mono(-1, 2, 0)}, {one()}}));
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m) {
      const auto phi = phi_matrix(n, m);
      CHECK(phi.rows() == weight_space_dim(n + 1, m));
      CHECK(phi.cols() == weight_space_dim(n, m));
      for (int r = 0; r < phi.rows(); ++r)
        for (int c = 0; c < phi.cols(); ++c)
          if (!phi(r, c).is_zero()) CHECK(degree_span(phi(r, c), Variable::s) == std::pair{0, 0});
      const WeightBasis rows(n, m);
      for (int c = 0; c < phi.cols(); ++c)
        CHECK(testsupport::apply_e(testsupport::column_as_raw(phi, rows.items(), c)).empty());
    }
}

TEST_CASE("null-vector representation") {
  const auto w = rho_w_word(2, 2, parse_word("1", 2));
  CHECK(w.flavor == Flavor::W);
  CHECK(w.basis == std::vector<WeightIndex>{{0, 2}});
  CHECK(w.entries == matrix_of({{mono(1, 2, -4)}}));
  CHECK(rho_w_word(3, 2, BraidWord(3, {})).entries.is_identity());
  CHECK(rho_w_word(3, 1, parse_word("1 2 -1 -2 1 -1 2 1 -2 -1", 3)).entries.is_identity());
  CHECK(rho_w_word(3, 3, parse_word("1 2 1", 3)) == rho_w_word(3, 3, parse_word("2 1 2", 3)));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = testsupport::random_word(rng, 3, 4);
    const auto v = testsupport::random_word(rng, 3, 4);
    CHECK(rho_w_word(3, 2, u.concat(v)).entries == rho_w_word(3, 2, u).entries * rho_w_word(3, 2, v).entries);
  }
}

TEST_CASE("braid action commutes with E") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int i = 1; i < n; ++i)
        for (int sign : {1, -1}) {
          const auto big = rho_v_generator(n, m, i, sign).entries;
          const auto small = rho_v_generator(n, m - 1, i, sign).entries;
          for (int c = 0; c < big.cols(); ++c) {
            std::vector<LaurentPoly> unit(big.cols());
            unit[c] = one();
            CHECK(e_image(n, m, column(big, c)) == times(small, e_image(n, m, unit)));
          }
        }
}

TEST_CASE("s-degrees of rho^V straddle zero") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 2;
    const int m = 1 + trial % 3;
    const auto w = testsupport::random_word(rng, n, 6);
    const auto [lo, hi] = degree_span(rho_v_word(n, m, w).entries, Variable::s);
    CHECK(lo <= 0);
    CHECK(hi >= 0);
  }
}

TEST_CASE("column bounds for ascending products") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int sign : {1, -1}) {
            CAPTURE(n);
            CAPTURE(m);
            CAPTURE(i);
            CAPTURE(j);
            CAPTURE(sign);
            const auto mat = rho_v_word(n, m, testsupport::ascending(n, i, j, sign));
            CHECK(testsupport::column_bound_violations(mat.entries, mat.basis, i, j, sign) == 0);
          }
}

TEST_CASE("simple elements have s-degrees in [-2m, 0]") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m)
      for (const auto& x : enumerate_simples(n)) {
        const auto [lo, hi] = degree_span(rho_v_word(n, m, simple_to_band_word(x)).entries, Variable::s);
        CHECK(lo >= -2 * m);
        CHECK(hi <= 0);
      }
}

TEST_CASE("W degrees sit inside V degrees") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 2;
    const auto w = testsupport::random_word(rng, n, 6);
    const auto v = rho_v_word(n, 2, w);
    const auto vs = degree_span(v.entries, Variable::s);
    const auto ws = degree_span(null_vector_matrix(v).entries, Variable::s);
    CHECK(vs.first <= ws.first);
    CHECK(ws.second <= vs.second);
  }
}
