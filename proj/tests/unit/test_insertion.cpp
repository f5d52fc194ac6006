#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "../common/checks.hpp"
#include "xmk/insertion.hpp"

using namespace xmk;

TEST_CASE("row insertion bumps into the next row") {
  Tableau t(check::Rows{{3, 6}});
  Cell c = row_insert(t, 1);
  CHECK(t == Tableau(check::Rows{{1, 6}, {3}}));
  CHECK(c.row == 1);
  CHECK(c.col == 0);
  Tableau e;
  row_insert(e, 5);
  CHECK(e == Tableau(check::Rows{{5}}));
}

TEST_CASE("reverse row insertion ejects from the first row") {
  Tableau t(check::Rows{{1, 2}, {3}});
  CHECK(reverse_row_insert(t, 0) == 2);
  CHECK(t == Tableau(check::Rows{{1}, {3}}));
  Tableau u(check::Rows{{1, 6}, {3}});
  CHECK(reverse_row_insert(u, 1) == 1);
  CHECK(u == Tableau(check::Rows{{3, 6}}));
  CHECK_THROWS(reverse_row_insert(u, 1));
}

TEST_CASE("row insertion and its reverse are inverse at every corner") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(1, 6);
  for (int k = 0; k < 200; ++k) {
    std::vector<int> w(8);
    for (int& x : w) x = letter(rng);
    Tableau t = product_tableau(w);
    for (int r = 0; r < t.num_rows(); ++r) {
      if (!t.outer().is_removable(r)) continue;
      Tableau s = t;
      int x = reverse_row_insert(s, r);
      Cell c = row_insert(s, x);
      CHECK(s == t);
      CHECK(c.row == r);
    }
  }
}

TEST_CASE("product tableaux") {
  CHECK(product_tableau({1, 1}) == Tableau(check::Rows{{1, 1}}));
  CHECK(product_tableau({1, 1, 3, 2, 2}) == Tableau(check::Rows{{1, 1, 2, 2}, {3}}));
  CHECK(product_tableau({3, 6, 5, 1, 2, 4, 7}) == Tableau(check::Rows{{1, 2, 4, 7}, {3, 5}, {6}}));
}

TEST_CASE("product tableau is constant on Knuth classes and restricts to intervals") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(1, 5);
  for (int k = 0; k < 300; ++k) {
    std::vector<int> w(7);
    for (int& x : w) x = letter(rng);
    Tableau p = product_tableau(w);
    for (const auto& v : knuth_neighbors(w)) {
      CHECK(product_tableau(v) == p);
      for (int lo = 1; lo <= 5; ++lo)
        for (int hi = lo; hi <= 5; ++hi) {
          std::vector<int> a, b;
          std::copy_if(w.begin(), w.end(), std::back_inserter(a), [&](int x) { return lo <= x && x <= hi; });
          std::copy_if(v.begin(), v.end(), std::back_inserter(b), [&](int x) { return lo <= x && x <= hi; });
          CHECK(product_tableau(a) == product_tableau(b));
        }
    }
  }
}

TEST_CASE("row and column insertion build the same tableau") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(1, 6);
  for (int k = 0; k < 300; ++k) {
    std::vector<int> w(9);
    for (int& x : w) x = letter(rng);
    CHECK(rs_row(w).first == column_insert_word(w).first);
  }
}

TEST_CASE("Robinson-Schensted swaps P and Q under inversion") {
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 1);
    do {
      std::vector<int> inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
      auto [P, Q] = rs_row(p);
      auto [P2, Q2] = rs_row(inv);
      CHECK(P2 == Q);
      CHECK(Q2 == P);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("column insertion of pairs inverts") {
  std::mt19937 rng(9);
  for (int k = 0; k < 100; ++k) {
    std::vector<int> v(6);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i) pairs.emplace_back(i + 1, v[static_cast<std::size_t>(i)]);
    auto [P, Q] = column_insert_pairs(pairs);
    CHECK(inverse_column_insert(P, Q) == pairs);
  }
}

TEST_CASE("skew insertion of the DDF biword") {
  Biword w{{{-7, 1}, {-5, 5}, {-4, 2}, {-2, 4}, {-1, 7}}};
  auto [P, Q] = skew_rs(Tableau(check::Rows{{3, 6}}), Tableau(), w);
  CHECK(P == Tableau(check::Rows{{1, 2, 4, 7}, {3, 5}, {6}}));
  CHECK(Q == Tableau(Partition{2}, {{-2, -1}, {-7, -5}, {-4}}));
  auto back = inverse_skew_rs(P, Q);
  CHECK(back.T == Tableau(check::Rows{{3, 6}}));
  CHECK(back.w == w);
  auto [P0, Q0] = skew_rs(Tableau(), Tableau(), Biword{});
  CHECK(P0.empty());
  CHECK(Q0.empty());
}

TEST_CASE("skew insertion inverts on straight inputs") {
  for (const auto& in : check::skew_inputs(4)) {
    if (!in.U.empty() || !in.T.inner().empty()) continue;
    auto [P, Q] = skew_rs(in.T, in.U, in.w);
    auto back = inverse_skew_rs(P, Q);
    Biword w = in.w;
    w.sort_by_position();
    CHECK(back.T == in.T);
    CHECK(back.w == w);
  }
}
