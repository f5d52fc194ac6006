#include <doctest.h>

#include "../common/checks.hpp"
#include "xmk/highest_weight.hpp"
#include "xmk/word.hpp"

using namespace xmk;

TEST_CASE("letter grammar round trips") {
  for (const char* t : {"3", "3-", "0", "E", "3v"}) CHECK(to_string(parse_letter(t)) == t);
  CHECK(parse_letter("2-") == barred(2));
  CHECK(parse_letter("4v") == dual(4));
}

TEST_CASE("parse errors carry the offending position") {
  try {
    parse_word("1 2 q", Diamond::Box);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_word("1 2v", Diamond::Box), ParseError);
  CHECK_THROWS_AS(parse_word("E", Diamond::Empty), ParseError);
  CHECK_THROWS_AS(parse_diamond("vdomino"), DomainError);
  CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
}

TEST_CASE("factor grouping and widths") {
  std::vector<int> widths{1, 2};
  TensorWord w = parse_word("1 2 | 3v", Diamond::Empty, &widths);
  REQUIRE(w.size() == 2);
  CHECK(w.at(1) == dual_row({3}));
  CHECK(w.at(2) == plain_row({1, 2}));
  CHECK(w.widths() == widths);
  CHECK(parse_word(to_string(w), Diamond::Empty, &widths) == w);
}

TEST_CASE("diamond weights") {
  CHECK(weight_diamond(parse_word("2- 1 E 1- 2 1 1", Diamond::Box), 3) == std::vector<int>{2, 0, 0});
  CHECK(weight_diamond(TensorWord{}, 3) == std::vector<int>{0, 0, 0});
  CHECK(weight_diamond(parse_word("1- 1", Diamond::HDomino), 2) == std::vector<int>{0, 0});
}

TEST_CASE("highest weight test on words of single letters") {
  CHECK(is_diamond_highest_weight(parse_word("2- 1 E 1- 2 1 1", Diamond::Box), Diamond::Box, 7));
  CHECK(is_yamanouchi({1, 3, 2, 1, 2, 1, 1}));
  CHECK_FALSE(is_diamond_highest_weight(parse_word("2", Diamond::Box), Diamond::Box, 3));
  CHECK_FALSE(is_diamond_highest_weight(parse_word("0", Diamond::Box), Diamond::Box, 3));
  CHECK_THROWS_AS(is_diamond_highest_weight(parse_word("1 1 1", Diamond::Box), Diamond::Box, 2), DomainError);
}

TEST_CASE("tileability") {
  CHECK(diamond_tileable(Partition{4, 2}, Diamond::HDomino));
  CHECK_FALSE(diamond_tileable(Partition{4, 1}, Diamond::HDomino));
  CHECK(diamond_tileable(Partition{4, 1}, Diamond::Box));
  CHECK(diamond_tileable(Partition{}, Diamond::Empty));
  CHECK_FALSE(diamond_tileable(Partition{1}, Diamond::Empty));
  for (const auto& p : partitions_up_to(8)) {
    // columns of equal height come in pairs exactly when every row is even
    Partition c = p.conjugate();
    bool paired = true;
    for (int j = 0; j < c.length(); j += 2) paired = paired && c[j] == c[j + 1];
    CHECK(diamond_tileable(p, Diamond::HDomino) == paired);
  }
}

TEST_CASE("enumeration of small highest weight sets") {
  auto hd = enumerate_highest_weight({1, 1}, Diamond::HDomino, Partition{}, 3);
  REQUIRE(hd.size() == 1);
  CHECK(to_string(hd[0]) == "1- 1");
  auto bx = enumerate_highest_weight({1, 1}, Diamond::Box, Partition{}, 3);
  std::set<std::string> got;
  for (const auto& b : bx) got.insert(to_string(b));
  CHECK(got == std::set<std::string>{"1- 1", "E E"});
  bool found = false;
  for (const auto& b : enumerate_highest_weight(std::vector<int>(7, 1), Diamond::Box, Partition{2}, 8))
    found = found || to_string(b) == "2- 1 E 1- 2 1 1";
  CHECK(found);
  CHECK_THROWS_AS(enumerate_highest_weight({1, 1, 1}, Diamond::Box, Partition{1}, 2), DomainError);
}

TEST_CASE("right factors of highest weight words are highest weight") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino})
    for (const auto& b : check::all_highest_weight(d, 5, 6))
      for (int k = 1; k < b.size(); ++k) {
        TensorWord right{{b.factors.begin() + k, b.factors.end()}};
        CHECK(is_diamond_highest_weight(right, d, 6));
      }
}

TEST_CASE("enumeration counts do not depend on the rank") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino})
    for (int L = 1; L <= 5; ++L)
      for (const auto& lam : partitions_up_to(L)) {
        std::vector<int> nu(static_cast<std::size_t>(L), 1);
        CHECK(enumerate_highest_weight(nu, d, lam, L + 1).size() == enumerate_highest_weight(nu, d, lam, L + 2).size());
      }
}

TEST_CASE("dual and star are involutions") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    TensorWord w = check::random_type_a_word(rng, 3, 3, 6);
    CHECK(dual(dual(w)) == w);
    CHECK(star(star(w, 6), 6) == w);
  }
  CHECK(to_string(star(parse_word("1", Diamond::Empty), 6)) == "6");
  CHECK(to_string(dual(parse_word("1", Diamond::Empty))) == "1v");
}
