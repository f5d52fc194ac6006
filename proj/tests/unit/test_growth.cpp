#include <doctest.h>

#include "../common/checks.hpp"
#include "xmk/growth.hpp"

using namespace xmk;

namespace {

const TensorWord kB = parse_word("2- 1 E 1- 2 1 1", Diamond::Box);

}  // namespace

TEST_CASE("forward local rule cases") {
  Partition e, one{1}, two{2}, col{1, 1}, hook{2, 1};
  CHECK(forward_local_rule(e, e, e, false) == e);
  CHECK(forward_local_rule(e, e, e, true) == one);
  CHECK(forward_local_rule(one, one, one, true) == two);
  CHECK(forward_local_rule(one, two, col, false) == hook);
  CHECK(forward_local_rule(one, two, two, false) == hook);
  CHECK(forward_local_rule(one, col, col, false) == Partition{1, 1, 1});
  CHECK(forward_local_rule(one, two, one, false) == two);
  CHECK_THROWS_AS(forward_local_rule(two, one, one, false), DomainError);
}

TEST_CASE("reverse local rule cases") {
  CHECK(reverse_local_rule(Partition{}, Partition{}, Partition{1}) == std::pair<Partition, bool>{Partition{}, true});
  CHECK(reverse_local_rule(Partition{2, 1}, Partition{2, 1}, Partition{2, 2}) ==
        std::pair<Partition, bool>{Partition{1, 1}, false});
  CHECK(reverse_local_rule(Partition{2}, Partition{1, 1}, Partition{2, 1}) ==
        std::pair<Partition, bool>{Partition{1}, false});
}

TEST_CASE("local rules are mutually inverse") {
  auto r = check::local_rules_inverse(6);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("growth array of the running example") {
  GrowthDdf g = growth_ddf(word_to_shape_sequence(kB, Diamond::Box));
  CHECK(g.array.specials == std::set<std::pair<int, int>>{{1, 1}, {2, 4}, {4, 6}, {5, 3}, {7, 7}});
  CHECK(g.T == Tableau(check::Rows{{3, 6}}));
  CHECK(g.I.to_string() == "(2,4)(5)(1,7)");
  CHECK(g.P == Tableau(check::Rows{{1, 2, 4, 7}, {3, 5}, {6}}));
  CHECK(g.array.G[7][7] == Partition{4, 2, 1});
  std::string grid = render_growth(g.array);
  CHECK(grid.find("\xE2\x8A\x97") != std::string::npos);
  CHECK(g.array.transposed().transposed() == g.array);
}

TEST_CASE("growth of a standard word has no specials above the diagonal") {
  TensorWord c = parse_word("1 3 2 1 2 1 1", Diamond::Empty);
  GrowthDdf g = growth_ddf(word_to_shape_sequence(c, Diamond::Empty));
  CHECK(g.I.cycles.empty());
  CHECK(g.I.fixed.empty());
  CHECK(g.T.outer() == Partition{4, 2, 1});
}

TEST_CASE("growth agrees with the insertion algorithm") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino}) {
    auto r = check::growth_matches_ddf(d, 5);
    INFO(to_string(d), " ", r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("skew insertion is symmetric under transposition") {
  auto r = check::skew_rs_transposition(5);
  INFO(r.summary());
  CHECK(r.ok());
}

TEST_CASE("skew growth on straight borders is ordinary RS") {
  Biword w{{{1, 3}, {2, 1}, {3, 2}}};
  GrowthSkewRs g = growth_skew_rs(Tableau(), Tableau(), w);
  auto [P, Q] = skew_rs(Tableau(), Tableau(), w);
  CHECK(g.P.outer() == P.outer());
  CHECK(g.Q.outer() == Q.outer());
}
