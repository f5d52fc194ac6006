#include <doctest.h>

#include "../common/checks.hpp"
#include "xmk/crystal.hpp"
#include "xmk/energy.hpp"
#include "xmk/highest_weight.hpp"
#include "xmk/virtual_vxr.hpp"

using namespace xmk;

namespace {

const TensorWord kB = parse_word("2- 1 E 1- 2 1 1", Diamond::Box);

std::vector<std::string> factor_texts(const TensorWord& w) {
  std::vector<std::string> out;
  for (const auto& r : w.factors) out.push_back(to_string(r));
  return out;
}

}  // namespace

TEST_CASE("virtual image of the running example") {
  CHECK(factor_texts(psi(kB, Diamond::Box, 3)) ==
        std::vector<std::string>{"2v", "5", "6v", "1", "1v", "1", "1v", "6", "5v", "2", "6v", "1", "6v", "1"});
  CHECK(factor_texts(psi_prime(kB, Diamond::Box, 3)) ==
        std::vector<std::string>{"5", "2v", "1", "6v", "6", "6v", "6", "1v", "2", "5v", "1", "6v", "1", "6v"});
  CHECK(to_string(psi(parse_word("E", Diamond::Box), Diamond::Box, 3)) == "1v 1");
}

TEST_CASE("virtual image of a leading row") {
  const int n = 3, N = 6;
  Row x = diamond_row(2, {plain(1)});
  TensorWord v = psi_row(x, Diamond::Box, n);
  CHECK(v.factors[0] == dual_row({N, 1}));
  CHECK(v.factors[1] == plain_row({1, 1}));
}

TEST_CASE("primed image is the dual star of the image") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino})
    for (auto nu : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {1, 2}, {2, 2}})
      for (const auto& lam : partitions_up_to(4))
        for (const auto& b : enumerate_highest_weight(nu, d, lam, auto_rank(nu))) {
          int n = auto_rank(nu);
          CHECK(psi_prime(b, d, n) == star(dual(psi(b, d, n)), 2 * n));
          CHECK(psi_inverse(psi(b, d, n), d, n) == b);
        }
}

TEST_CASE("R+ table of the running example") {
  RPlusResult r = r_plus(psi(kB, Diamond::Box, 3), 6);
  std::vector<std::string> rows;
  for (const auto& w : r.rows) rows.push_back(to_string(w));
  CHECK(rows == std::vector<std::string>{
                    "2v 5 6v 1 1v 1 1v 6 5v 2 6v 1 6v 1",
                    "2v 6v 5 2v 2 2v 2 5v 6 6v 2 6v 1 1",
                    "2v 6v 2v 5 3v 3 5v 2 1v 1 6v 2 1 1",
                    "2v 6v 2v 3v 5 5v 3 1v 2 6v 1 2 1 1",
                    "2v 6v 2v 3v 6v 6 1v 3 6v 2 1 2 1 1",
                    "2v 6v 2v 3v 6v 1v 6 6v 3 2 1 2 1 1",
                    "2v 6v 2v 3v 6v 1v 1v 1 3 2 1 2 1 1",
                });
  CHECK(to_string(r.dcheck) == "2v 6v 2v 3v 6v 1v 1v");
  CHECK(to_string(r.c) == "1 3 2 1 2 1 1");
  RPlusResult s = r_plus(psi(kB, Diamond::Box, 3), 6, RPlusSchedule::Sequential);
  CHECK(s.dcheck == r.dcheck);
  CHECK(s.c == r.c);
}

TEST_CASE("R+ on small inputs") {
  RPlusResult r = r_plus(parse_word("1v 6 6v 1", Diamond::Empty), 6);
  CHECK(to_string(r.dcheck) == "1v 1v");
  CHECK(to_string(r.c) == "1 1");
  TensorWord sorted = parse_word("2v 3v 1 1", Diamond::Empty);
  RPlusResult s = r_plus(sorted, 6);
  CHECK(concat(s.dcheck, s.c) == sorted);
}

TEST_CASE("R+ schedules agree and produce highest weight output") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino})
    for (const auto& b : check::all_highest_weight(d, 5, 6)) {
      TensorWord v = psi(b, d, 6);
      RPlusResult p = r_plus(v, 12), q = r_plus(v, 12, RPlusSchedule::Sequential);
      CHECK(p.dcheck == q.dcheck);
      CHECK(p.c == q.c);
      CHECK(is_highest_weight(concat(p.dcheck, p.c), type_a(12)));
      CHECK(is_highest_weight(p.c, type_a(12)));
    }
}

TEST_CASE("vxr on the running example") {
  VxrOutput v = vxr(kB, Diamond::Box, 3);
  CHECK(to_string(v.c) == "1 3 2 1 2 1 1");
  CHECK(to_string(v.dcheck) == "2v 6v 2v 3v 6v 1v 1v");
  std::vector<std::pair<int, int>> plus, minus;
  for (const auto& s : v.dplus) plus.emplace_back(s.position, s.value);
  for (const auto& s : v.dminus) minus.emplace_back(s.position, s.value);
  CHECK(plus == std::vector<std::pair<int, int>>{{7, 2}, {5, 2}, {4, 3}, {2, 1}, {1, 1}});
  CHECK(minus == std::vector<std::pair<int, int>>{{6, 6}, {3, 6}});
  CHECK(v.Z == Tableau(check::Rows{{1, 1, 2, 2}, {3}}));
  CHECK(v.mu == Partition{4, 1});
  CHECK(v.tau == Partition{4, 2, 1});
  CHECK(v.grading_lhs == 25);
  CHECK(v.grading_rhs == 25);
}

TEST_CASE("vxr of a two letter domino word") {
  VxrOutput v = vxr(parse_word("1- 1", Diamond::HDomino), Diamond::HDomino, 3);
  CHECK(to_string(v.c) == "1 1");
  CHECK(v.tau == Partition{2});
  CHECK(v.Z == Tableau(check::Rows{{1, 1}}));
  CHECK(v.mu == Partition{2});
}

TEST_CASE("vxr rejects words that are not highest weight") {
  CHECK_THROWS(vxr(parse_word("2", Diamond::Box), Diamond::Box, 3));
}

TEST_CASE("virtual and native coenergies agree") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino}) {
    auto r = check::virtual_coenergy_agrees(d, 6);
    INFO(to_string(d), " ", r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("block coenergy between the dual block and c") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino}) {
    auto r = check::block_coenergy_identity(d, 6);
    INFO(to_string(d), " ", r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("letters removed from the weight are barred or empty") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino}) {
    auto r = check::barred_letter_identity(d, 6);
    INFO(to_string(d), " ", r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("vxr is a bijection onto Littlewood-Richardson data") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino}) {
    auto r = check::vxr_bijection(d, 5, true);
    INFO(to_string(d), " ", r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("right splitting") {
  std::vector<int> w3{3};
  CHECK(right_split(parse_word("1 1 3", Diamond::Empty, &w3), Diamond::Empty) == parse_word("1 1 | 3", Diamond::Empty));
  std::vector<int> w2{2};
  TensorWord z = parse_word("E", Diamond::Box, &w2);
  CHECK(to_string(right_split(z, Diamond::Box)) == "1- 1");
  std::vector<int> w1{1};
  CHECK_THROWS(right_split(parse_word("1", Diamond::Box, &w1), Diamond::Box));
}

TEST_CASE("theta commutes with vxr and keeps the coenergy") {
  for (Diamond d : {Diamond::Box, Diamond::HDomino})
    for (auto nu : std::vector<std::vector<int>>{{2, 1}, {1, 2}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 1, 1, 1}, {1, 1, 1, 2}}) {
      int n = auto_rank(nu);
      for (const auto& lam : partitions_up_to(5))
        for (const auto& b : enumerate_highest_weight(nu, d, lam, n)) {
          VxrOutput v = vxr(b, d, n);
          HalfInteger e = diamond_coenergy(b, d, n);
          if (b.at(1).width >= 2) {
            TensorWord s = theta_split(b, d);
            VxrOutput vs = vxr(s, d, n);
            CHECK(vs.c == right_split(v.c, Diamond::Empty));
            CHECK(vs.Z == v.Z);
            CHECK(diamond_coenergy(s, d, n) == e);
          }
          for (int i = 1; i < b.size(); ++i) {
            TensorWord s = theta_swap(b, i, d, n);
            VxrOutput vs = vxr(s, d, n);
            CHECK(vs.c == apply_r(v.c, i, 2 * n));
            CHECK(vs.Z == v.Z);
            CHECK(diamond_coenergy(s, d, n) == e);
          }
        }
    }
}

TEST_CASE("diamond R-matrix is an involution on equal widths") {
  for (const auto& b : check::all_highest_weight(Diamond::Box, 4, 5)) CHECK(diamond_r(b, 1, Diamond::Box, 5) == b);
}
