#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "xmk/tableau.hpp"

namespace xmk {

/// Row insertion starting at `start_row`. Inner cells behave as -infinity.
Cell row_insert(Tableau& t, int x, int start_row = 0);

/// Removes the last cell of row `row` and reverse-bumps to the first row.
/// Returns the ejected letter. Throws if the cell is not a removable corner.
int reverse_row_insert(Tableau& t, int row);

/// Column insertion into a straight tableau.
Cell column_insert(Tableau& t, int x);

/// Removes the bottom cell of column `col` and reverse-bumps leftwards.
int reverse_column_insert(Tableau& t, int col);

/// The unique straight tableau Knuth equivalent to w.
Tableau product_tableau(const std::vector<int>& w);

/// Row insertion of w_1 w_2 ... left to right; Q records 1..L.
std::pair<Tableau, Tableau> rs_row(const std::vector<int>& w);

/// Column insertion of u = u_L ... u_1 (vector in textual order), letters
/// taken from the right end; Q records i for u_i.
std::pair<Tableau, Tableau> column_insert_word(const std::vector<int>& u);

/// Column insertion of (record, value) pairs in the given order.
std::pair<Tableau, Tableau> column_insert_pairs(const std::vector<std::pair<int, int>>& pairs);

/// Inverse of column_insert_pairs: pairs sorted by increasing record.
std::vector<std::pair<int, int>> inverse_column_insert(const Tableau& P, const Tableau& Q);

/// Internal insertion at the addable inner corner in row `row`. Returns the
/// new outer cell.
Cell internal_insert(Tableau& t, int row);

struct SkewReverseStep {
  bool external = true;
  int letter = 0;      // ejected letter when external
  Cell inner_cell{};   // cell returned to the inner shape when internal
};

/// Reverse skew insertion at the removable outer corner in row `row`.
SkewReverseStep reverse_skew_insert(Tableau& t, int row);

/// Sagan-Stanley skew Robinson-Schensted. T and U share their inner shape.
/// Positions (letters of U and w's positions) are processed increasingly.
std::pair<Tableau, Tableau> skew_rs(const Tableau& T, const Tableau& U, const Biword& w);

struct SkewRsInput {
  Tableau T;
  Tableau U;
  Biword w;
};

/// Inverse of skew_rs. The inner shape of Q is the outer shape of T.
SkewRsInput inverse_skew_rs(const Tableau& P, const Tableau& Q);

/// Words reachable from w by one elementary Knuth relation.
std::vector<std::vector<int>> knuth_neighbors(const std::vector<int>& w);

}  // namespace xmk
