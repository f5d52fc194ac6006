#include "xmk/insertion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace xmk {

Cell row_insert(Tableau& t, int x, int start_row) {
  for (int r = start_row;; ++r) {
    int len = t.row_length(r);
    int c = std::max(t.inner()[r], 0);
    while (c < len && t.at(r, c) <= x) ++c;
    if (c == len) {
      t.push_back(r, x);
      return {r, len};
    }
    std::swap(x, t.at(r, c));
  }
}

int reverse_row_insert(Tableau& t, int row) {
  Partition sh = t.outer();
  if (!sh.is_removable(row) || t.row_length(row) <= t.inner()[row])
    throw DomainError("row " + std::to_string(row + 1) + " has no removable corner");
  int y = t.pop_back(row);
  for (int r = row - 1; r >= 0; --r) {
    int c = t.row_length(r) - 1;
    while (c >= t.inner()[r] && t.at(r, c) >= y) --c;
    if (c < t.inner()[r]) throw DomainError("reverse row insertion ran into the inner shape");
    std::swap(y, t.at(r, c));
  }
  return y;
}

namespace {

int column_height(const Tableau& t, int col) {
  int h = 0;
  while (h < t.num_rows() && t.row_length(h) > col) ++h;
  return h;
}

}  // namespace

Cell column_insert(Tableau& t, int x) {
  for (int c = 0;; ++c) {
    int h = column_height(t, c);
    int r = 0;
    while (r < h && t.at(r, c) < x) ++r;
    if (r == h) {
      t.push_back(h, x);
      return {h, c};
    }
    std::swap(x, t.at(r, c));
  }
}

int reverse_column_insert(Tableau& t, int col) {
  int h = column_height(t, col);
  if (h == 0 || t.row_length(h - 1) != col + 1)
    throw DomainError("column " + std::to_string(col + 1) + " has no removable corner");
  int y = t.pop_back(h - 1);
  for (int c = col - 1; c >= 0; --c) {
    int hc = column_height(t, c);
    int r = hc - 1;
    while (r >= 0 && t.at(r, c) > y) --r;
    if (r < 0) throw DomainError("reverse column insertion failed");
    std::swap(y, t.at(r, c));
  }
  return y;
}

Tableau product_tableau(const std::vector<int>& w) {
  Tableau t;
  for (int x : w) row_insert(t, x);
  return t;
}

std::pair<Tableau, Tableau> rs_row(const std::vector<int>& w) {
  Tableau P, Q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Cell s = row_insert(P, w[i]);
    Q.push_back(s.row, static_cast<int>(i) + 1);
  }
  return {P, Q};
}

std::pair<Tableau, Tableau> column_insert_pairs(const std::vector<std::pair<int, int>>& pairs) {
  Tableau P, Q;
  for (auto [rec, x] : pairs) {
    Cell s = column_insert(P, x);
    Q.push_back(s.row, rec);
  }
  return {P, Q};
}

std::pair<Tableau, Tableau> column_insert_word(const std::vector<int>& u) {
  std::vector<std::pair<int, int>> pairs;
  int L = static_cast<int>(u.size());
  for (int i = 1; i <= L; ++i) pairs.emplace_back(i, u[static_cast<std::size_t>(L - i)]);
  return column_insert_pairs(pairs);
}

std::vector<std::pair<int, int>> inverse_column_insert(const Tableau& P0, const Tableau& Q0) {
  Tableau P = P0, Q = Q0;
  std::vector<std::pair<int, int>> out;
  while (!Q.empty()) {
    std::vector<int> ls = Q.letters();
    int rec = ls.back();
    Cell s = *Q.find(rec);
    Q.pop_back(s.row);
    int x = reverse_column_insert(P, s.col);
    out.emplace_back(rec, x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Cell internal_insert(Tableau& t, int row) {
  Partition in = t.inner();
  if (!in.is_addable(row)) throw DomainError("no addable inner corner in row " + std::to_string(row + 1));
  int c = in[row];
  t.set_inner(in.add_cell(row));
  if (c < t.row_length(row)) {
    int y = t.at(row, c);
    t.at(row, c) = Tableau::kInner;
    return row_insert(t, y, row + 1);
  }
  t.push_back(row, Tableau::kInner);
  return {row, c};
}

SkewReverseStep reverse_skew_insert(Tableau& t, int row) {
  Partition sh = t.outer();
  if (!sh.is_removable(row)) throw DomainError("row " + std::to_string(row + 1) + " has no removable corner");
  int c = t.row_length(row) - 1;
  SkewReverseStep step;
  if (c < t.inner()[row]) {
    t.pop_back(row);
    t.set_inner(t.inner().remove_cell(row));
    step.external = false;
    step.inner_cell = {row, c};
    return step;
  }
  int y = t.pop_back(row);
  for (int r = row - 1; r >= 0; --r) {
    int k = t.row_length(r) - 1;
    while (k >= t.inner()[r] && t.at(r, k) >= y) --k;
    if (k < t.inner()[r]) {
      int ic = t.inner()[r] - 1;
      if (ic < 0) throw DomainError("reverse skew insertion has nowhere to land");
      t.at(r, ic) = y;
      t.set_inner(t.inner().remove_cell(r));
      step.external = false;
      step.inner_cell = {r, ic};
      return step;
    }
    std::swap(y, t.at(r, k));
  }
  step.letter = y;
  return step;
}

std::pair<Tableau, Tableau> skew_rs(const Tableau& T, const Tableau& U, const Biword& w) {
  if (T.inner() != U.inner()) throw DomainError("skew RS needs a common inner shape");
  std::map<int, int> wmap;
  for (auto [p, v] : w.pairs) {
    if (!wmap.emplace(p, v).second) throw DomainError("repeated position in biword");
    if (T.contains_letter(v)) throw DomainError("biword value " + std::to_string(v) + " occurs in T");
    if (U.contains_letter(p)) throw DomainError("biword position " + std::to_string(p) + " occurs in U");
  }
  std::map<int, Cell> ucells;
  for (int r = 0; r < U.num_rows(); ++r)
    for (int c = U.inner()[r]; c < U.row_length(r); ++c) ucells[U.at(r, c)] = {r, c};
  std::vector<int> order;
  for (auto& [b, cell] : ucells) order.push_back(b);
  for (auto& [b, v] : wmap) order.push_back(b);
  std::sort(order.begin(), order.end());

  Tableau P = T;
  Partition beta = T.outer();
  Tableau Q(beta, {});
  for (int b : order) {
    Cell s;
    if (auto it = ucells.find(b); it != ucells.end())
      s = internal_insert(P, it->second.row);
    else
      s = row_insert(P, wmap[b]);
    if (s.col != Q.row_length(s.row)) throw std::logic_error("recording cell out of order");
    Q.push_back(s.row, b);
  }
  return {P, Q};
}

SkewRsInput inverse_skew_rs(const Tableau& P0, const Tableau& Q0) {
  Tableau P = P0, Q = Q0;
  Partition gamma = P0.inner();
  std::map<Cell, int> ucells;
  Biword w;
  while (!Q.empty()) {
    std::vector<int> ls = Q.letters();
    int b = ls.back();
    Cell s = *Q.find(b);
    Q.pop_back(s.row);
    SkewReverseStep step = reverse_skew_insert(P, s.row);
    if (step.external)
      w.pairs.emplace_back(b, step.letter);
    else
      ucells[step.inner_cell] = b;
  }
  w.sort_by_position();
  Partition alpha = P.inner();
  std::vector<std::vector<int>> urows(static_cast<std::size_t>(gamma.length()));
  for (int r = 0; r < gamma.length(); ++r)
    for (int c = alpha[r]; c < gamma[r]; ++c) urows[static_cast<std::size_t>(r)].push_back(ucells.at({r, c}));
  return {P, Tableau(alpha, urows), w};
}

std::vector<std::vector<int>> knuth_neighbors(const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    int a = w[k], b = w[k + 1], c = w[k + 2];
    // x z y <-> z x y with x <= y < z
    if (a <= c && c < b) {
      auto v = w;
      std::swap(v[k], v[k + 1]);
      out.push_back(v);
    }
    if (b <= c && c < a) {
      auto v = w;
      std::swap(v[k], v[k + 1]);
      out.push_back(v);
    }
    // y x z <-> y z x with x < y <= z
    if (b < a && a <= c) {
      auto v = w;
      std::swap(v[k + 1], v[k + 2]);
      out.push_back(v);
    }
    if (c < a && a <= b) {
      auto v = w;
      std::swap(v[k + 1], v[k + 2]);
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace xmk
