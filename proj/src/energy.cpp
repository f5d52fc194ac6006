#include "xmk/energy.hpp"

#include <algorithm>
#include <stdexcept>

#include "xmk/crystal.hpp"
#include "xmk/insertion.hpp"

namespace xmk {

std::vector<int> reading_word(const Row& r, int N) {
  if (r.kind == RowKind::Plain) return letter_values(r);
  if (r.kind != RowKind::Dual) throw DomainError("reading word needs a type A row");
  std::vector<int> word;
  for (int row = N - 2; row >= 0; --row)
    for (const auto& x : r.letters) word.push_back(row + 1 < x.value ? row + 1 : row + 2);
  return word;
}

int e_statistic(const Row& left, const Row& right, int N) {
  std::vector<int> w = reading_word(left, N);
  std::vector<int> r = reading_word(right, N);
  w.insert(w.end(), r.begin(), r.end());
  Tableau t = product_tableau(w);
  int k = std::max(left.width, right.width);
  int cells = 0;
  for (int row = 0; row < t.num_rows(); ++row) cells += std::max(0, t.row_length(row) - k);
  return cells;
}

HalfInteger local_coenergy(const Row& left, const Row& right, int N) {
  Row ul = leading_row(module_of(left), N);
  Row ur = leading_row(module_of(right), N);
  return e_statistic(ul, ur, N) - e_statistic(left, right, N);
}

HalfInteger local_coenergy_diamond(const Letter& x, const Letter& y, Diamond d) {
  if (d == Diamond::HDomino) return letter_less(y, x) ? 1 : 0;
  if (d != Diamond::Box) throw DomainError("no diamond coenergy table for type A");
  bool ex = x.kind == LetterKind::Empty, ey = y.kind == LetterKind::Empty;
  if (ex && ey) return 1;
  if (ex != ey) return HalfInteger::from_twice(1);
  if (x.kind == LetterKind::Zero && y.kind == LetterKind::Zero) return 1;
  return letter_less(y, x) ? 1 : 0;
}

HalfInteger single_coenergy_diamond(const Letter& x, Diamond d) {
  return d == Diamond::Box && x.kind == LetterKind::Empty ? HalfInteger::from_twice(1) : HalfInteger(0);
}

std::pair<Row, Row> r_box_table(const Row& left, const Row& right, int N) {
  if (left.width != 1 || right.width != 1) throw DomainError("box table needs width-one factors");
  if (left.kind == right.kind) return {left, right};
  if (left.kind == RowKind::Plain && right.kind == RowKind::Dual) {
    int i = left.letters[0].value, j = right.letters[0].value;
    if (i != j) return {dual_row({j}), plain_row({i})};
    if (i < N) return {dual_row({i + 1}), plain_row({i + 1})};
    return {dual_row({1}), plain_row({1})};
  }
  if (left.kind == RowKind::Dual && right.kind == RowKind::Plain) {
    int j = left.letters[0].value, i = right.letters[0].value;
    if (i != j) return {plain_row({i}), dual_row({j})};
    if (i > 1) return {plain_row({i - 1}), dual_row({i - 1})};
    return {plain_row({N}), dual_row({N})};
  }
  throw DomainError("box table needs type A factors");
}

std::pair<Row, Row> r_strip_recursion(const Row& left, const Row& right, int N) {
  if (left.kind != RowKind::Plain || right.kind != RowKind::Dual)
    throw DomainError("strip recursion needs a plain row left of a dual row");
  std::vector<int> b2 = letter_values(left), b1 = letter_values(right);
  int m2 = static_cast<int>(std::count(b2.begin(), b2.end(), N));
  int m1 = static_cast<int>(std::count(b1.begin(), b1.end(), N));
  int m = std::min(m2, m1);
  b2.resize(b2.size() - static_cast<std::size_t>(m));
  b1.erase(b1.begin(), b1.begin() + m);
  // boxes in textual order: plain letters then dual letters
  std::vector<Row> boxes;
  for (int x : b2) boxes.push_back(plain_row({x}));
  for (int y : b1) boxes.push_back(dual_row({y}));
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < boxes.size(); ++k) {
      if (boxes[k].kind == RowKind::Plain && boxes[k + 1].kind == RowKind::Dual) {
        auto [a, b] = r_box_table(boxes[k], boxes[k + 1], N);
        boxes[k] = a;
        boxes[k + 1] = b;
        moved = true;
      }
    }
  }
  std::vector<int> duals, plains;
  for (const auto& b : boxes) (b.kind == RowKind::Dual ? duals : plains).push_back(b.letters[0].value);
  for (int k = 0; k < m; ++k) duals.push_back(1);
  plains.insert(plains.begin(), static_cast<std::size_t>(m), 1);
  Row nl = dual_row(duals), nr = plain_row(plains);
  for (const Row* r : {&nl, &nr})
    for (std::size_t k = 1; k < r->letters.size(); ++k)
      if (letter_less(r->letters[k], r->letters[k - 1]))
        throw std::logic_error("strip recursion produced a non-increasing row");
  return {nl, nr};
}

std::pair<Row, Row> r_matrix(const Row& left, const Row& right, int N, RStrategy strategy) {
  if (left.kind == RowKind::Diamond || right.kind == RowKind::Diamond)
    throw DomainError("R-matrix on diamond rows is computed through the virtual crystal");
  if (module_of(left) == module_of(right)) return {left, right};
  switch (strategy) {
    case RStrategy::Table: return r_box_table(left, right, N);
    case RStrategy::Recursion: return r_strip_recursion(left, right, N);
    case RStrategy::Transport: break;
    case RStrategy::Auto:
      if (left.width == 1 && right.width == 1) return r_box_table(left, right, N);
      if (left.kind == RowKind::Plain && right.kind == RowKind::Dual) return r_strip_recursion(left, right, N);
      if (left.kind == RowKind::Dual && right.kind == RowKind::Plain) {
        // R commutes with the involution *
        TensorWord flipped = star(TensorWord{{left, right}}, N);
        auto [a, b] = r_strip_recursion(flipped.factors[0], flipped.factors[1], N);
        TensorWord back = star(TensorWord{{a, b}}, N);
        return {back.factors[0], back.factors[1]};
      }
      break;
  }
  TensorWord w{{left, right}};
  TensorWord out = transport(w, {module_of(right), module_of(left)}, N);
  return {out.factors[0], out.factors[1]};
}

TensorWord apply_r(const TensorWord& w, int i, int N) {
  if (i < 1 || i >= w.size()) throw DomainError("R index out of range");
  TensorWord out = w;
  auto [a, b] = r_matrix(w.at(i + 1), w.at(i), N);
  out.at(i + 1) = a;
  out.at(i) = b;
  return out;
}

HalfInteger local_coenergy_at(const TensorWord& w, int i, int N) {
  return local_coenergy(w.at(i + 1), w.at(i), N);
}

HalfInteger intrinsic_coenergy(const TensorWord& w, int N) {
  HalfInteger total = 0;
  for (int j = 2; j <= w.size(); ++j) {
    TensorWord cur = w;
    for (int i = j - 1; i >= 1; --i) {
      total += local_coenergy_at(cur, i, N);
      if (i > 1) cur = apply_r(cur, i, N);
    }
  }
  return total;
}

HalfInteger intrinsic_coenergy_diamond(const TensorWord& w, Diamond d) {
  const int L = w.size();
  HalfInteger total = 0;
  for (int p = 1; p <= L; ++p)
    if (w.at(p).width != 1 || w.at(p).kind != RowKind::Diamond)
      throw DomainError("native diamond coenergy needs width-one diamond factors");
  for (int i = 1; i < L; ++i)
    total += (L - i) * local_coenergy_diamond(w.at(i + 1).letters[0], w.at(i).letters[0], d);
  if (L > 0) total += L * single_coenergy_diamond(w.at(1).letters[0], d);
  return total;
}

bool yang_baxter_check(const TensorWord& w, int N) {
  if (w.size() != 3) throw DomainError("Yang-Baxter check needs three factors");
  auto R1 = [&](const TensorWord& x) { return apply_r(x, 1, N); };
  auto R2 = [&](const TensorWord& x) { return apply_r(x, 2, N); };
  auto H1 = [&](const TensorWord& x) { return local_coenergy_at(x, 1, N); };
  auto H2 = [&](const TensorWord& x) { return local_coenergy_at(x, 2, N); };
  if (R1(R2(R1(w))) != R2(R1(R2(w)))) return false;
  if (H1(w) + H2(R1(w)) != H1(R2(w)) + H2(R1(R2(w)))) return false;
  if (H2(w) + H1(R2(w)) != H2(R1(w)) + H1(R2(R1(w)))) return false;
  return true;
}

}  // namespace xmk
