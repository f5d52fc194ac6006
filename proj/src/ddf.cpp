#include "xmk/ddf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "xmk/crystal.hpp"
#include "xmk/insertion.hpp"
#include "xmk/virtual_vxr.hpp"

namespace xmk {

namespace {

void require_boxes(const TensorWord& b) {
  for (const auto& r : b.factors)
    if (r.width != 1 || r.letters.size() != 1) throw DomainError("expected a word of width-one factors");
}

int column_height(const Tableau& t, int col) {
  int h = 0;
  while (h < t.num_rows() && t.row_length(h) > col) ++h;
  return h;
}

}  // namespace

ShapeSequence sequence_from_steps(const std::vector<ShapeStep>& steps) {
  ShapeSequence seq;
  seq.shapes.push_back(Partition());
  seq.steps = steps;
  for (const auto& st : steps) {
    const Partition& p = seq.shapes.back();
    int r = st.row - 1;
    switch (st.kind) {
      case StepKind::Add:
        if (!p.is_addable(r)) throw DomainError("cannot add a cell in row " + std::to_string(st.row));
        seq.shapes.push_back(p.add_cell(r));
        break;
      case StepKind::Remove:
        if (!p.is_removable(r)) throw DomainError("cannot remove a cell from row " + std::to_string(st.row));
        seq.shapes.push_back(p.remove_cell(r));
        break;
      case StepKind::Stay: seq.shapes.push_back(p); break;
    }
  }
  return seq;
}

ShapeSequence word_to_shape_sequence(const TensorWord& b, Diamond d) {
  require_boxes(b);
  std::vector<ShapeStep> steps;
  for (int i = 1; i <= b.size(); ++i) {
    const Letter& x = b.at(i).letters.front();
    switch (x.kind) {
      case LetterKind::Plain: steps.push_back({StepKind::Add, x.value}); break;
      case LetterKind::Barred:
        if (d == Diamond::Empty) throw DomainError("barred letter in a type A word");
        steps.push_back({StepKind::Remove, x.value});
        break;
      case LetterKind::Empty:
        if (d != Diamond::Box) throw DomainError("empty letter outside the box family");
        steps.push_back({StepKind::Stay, 0});
        break;
      default: throw DomainError("letter " + to_string(x) + " has no shape step");
    }
  }
  return sequence_from_steps(steps);
}

TensorWord shape_sequence_to_word(const ShapeSequence& seq, Diamond d) {
  std::vector<Letter> textual;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    switch (it->kind) {
      case StepKind::Add: textual.push_back(plain(it->row)); break;
      case StepKind::Remove: textual.push_back(barred(it->row)); break;
      case StepKind::Stay: textual.push_back(empty_letter()); break;
    }
  }
  return word_of_letters(textual, d == Diamond::Empty ? RowKind::Plain : RowKind::Diamond);
}

void Involution::normalize() {
  std::sort(cycles.begin(), cycles.end());
  std::sort(fixed.begin(), fixed.end());
}

std::vector<int> Involution::domain() const {
  std::vector<int> out = fixed;
  for (auto [a, i] : cycles) {
    out.push_back(a);
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Involution::image(int a) const {
  for (auto [x, y] : cycles) {
    if (x == a) return y;
    if (y == a) return x;
  }
  if (std::find(fixed.begin(), fixed.end(), a) != fixed.end()) return a;
  throw DomainError(std::to_string(a) + " is outside the involution's domain");
}

bool Involution::contains(int a) const {
  auto dom = domain();
  return std::binary_search(dom.begin(), dom.end(), a);
}

std::vector<std::pair<int, int>> Involution::graph() const {
  std::vector<std::pair<int, int>> g;
  for (int a : domain()) g.emplace_back(a, image(a));
  return g;
}

std::string Involution::to_string() const {
  std::vector<std::pair<int, int>> parts;
  for (auto [a, i] : cycles) parts.emplace_back(i, a);
  for (int f : fixed) parts.emplace_back(f, 0);
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (auto [big, small] : parts) {
    if (small == 0)
      s += "(" + std::to_string(big) + ")";
    else
      s += "(" + std::to_string(small) + "," + std::to_string(big) + ")";
  }
  return s;
}

Involution involution_from_graph(const std::vector<std::pair<int, int>>& graph) {
  std::map<int, int> m(graph.begin(), graph.end());
  Involution I;
  for (auto [a, b] : m) {
    auto it = m.find(b);
    if (it == m.end() || it->second != a) throw DomainError("graph is not an involution");
    if (a == b)
      I.fixed.push_back(a);
    else if (a < b)
      I.cycles.emplace_back(a, b);
  }
  I.normalize();
  return I;
}

std::pair<Tableau, Involution> ddf_forward(const TensorWord& b, Diamond d) {
  if (d == Diamond::Empty) throw DomainError("DDF needs the box or horizontal domino family");
  ShapeSequence seq = word_to_shape_sequence(b, d);
  Tableau T;
  Involution I;
  for (int i = 1; i <= b.size(); ++i) {
    const ShapeStep& st = seq.steps[static_cast<std::size_t>(i - 1)];
    switch (st.kind) {
      case StepKind::Add: T.push_back(st.row - 1, i); break;
      case StepKind::Remove: {
        int a = reverse_row_insert(T, st.row - 1);
        I.cycles.emplace_back(a, i);
        break;
      }
      case StepKind::Stay: I.fixed.push_back(i); break;
    }
  }
  T.normalize();
  I.normalize();
  return {T, I};
}

TensorWord ddf_inverse(const Tableau& T0, const Involution& I, int L, Diamond d) {
  if (d == Diamond::HDomino && !I.fixed.empty()) throw DomainError("fixed points need the box family");
  Tableau T = T0;
  std::vector<ShapeStep> steps(static_cast<std::size_t>(L));
  for (int i = L; i >= 1; --i) {
    auto& st = steps[static_cast<std::size_t>(i - 1)];
    if (std::find(I.fixed.begin(), I.fixed.end(), i) != I.fixed.end()) {
      st = {StepKind::Stay, 0};
      continue;
    }
    auto pair = std::find_if(I.cycles.begin(), I.cycles.end(), [&](auto p) { return p.second == i; });
    if (pair != I.cycles.end()) {
      Cell s = row_insert(T, pair->first);
      st = {StepKind::Remove, s.row + 1};
      continue;
    }
    auto cell = T.find(i);
    if (!cell) throw DomainError("letter " + std::to_string(i) + " is missing from T and I");
    if (cell->col != T.row_length(cell->row) - 1 || T.row_length(cell->row + 1) > cell->col)
      throw DomainError("letter " + std::to_string(i) + " is not at a corner of T");
    T.pop_back(cell->row);
    st = {StepKind::Add, cell->row + 1};
  }
  if (!T.empty()) throw DomainError("T holds letters outside 1..L");
  return shape_sequence_to_word(sequence_from_steps(steps), d);
}

Tableau burge_column(const Involution& I) {
  auto [P, Q] = column_insert_pairs(I.graph());
  if (P != Q) throw std::logic_error("column insertion of an involution gave P != Q");
  return P;
}

std::vector<BurgeStep> burge_pairs(const Involution& I) {
  std::vector<std::pair<int, int>> pairs = I.cycles;
  for (int f : I.fixed) pairs.emplace_back(f, f);
  std::sort(pairs.begin(), pairs.end(), [](auto x, auto y) { return x.second < y.second; });
  std::vector<BurgeStep> steps;
  Tableau S;
  for (auto [a, i] : pairs) {
    BurgeStep st{a, i, S, S};
    if (a < i) {
      Cell s = column_insert(S, a);
      st.inserted = S;
      S.push_back(column_height(S, s.col + 1), i);
    } else {
      S.push_back(column_height(S, 0), i);
    }
    st.result = S;
    steps.push_back(st);
  }
  return steps;
}

Tableau burge(const Involution& I) {
  Tableau S = burge_column(I);
  auto steps = burge_pairs(I);
  Tableau S2 = steps.empty() ? Tableau() : steps.back().result;
  if (S != S2) throw std::logic_error("the two Burge algorithms disagree on " + I.to_string());
  return S;
}

Involution burge_inverse(const Tableau& S) {
  return involution_from_graph(inverse_column_insert(S, S));
}

TensorWord yamanouchi_word(const Tableau& P, int L) {
  std::vector<Letter> textual;
  for (int i = L; i >= 1; --i) {
    auto cell = P.find(i);
    if (!cell) throw DomainError("P is missing letter " + std::to_string(i));
    textual.push_back(plain(cell->row + 1));
  }
  return word_of_letters(textual, RowKind::Plain);
}

DdfData ddf_map(const TensorWord& b, Diamond d) {
  DdfData out;
  std::tie(out.T, out.I) = ddf_forward(b, d);
  out.S = burge(out.I);
  for (auto [a, img] : out.I.graph()) out.Iw0.pairs.emplace_back(-a, img);
  out.Iw0.sort_by_position();
  std::tie(out.P, out.Q) = skew_rs(out.T, Tableau(), out.Iw0);
  out.c = yamanouchi_word(out.P, b.size());
  out.lambda = out.T.outer();
  out.mu = out.S.outer();
  out.tau = out.P.outer();
  if (!diamond_tileable(out.mu, d)) throw std::logic_error("mu = " + out.mu.to_string() + " is not tileable");
  return out;
}

TensorWord ddf_map_inverse(const TensorWord& c, const Tableau& T, const Tableau& S, Diamond d) {
  require_boxes(c);
  if (!diamond_tileable(S.outer(), d)) throw DomainError("shape of S is not tileable");
  Involution I = burge_inverse(S);
  TensorWord b = ddf_inverse(T, I, c.size(), d);
  DdfData check = ddf_map(b, d);
  if (check.c != c || check.T != T || check.S != S) throw DomainError("no preimage for this data");
  return b;
}

std::vector<DdfData> ddf_trace(const TensorWord& b, Diamond d) {
  std::vector<DdfData> rows;
  for (int i = 1; i <= b.size(); ++i) {
    TensorWord right;
    right.factors.assign(b.factors.end() - i, b.factors.end());
    rows.push_back(ddf_map(right, d));
  }
  return rows;
}

namespace {

std::string biword_text(const Biword& w) {
  if (w.pairs.empty()) return "";
  std::string top, bottom;
  for (auto [p, v] : w.pairs) {
    top += letter_text(p, true) + " ";
    bottom += std::to_string(v) + " ";
  }
  top.pop_back();
  bottom.pop_back();
  return top + " / " + bottom;
}

std::string tableau_line(const Tableau& t, bool starred) {
  std::string s;
  auto rows = t.raw_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += " / ";
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (k) s += ' ';
      s += rows[r][k] == Tableau::kInner ? "." : letter_text(rows[r][k], starred);
    }
  }
  return s;
}

}  // namespace

std::string render_ddf_trace(const std::vector<DdfData>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"i", "T", "I", "S", "Iw0", "P", "Q"});
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    cells.push_back({std::to_string(k + 1), tableau_line(r.T, false), r.I.to_string(),
                     tableau_line(r.S, false), biword_text(r.Iw0), tableau_line(r.P, false),
                     tableau_line(r.Q, true)});
  }
  std::vector<std::size_t> width(7, 0);
  for (auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << row[j];
      if (j + 1 < row.size()) os << std::string(width[j] - row[j].size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

TildeTriple tilde_from_vxr(const TensorWord& b, Diamond d, int n) {
  require_boxes(b);
  VxrOutput v = vxr(b, d, n);
  const int N = 2 * n, L = b.size();
  Partition lam = weight_to_partition(weight_diamond(b, n));
  TildeTriple out;

  std::vector<Partition> chain{Partition()};
  for (int i = 1; i <= L; ++i) chain.push_back(chain.back().add_cell(v.c.at(i).letters.front().value - 1));
  out.P = tableau_from_chain(chain);

  std::vector<std::vector<int>> qrows(static_cast<std::size_t>(std::max(v.tau.length(), 1)));
  for (const auto& s : v.dplus) qrows[static_cast<std::size_t>(s.value - 1)].push_back(-s.position);
  for (auto& r : qrows) std::sort(r.begin(), r.end());
  out.Q = Tableau(lam, qrows);
  out.Q.normalize();

  std::vector<std::vector<int>> trows(static_cast<std::size_t>(std::max(lam.length(), 1)));
  for (const auto& s : v.dminus) {
    int r = N + 1 - s.value;
    if (r < 1 || r > lam.length()) throw std::logic_error("dcheck minus letter outside the rows of lambda");
    trows[static_cast<std::size_t>(r - 1)].push_back(s.position);
  }
  for (auto& r : trows) std::sort(r.begin(), r.end());
  out.T = Tableau(trows);
  out.T.normalize();
  return out;
}

}  // namespace xmk
