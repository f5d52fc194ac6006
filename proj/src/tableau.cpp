#include "xmk/tableau.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace xmk {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) { normalize(); }

Tableau::Tableau(Partition inner, const std::vector<std::vector<int>>& rows) : inner_(std::move(inner)) {
  int n = std::max(inner_.length(), static_cast<int>(rows.size()));
  rows_.assign(static_cast<std::size_t>(n), {});
  for (int r = 0; r < n; ++r) {
    rows_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(inner_[r]), kInner);
    if (r < static_cast<int>(rows.size()))
      for (int x : rows[static_cast<std::size_t>(r)]) rows_[static_cast<std::size_t>(r)].push_back(x);
  }
  normalize();
}

void Tableau::normalize() {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  Partition(std::vector<int>(lens));  // throws if not a partition
}

Partition Tableau::outer() const {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return Partition(std::move(lens));
}

std::vector<int> Tableau::real_row(int r) const {
  std::vector<int> out;
  if (r >= num_rows()) return out;
  const auto& row = rows_[static_cast<std::size_t>(r)];
  for (int c = inner_[r]; c < static_cast<int>(row.size()); ++c) out.push_back(row[static_cast<std::size_t>(c)]);
  return out;
}

std::vector<std::vector<int>> Tableau::real_rows() const {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < num_rows(); ++r) out.push_back(real_row(r));
  return out;
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> out;
  for (int r = num_rows() - 1; r >= 0; --r)
    for (int x : real_row(r)) out.push_back(x);
  return out;
}

std::vector<int> Tableau::letters() const {
  std::vector<int> out = row_word();
  std::sort(out.begin(), out.end());
  return out;
}

bool Tableau::contains_letter(int x) const { return find(x).has_value(); }

std::optional<Cell> Tableau::find(int x) const {
  for (int r = 0; r < num_rows(); ++r)
    for (int c = inner_[r]; c < row_length(r); ++c)
      if (at(r, c) == x) return Cell{r, c};
  return std::nullopt;
}

void Tableau::push_back(int r, int x) {
  if (r > num_rows()) throw DomainError("cannot append below a missing row");
  if (r == num_rows()) rows_.emplace_back();
  rows_[static_cast<std::size_t>(r)].push_back(x);
}

int Tableau::pop_back(int r) {
  auto& row = rows_.at(static_cast<std::size_t>(r));
  int x = row.back();
  row.pop_back();
  normalize();
  return x;
}

bool Tableau::is_semistandard() const {
  Partition out = outer();
  if (!out.contains(inner_)) return false;
  for (int r = 0; r < num_rows(); ++r)
    for (int c = inner_[r]; c < row_length(r); ++c) {
      if (c > inner_[r] && at(r, c - 1) > at(r, c)) return false;
      if (r > 0 && c >= inner_[r - 1] && at(r - 1, c) >= at(r, c)) return false;
    }
  return true;
}

bool Tableau::is_standard_on(const std::vector<int>& alphabet) const {
  if (!is_semistandard()) return false;
  std::vector<int> mine = letters();
  std::vector<int> want = alphabet;
  std::sort(want.begin(), want.end());
  return mine == want;
}

std::string letter_text(int x, bool starred) {
  if (x == Tableau::kInner) return ".";
  if (starred && x < 0) return std::to_string(-x) + "*";
  return std::to_string(x);
}

std::string Tableau::to_string(bool starred) const {
  if (rows_.empty()) return "(empty)";
  std::size_t w = 1;
  for (const auto& row : rows_)
    for (int x : row) w = std::max(w, letter_text(x, starred).size());
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '\n';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ' ';
      std::string t = letter_text(rows_[r][c], starred);
      s += std::string(w - t.size(), ' ') + t;
    }
  }
  return s;
}

void Biword::sort_by_position() { std::sort(pairs.begin(), pairs.end()); }

Biword Biword::inverse() const {
  Biword b;
  for (auto [p, v] : pairs) b.pairs.emplace_back(v, p);
  b.sort_by_position();
  return b;
}

Tableau tableau_from_chain(const std::vector<Partition>& chain, int first_letter) {
  Tableau t;
  int letter = first_letter;
  for (std::size_t k = 1; k < chain.size(); ++k, ++letter) {
    const Partition& a = chain[k - 1];
    const Partition& b = chain[k];
    if (a == b) continue;
    if (!b.contains(a) || b.size() != a.size() + 1) throw DomainError("chain step is not a single added cell");
    for (int r = 0; r < b.length(); ++r)
      if (b[r] != a[r]) t.push_back(r, letter);
  }
  return t;
}

}  // namespace xmk
