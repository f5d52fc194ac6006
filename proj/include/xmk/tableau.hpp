#pragma once

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xmk/partition.hpp"

namespace xmk {

/// Cell coordinates, both 0-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A filling of the skew shape outer/inner. Row r stores outer[r] slots; the
/// first inner[r] of them hold kInner. Letters are ints; starred position
/// letters are stored negated so that 7* < 6* < ... < 1*.
class Tableau {
 public:
  static constexpr int kInner = INT_MIN;

  Tableau() = default;
  /// Straight shape from rows of letters.
  explicit Tableau(std::vector<std::vector<int>> rows);
  /// Skew shape: `rows` lists the letters right of the inner shape.
  Tableau(Partition inner, const std::vector<std::vector<int>>& rows);

  const Partition& inner() const { return inner_; }
  Partition outer() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int r) const { return r < num_rows() ? static_cast<int>(rows_[static_cast<std::size_t>(r)].size()) : 0; }
  int size() const { return outer().size() - inner_.size(); }
  bool empty() const { return size() == 0; }

  int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  int& at(int r, int c) { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  bool is_inner(int r, int c) const { return c < inner_[r]; }
  const std::vector<std::vector<int>>& raw_rows() const { return rows_; }

  /// Letters of row r right of the inner shape.
  std::vector<int> real_row(int r) const;
  std::vector<std::vector<int>> real_rows() const;

  /// Row reading word: bottom row first, each row left to right.
  std::vector<int> row_word() const;
  std::vector<int> letters() const;
  bool contains_letter(int x) const;
  std::optional<Cell> find(int x) const;

  /// Appends a cell at the end of row r (extending rows as needed).
  void push_back(int r, int x);
  /// Removes the last cell of row r; returns its letter.
  int pop_back(int r);
  void set_inner(Partition p) { inner_ = std::move(p); }
  void normalize();

  bool is_semistandard() const;
  bool is_standard_on(const std::vector<int>& alphabet) const;

  /// Aligned ASCII grid with '.' for inner cells.
  std::string to_string(bool starred = false) const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.inner_ == b.inner_ && a.rows_ == b.rows_;
  }
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.inner_ <=> b.inner_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

/// Renders a letter; negative letters print as "k*".
std::string letter_text(int x, bool starred);

/// A finite bijection between positions and values, stored as (position, value).
struct Biword {
  std::vector<std::pair<int, int>> pairs;

  void sort_by_position();
  Biword inverse() const;
  friend bool operator==(const Biword&, const Biword&) = default;
};

/// Standard tableau of shape lambda^(L) from a chain of shapes: letter i sits in
/// the cell added at step i (steps that add nothing are skipped).
Tableau tableau_from_chain(const std::vector<Partition>& chain, int first_letter = 1);

}  // namespace xmk
