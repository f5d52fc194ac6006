#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmk/partition.hpp"

namespace xmk {

enum class LetterKind : std::uint8_t { Plain, Barred, Zero, Empty, Dual };

/// One letter of a row. `value` is unused for Zero and Empty.
struct Letter {
  LetterKind kind = LetterKind::Plain;
  int value = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter plain(int i) { return {LetterKind::Plain, i}; }
inline Letter barred(int i) { return {LetterKind::Barred, i}; }
inline Letter dual(int j) { return {LetterKind::Dual, j}; }
inline Letter zero_letter() { return {LetterKind::Zero, 0}; }
inline Letter empty_letter() { return {LetterKind::Empty, 0}; }

/// Position in the crystal order: 1 < ... < n < 0 < n- < ... < 1- for the
/// diamond alphabets, N∨ < ... < 1∨ for dual letters.
int order_key(const Letter& x);

inline bool letter_less(const Letter& x, const Letter& y) { return order_key(x) < order_key(y); }

std::string to_string(const Letter& x);
Letter parse_letter(std::string_view token, std::size_t position = 0);

enum class RowKind : std::uint8_t { Plain, Dual, Diamond };

/// A weakly increasing row. For diamond rows the letter count may be below
/// `width`; a row holding the single Empty letter is the zero-length component.
struct Row {
  RowKind kind = RowKind::Plain;
  int width = 0;
  std::vector<Letter> letters;

  /// Number of genuine letters (the Empty marker counts as zero).
  int length() const;
  bool is_empty_component() const {
    return letters.size() == 1 && letters.front().kind == LetterKind::Empty;
  }

  friend bool operator==(const Row&, const Row&) = default;
  friend auto operator<=>(const Row&, const Row&) = default;
};

Row plain_row(std::vector<int> values);
Row dual_row(std::vector<int> values);
Row diamond_row(int width, std::vector<Letter> letters);

/// Tensor product element. Factors are stored in textual order: factors.front()
/// is the leftmost tensor factor b_L, factors.back() is b_1.
struct TensorWord {
  std::vector<Row> factors;

  int size() const { return static_cast<int>(factors.size()); }
  /// Factor at tensor position p, counted from the right starting at 1.
  const Row& at(int p) const { return factors[factors.size() - static_cast<std::size_t>(p)]; }
  Row& at(int p) { return factors[factors.size() - static_cast<std::size_t>(p)]; }
  std::vector<Letter> letters() const;
  int letter_count() const;
  std::vector<int> widths() const;

  friend bool operator==(const TensorWord&, const TensorWord&) = default;
  friend auto operator<=>(const TensorWord&, const TensorWord&) = default;
};

/// Word of width-one factors, one per letter, in textual order.
TensorWord word_of_letters(const std::vector<Letter>& letters, RowKind kind);

/// Concatenate tensor products: left ⊗ right.
TensorWord concat(const TensorWord& left, const TensorWord& right);

/// Throws DomainError if a row is not weakly increasing or breaks the
/// component rules of its alphabet.
void validate_row(const Row& row, Diamond alphabet);
void validate_word(const TensorWord& w, Diamond alphabet);

/// Largest letter index occurring in w.
int max_letter_value(const TensorWord& w);

std::string to_string(const Row& row);
std::string to_string(const TensorWord& w);

/// Parse the word grammar. With Diamond::Empty the alphabet is type A (plain and
/// dual letters); otherwise letters are diamond letters. `widths` lists factor
/// widths from the rightmost factor; when absent each width is the letter count.
/// Without '|', each letter is a factor unless `widths` has a single entry.
TensorWord parse_word(std::string_view text, Diamond alphabet,
                      const std::vector<int>* widths = nullptr);

/// Parse "2,1,1" into a composition; the first entry is the rightmost factor.
std::vector<int> parse_composition(std::string_view text);
std::string composition_to_string(const std::vector<int>& nu);

/// Coordinates m_i - m_{i-bar}, length n.
std::vector<int> weight_diamond(const TensorWord& w, int n);
/// Type A weight of length N: plain i adds 1, dual j subtracts 1.
std::vector<int> weight_type_a(const TensorWord& w, int N);

bool is_partition_weight(const std::vector<int>& wt);
Partition weight_to_partition(const std::vector<int>& wt);

/// Reverse factor order and dualize every letter.
TensorWord dual(const TensorWord& w);
/// Letters j -> N+1-j (duals likewise), factor order and row order reversed.
TensorWord star(const TensorWord& w, int N);

/// The type A row word obtained by dropping row structure.
std::vector<int> letter_values(const Row& row);

}  // namespace xmk
