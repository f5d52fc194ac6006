#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xmk {

/// Thrown for malformed input: bad partitions, words, flags.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when an operation's precondition on its domain is violated.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weakly decreasing sequence of positive integers. Rows are 0-based.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else non-decreasing throws DomainError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// Part `row` (0-based); zero past the end.
  int operator[](int row) const {
    return row >= 0 && row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  Partition conjugate() const;
  bool contains(const Partition& other) const;

  bool is_addable(int row) const;
  bool is_removable(int row) const;
  Partition add_cell(int row) const;
  Partition remove_cell(int row) const;

  Partition union_with(const Partition& other) const;
  Partition intersection_with(const Partition& other) const;

  /// "4,2,1"; the empty partition renders as "-".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of `k`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int k);

/// All partitions of size at most `k`, grouped by size.
std::vector<Partition> partitions_up_to(int k);

/// The ◇ families handled here. The vertical domino family is rejected at parse time.
enum class Diamond { Empty, Box, HDomino };

/// Scale factor ξ: 2 for the box family, 1 otherwise.
inline int xi(Diamond d) { return d == Diamond::Box ? 2 : 1; }

Diamond parse_diamond(std::string_view text);
std::string to_string(Diamond d);

/// Whether the Ferrers diagram of `p` tiles by the shape of `d`.
bool diamond_tileable(const Partition& p, Diamond d);

}  // namespace xmk
