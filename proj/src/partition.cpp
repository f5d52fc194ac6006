#include "xmk/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace xmk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int r = 0; r < other.length(); ++r)
    if (other[r] > (*this)[r]) return false;
  return true;
}

bool Partition::is_addable(int row) const {
  if (row < 0 || row > length()) return false;
  return row == 0 || (*this)[row - 1] > (*this)[row];
}

bool Partition::is_removable(int row) const {
  if (row < 0 || row >= length()) return false;
  return (*this)[row] > (*this)[row + 1];
}

Partition Partition::add_cell(int row) const {
  if (!is_addable(row))
    throw DomainError("row " + std::to_string(row + 1) + " of " + to_string() + " is not addable");
  std::vector<int> p = parts_;
  if (row == length())
    p.push_back(1);
  else
    ++p[static_cast<std::size_t>(row)];
  return Partition(std::move(p));
}

Partition Partition::remove_cell(int row) const {
  if (!is_removable(row))
    throw DomainError("row " + std::to_string(row + 1) + " of " + to_string() +
                      " has no removable cell");
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(row)];
  return Partition(std::move(p));
}

Partition Partition::union_with(const Partition& other) const {
  std::vector<int> p(static_cast<std::size_t>(std::max(length(), other.length())));
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    p[static_cast<std::size_t>(r)] = std::max((*this)[r], other[r]);
  return Partition(std::move(p));
}

Partition Partition::intersection_with(const Partition& other) const {
  std::vector<int> p(static_cast<std::size_t>(std::min(length(), other.length())));
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    p[static_cast<std::size_t>(r)] = std::min((*this)[r], other[r]);
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "-" || trimmed == "0") return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= trimmed.size()) {
    std::size_t comma = trimmed.find(',', pos);
    if (comma == std::string_view::npos) comma = trimmed.size();
    auto token = trimmed.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
      throw ParseError("bad partition part '" + std::string(token) + "'", pos);
    parts.push_back(value);
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> prefix;
  generate(k, k, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int k) {
  std::vector<Partition> out;
  for (int j = 0; j <= k; ++j) {
    auto ps = partitions_of(j);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Diamond parse_diamond(std::string_view text) {
  if (text == "empty" || text == "none" || text == "A" || text == "\xE2\x88\x85") return Diamond::Empty;
  if (text == "box" || text == "B") return Diamond::Box;
  if (text == "hdomino" || text == "C") return Diamond::HDomino;
  if (text == "vdomino" || text == "square" || text == "D")
    throw DomainError("the vertical-domino family is not supported");
  throw ParseError("unknown diamond kind '" + std::string(text) + "'", 0);
}

std::string to_string(Diamond d) {
  switch (d) {
    case Diamond::Empty: return "empty";
    case Diamond::Box: return "box";
    case Diamond::HDomino: return "hdomino";
  }
  return "?";
}

bool diamond_tileable(const Partition& p, Diamond d) {
  switch (d) {
    case Diamond::Empty: return p.empty();
    case Diamond::Box: return true;
    case Diamond::HDomino:
      return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
  }
  return false;
}

}  // namespace xmk
