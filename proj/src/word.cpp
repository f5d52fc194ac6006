#include "xmk/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace xmk {

int order_key(const Letter& x) {
  switch (x.kind) {
    case LetterKind::Plain: return x.value;
    case LetterKind::Zero: return 1000000;
    case LetterKind::Barred: return 2000000 - x.value;
    case LetterKind::Dual: return -x.value;
    case LetterKind::Empty: return 0;
  }
  return 0;
}

std::string to_string(const Letter& x) {
  switch (x.kind) {
    case LetterKind::Plain: return std::to_string(x.value);
    case LetterKind::Barred: return std::to_string(x.value) + "-";
    case LetterKind::Zero: return "0";
    case LetterKind::Empty: return "E";
    case LetterKind::Dual: return std::to_string(x.value) + "v";
  }
  return "?";
}

Letter parse_letter(std::string_view token, std::size_t position) {
  if (token == "E") return empty_letter();
  if (token == "0") return zero_letter();
  LetterKind kind = LetterKind::Plain;
  std::string_view digits = token;
  if (!token.empty() && token.back() == '-') {
    kind = LetterKind::Barred;
    digits.remove_suffix(1);
  } else if (!token.empty() && token.back() == 'v') {
    kind = LetterKind::Dual;
    digits.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || value <= 0)
    throw ParseError("bad letter '" + std::string(token) + "'", position);
  return {kind, value};
}

int Row::length() const { return is_empty_component() ? 0 : static_cast<int>(letters.size()); }

Row plain_row(std::vector<int> values) {
  Row r{RowKind::Plain, static_cast<int>(values.size()), {}};
  for (int v : values) r.letters.push_back(plain(v));
  return r;
}

Row dual_row(std::vector<int> values) {
  Row r{RowKind::Dual, static_cast<int>(values.size()), {}};
  for (int v : values) r.letters.push_back(dual(v));
  return r;
}

Row diamond_row(int width, std::vector<Letter> letters) {
  return Row{RowKind::Diamond, width, std::move(letters)};
}

std::vector<Letter> TensorWord::letters() const {
  std::vector<Letter> out;
  for (const auto& f : factors)
    for (const auto& x : f.letters) out.push_back(x);
  return out;
}

int TensorWord::letter_count() const {
  int n = 0;
  for (const auto& f : factors) n += f.width;
  return n;
}

std::vector<int> TensorWord::widths() const {
  std::vector<int> out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) out.push_back(it->width);
  return out;
}

TensorWord word_of_letters(const std::vector<Letter>& letters, RowKind kind) {
  TensorWord w;
  for (const auto& x : letters) {
    RowKind k = kind;
    if (kind != RowKind::Diamond) k = x.kind == LetterKind::Dual ? RowKind::Dual : RowKind::Plain;
    w.factors.push_back(Row{k, 1, {x}});
  }
  return w;
}

TensorWord concat(const TensorWord& left, const TensorWord& right) {
  TensorWord w = left;
  w.factors.insert(w.factors.end(), right.factors.begin(), right.factors.end());
  return w;
}

void validate_row(const Row& row, Diamond alphabet) {
  auto fail = [&](const std::string& why) {
    throw DomainError("invalid row '" + to_string(row) + "': " + why);
  };
  if (row.width <= 0) fail("width must be positive");
  for (std::size_t k = 1; k < row.letters.size(); ++k)
    if (order_key(row.letters[k]) < order_key(row.letters[k - 1])) fail("not weakly increasing");
  switch (row.kind) {
    case RowKind::Plain:
    case RowKind::Dual: {
      LetterKind want = row.kind == RowKind::Plain ? LetterKind::Plain : LetterKind::Dual;
      if (static_cast<int>(row.letters.size()) != row.width) fail("letter count differs from width");
      for (const auto& x : row.letters)
        if (x.kind != want) fail("mixed alphabets in a type A row");
      break;
    }
    case RowKind::Diamond: {
      if (alphabet == Diamond::Empty) fail("diamond row in a type A word");
      int zeros = 0;
      for (const auto& x : row.letters) {
        if (x.kind == LetterKind::Dual) fail("dual letter in a diamond row");
        if (x.kind == LetterKind::Zero) ++zeros;
        if (x.kind == LetterKind::Empty && row.letters.size() != 1) fail("E must stand alone");
      }
      if (row.letters.empty()) fail("empty row must be written E");
      if (alphabet == Diamond::Box) {
        if (zeros > 1) fail("0 occurs more than once");
        if (row.length() > row.width) fail("too many letters");
      } else {
        if (zeros > 0) fail("0 is not a letter of this alphabet");
        if (row.length() > row.width || (row.width - row.length()) % 2 != 0)
          fail("length must be width minus an even number");
      }
      break;
    }
  }
}

void validate_word(const TensorWord& w, Diamond alphabet) {
  for (const auto& f : w.factors) validate_row(f, alphabet);
}

int max_letter_value(const TensorWord& w) {
  int m = 0;
  for (const auto& f : w.factors)
    for (const auto& x : f.letters) m = std::max(m, x.value);
  return m;
}

std::string to_string(const Row& row) {
  std::string s;
  for (std::size_t k = 0; k < row.letters.size(); ++k) {
    if (k) s += ' ';
    s += to_string(row.letters[k]);
  }
  return s;
}

std::string to_string(const TensorWord& w) {
  bool boxes = std::all_of(w.factors.begin(), w.factors.end(),
                           [](const Row& r) { return r.width == 1 && r.letters.size() == 1; });
  std::string s;
  for (std::size_t k = 0; k < w.factors.size(); ++k) {
    if (k) s += boxes ? " " : " | ";
    s += to_string(w.factors[k]);
  }
  return s;
}

namespace {

std::vector<std::pair<std::string, std::size_t>> tokens_of(std::string_view text, std::size_t offset) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == ',')) ++k;
    std::size_t start = k;
    while (k < text.size() && text[k] != ' ' && text[k] != '\t' && text[k] != ',') ++k;
    if (k > start) out.emplace_back(std::string(text.substr(start, k - start)), offset + start);
  }
  return out;
}

}  // namespace

TensorWord parse_word(std::string_view text, Diamond alphabet, const std::vector<int>* widths) {
  std::vector<std::vector<std::pair<Letter, std::size_t>>> groups;
  if (text.find('|') != std::string_view::npos) {
    std::size_t pos = 0;
    while (true) {
      std::size_t bar = text.find('|', pos);
      auto seg = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
      auto toks = tokens_of(seg, pos);
      if (toks.empty()) throw ParseError("empty factor", pos);
      std::vector<std::pair<Letter, std::size_t>> g;
      for (auto& [t, p] : toks) g.emplace_back(parse_letter(t, p), p);
      groups.push_back(std::move(g));
      if (bar == std::string_view::npos) break;
      pos = bar + 1;
    }
  } else if (widths && widths->size() == 1) {
    std::vector<std::pair<Letter, std::size_t>> g;
    for (auto& [t, p] : tokens_of(text, 0)) g.emplace_back(parse_letter(t, p), p);
    if (!g.empty()) groups.push_back(std::move(g));
  } else {
    for (auto& [t, p] : tokens_of(text, 0)) groups.push_back({{parse_letter(t, p), p}});
  }
  if (widths && widths->size() != groups.size())
    throw ParseError("word has " + std::to_string(groups.size()) + " factors but the composition has " +
                         std::to_string(widths->size()) + " parts",
                     0);
  TensorWord w;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Row row;
    bool any_dual = false, any_plain = false;
    for (auto& [x, p] : groups[g]) {
      if (alphabet == Diamond::Empty) {
        if (x.kind == LetterKind::Dual)
          any_dual = true;
        else if (x.kind == LetterKind::Plain)
          any_plain = true;
        else
          throw ParseError("letter '" + to_string(x) + "' is not a type A letter", p);
      } else if (x.kind == LetterKind::Dual) {
        throw ParseError("dual letter '" + to_string(x) + "' in a diamond word", p);
      }
      row.letters.push_back(x);
    }
    if (any_dual && any_plain) throw ParseError("factor mixes plain and dual letters", groups[g].front().second);
    row.kind = alphabet != Diamond::Empty ? RowKind::Diamond : (any_dual ? RowKind::Dual : RowKind::Plain);
    int count = row.is_empty_component() ? 1 : static_cast<int>(row.letters.size());
    std::size_t from_right = groups.size() - 1 - g;
    row.width = widths ? (*widths)[from_right] : count;
    try {
      validate_row(row, alphabet);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), groups[g].front().second);
    }
    w.factors.push_back(std::move(row));
  }
  return w;
}

std::vector<int> parse_composition(std::string_view text) {
  std::vector<int> out;
  for (auto& [t, p] : tokens_of(text, 0)) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || v <= 0)
      throw ParseError("bad composition part '" + t + "'", p);
    out.push_back(v);
  }
  return out;
}

std::string composition_to_string(const std::vector<int>& nu) {
  std::string s;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(nu[k]);
  }
  return s;
}

std::vector<int> weight_diamond(const TensorWord& w, int n) {
  std::vector<int> wt(static_cast<std::size_t>(n), 0);
  for (const auto& f : w.factors)
    for (const auto& x : f.letters) {
      if (x.kind != LetterKind::Plain && x.kind != LetterKind::Barred) continue;
      if (x.value > n) throw DomainError("letter " + to_string(x) + " exceeds rank " + std::to_string(n));
      wt[static_cast<std::size_t>(x.value - 1)] += x.kind == LetterKind::Plain ? 1 : -1;
    }
  return wt;
}

std::vector<int> weight_type_a(const TensorWord& w, int N) {
  std::vector<int> wt(static_cast<std::size_t>(N), 0);
  for (const auto& f : w.factors)
    for (const auto& x : f.letters) {
      if (x.value > N || x.value < 1) throw DomainError("letter " + to_string(x) + " exceeds rank " + std::to_string(N));
      if (x.kind == LetterKind::Plain)
        ++wt[static_cast<std::size_t>(x.value - 1)];
      else if (x.kind == LetterKind::Dual)
        --wt[static_cast<std::size_t>(x.value - 1)];
      else
        throw DomainError("letter " + to_string(x) + " is not a type A letter");
    }
  return wt;
}

bool is_partition_weight(const std::vector<int>& wt) {
  for (std::size_t i = 0; i < wt.size(); ++i) {
    if (wt[i] < 0) return false;
    if (i > 0 && wt[i] > wt[i - 1]) return false;
  }
  return true;
}

Partition weight_to_partition(const std::vector<int>& wt) {
  if (!is_partition_weight(wt)) throw DomainError("weight is not a partition");
  return Partition(wt);
}

namespace {

Row dual_of(const Row& r) {
  Row out = r;
  std::reverse(out.letters.begin(), out.letters.end());
  for (auto& x : out.letters) {
    if (x.kind == LetterKind::Plain)
      x.kind = LetterKind::Dual;
    else if (x.kind == LetterKind::Dual)
      x.kind = LetterKind::Plain;
    else
      throw DomainError("dual is defined on type A letters only");
  }
  out.kind = r.kind == RowKind::Plain ? RowKind::Dual : RowKind::Plain;
  return out;
}

}  // namespace

TensorWord dual(const TensorWord& w) {
  TensorWord out;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) out.factors.push_back(dual_of(*it));
  return out;
}

TensorWord star(const TensorWord& w, int N) {
  TensorWord out;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    Row r = *it;
    std::reverse(r.letters.begin(), r.letters.end());
    for (auto& x : r.letters) {
      if (x.kind != LetterKind::Plain && x.kind != LetterKind::Dual)
        throw DomainError("star is defined on type A letters only");
      x.value = N + 1 - x.value;
    }
    out.factors.push_back(std::move(r));
  }
  return out;
}

std::vector<int> letter_values(const Row& row) {
  std::vector<int> out;
  for (const auto& x : row.letters) out.push_back(x.value);
  return out;
}

}  // namespace xmk
