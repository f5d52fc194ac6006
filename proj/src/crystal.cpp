#include "xmk/crystal.hpp"

#include <stdexcept>

namespace xmk {

CrystalType diamond_crystal(Diamond d, int n) {
  switch (d) {
    case Diamond::Box: return {CrystalType::B, n};
    case Diamond::HDomino: return {CrystalType::C, n};
    case Diamond::Empty: break;
  }
  throw DomainError("type A words have no diamond crystal");
}

int letter_phi(const CrystalType& ct, int i, const Letter& x) {
  const int n = ct.rank;
  switch (x.kind) {
    case LetterKind::Plain:
      if (x.value == i) return ct.kind == CrystalType::B && i == n ? 2 : 1;
      return 0;
    case LetterKind::Dual: return ct.kind == CrystalType::A && x.value == i + 1 ? 1 : 0;
    case LetterKind::Barred: return ct.kind != CrystalType::A && i < n && x.value == i + 1 ? 1 : 0;
    case LetterKind::Zero: return ct.kind == CrystalType::B && i == n ? 1 : 0;
    case LetterKind::Empty: return 0;
  }
  return 0;
}

int letter_epsilon(const CrystalType& ct, int i, const Letter& x) {
  const int n = ct.rank;
  switch (x.kind) {
    case LetterKind::Plain: return x.value == i + 1 && (ct.kind == CrystalType::A || i < n) ? 1 : 0;
    case LetterKind::Dual: return ct.kind == CrystalType::A && x.value == i ? 1 : 0;
    case LetterKind::Barred:
      if (ct.kind == CrystalType::A || x.value != i) return 0;
      return ct.kind == CrystalType::B && i == n ? 2 : 1;
    case LetterKind::Zero: return ct.kind == CrystalType::B && i == n ? 1 : 0;
    case LetterKind::Empty: return 0;
  }
  return 0;
}

std::optional<Letter> letter_f(const CrystalType& ct, int i, const Letter& x) {
  if (letter_phi(ct, i, x) == 0) return std::nullopt;
  const int n = ct.rank;
  switch (x.kind) {
    case LetterKind::Plain:
      if (ct.kind == CrystalType::A || i < n) return plain(i + 1);
      return ct.kind == CrystalType::B ? zero_letter() : barred(n);
    case LetterKind::Dual: return dual(i);
    case LetterKind::Barred: return barred(i);
    case LetterKind::Zero: return barred(n);
    case LetterKind::Empty: break;
  }
  return std::nullopt;
}

std::optional<Letter> letter_e(const CrystalType& ct, int i, const Letter& x) {
  if (letter_epsilon(ct, i, x) == 0) return std::nullopt;
  const int n = ct.rank;
  switch (x.kind) {
    case LetterKind::Plain: return plain(i);
    case LetterKind::Dual: return dual(i + 1);
    case LetterKind::Barred:
      if (i < n) return barred(i + 1);
      return ct.kind == CrystalType::B ? zero_letter() : plain(n);
    case LetterKind::Zero: return plain(n);
    case LetterKind::Empty: break;
  }
  return std::nullopt;
}

namespace {

struct LetterRef {
  std::size_t factor;
  std::size_t slot;
};

struct Signature {
  std::vector<LetterRef> refs;        // reading order: rightmost letter first
  std::vector<std::size_t> plus;      // uncancelled + (letter index), in reading order
  std::vector<std::size_t> minus;     // uncancelled -, in reading order
};

Signature signature(const TensorWord& w, int i, const CrystalType& ct) {
  Signature s;
  for (std::size_t f = w.factors.size(); f-- > 0;) {
    const auto& row = w.factors[f];
    for (std::size_t k = row.letters.size(); k-- > 0;) s.refs.push_back({f, k});
  }
  for (std::size_t idx = 0; idx < s.refs.size(); ++idx) {
    const Letter& x = w.factors[s.refs[idx].factor].letters[s.refs[idx].slot];
    int eps = letter_epsilon(ct, i, x), ph = letter_phi(ct, i, x);
    for (int k = 0; k < eps; ++k) {
      if (!s.plus.empty())
        s.plus.pop_back();
      else
        s.minus.push_back(idx);
    }
    for (int k = 0; k < ph; ++k) s.plus.push_back(idx);
  }
  return s;
}

void check_rows(const TensorWord& w) {
  for (const auto& row : w.factors)
    for (std::size_t k = 1; k < row.letters.size(); ++k)
      if (order_key(row.letters[k]) < order_key(row.letters[k - 1]))
        throw std::logic_error("crystal operator produced a non-increasing row: " + to_string(row));
}

}  // namespace

std::optional<TensorWord> apply_f(const TensorWord& w, int i, const CrystalType& ct) {
  if (i < 1 || i > ct.max_index()) throw DomainError("crystal index " + std::to_string(i) + " out of range");
  Signature s = signature(w, i, ct);
  if (s.plus.empty()) return std::nullopt;
  LetterRef ref = s.refs[s.plus.front()];
  TensorWord out = w;
  Letter& x = out.factors[ref.factor].letters[ref.slot];
  auto y = letter_f(ct, i, x);
  if (!y) throw std::logic_error("signature rule selected a letter with no f-arrow");
  x = *y;
  check_rows(out);
  return out;
}

std::optional<TensorWord> apply_e(const TensorWord& w, int i, const CrystalType& ct) {
  if (i < 1 || i > ct.max_index()) throw DomainError("crystal index " + std::to_string(i) + " out of range");
  Signature s = signature(w, i, ct);
  if (s.minus.empty()) return std::nullopt;
  LetterRef ref = s.refs[s.minus.back()];
  TensorWord out = w;
  Letter& x = out.factors[ref.factor].letters[ref.slot];
  auto y = letter_e(ct, i, x);
  if (!y) throw std::logic_error("signature rule selected a letter with no e-arrow");
  x = *y;
  check_rows(out);
  return out;
}

int epsilon(const TensorWord& w, int i, const CrystalType& ct) {
  return static_cast<int>(signature(w, i, ct).minus.size());
}

int phi(const TensorWord& w, int i, const CrystalType& ct) {
  return static_cast<int>(signature(w, i, ct).plus.size());
}

bool is_highest_weight(const TensorWord& w, const CrystalType& ct) {
  for (int i = 1; i <= ct.max_index(); ++i)
    if (!signature(w, i, ct).minus.empty()) return false;
  return true;
}

Raised raise_to_highest(const TensorWord& w, const CrystalType& ct) {
  Raised r{w, {}};
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= ct.max_index(); ++i) {
      if (auto up = apply_e(r.highest, i, ct)) {
        r.highest = std::move(*up);
        r.path.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return r;
}

std::optional<TensorWord> lower_along(const TensorWord& start, const std::vector<int>& path,
                                      const CrystalType& ct) {
  std::optional<TensorWord> cur = start;
  for (auto it = path.rbegin(); it != path.rend() && cur; ++it) cur = apply_f(*cur, *it, ct);
  return cur;
}

RowModule module_of(const Row& r) { return {r.kind, r.width}; }

std::vector<RowModule> modules_of(const TensorWord& w) {
  std::vector<RowModule> out;
  for (const auto& f : w.factors) out.push_back(module_of(f));
  return out;
}

Row leading_row(const RowModule& m, int N) {
  if (m.kind == RowKind::Plain) return plain_row(std::vector<int>(static_cast<std::size_t>(m.width), 1));
  if (m.kind == RowKind::Dual) return dual_row(std::vector<int>(static_cast<std::size_t>(m.width), N));
  throw DomainError("leading element requested for a diamond row");
}

TensorWord transport(const TensorWord& w, const std::vector<RowModule>& target, int N) {
  if (modules_of(w) == target) return w;
  if (target.size() != 2) throw DomainError("transport supports two-factor targets only");
  CrystalType ct = type_a(N);
  Raised r = raise_to_highest(w, ct);
  std::vector<int> wt = weight_type_a(r.highest, N);
  Row right = leading_row(target[1], N);
  std::vector<int> rest = wt;
  for (const auto& x : right.letters) rest[static_cast<std::size_t>(x.value - 1)] += x.kind == LetterKind::Plain ? -1 : 1;
  std::vector<int> values;
  if (target[0].kind == RowKind::Plain) {
    for (int j = 1; j <= N; ++j) {
      int c = rest[static_cast<std::size_t>(j - 1)];
      if (c < 0) throw DomainError("transport: no highest weight vector of this weight in the target");
      for (int k = 0; k < c; ++k) values.push_back(j);
    }
  } else {
    for (int j = N; j >= 1; --j) {
      int c = rest[static_cast<std::size_t>(j - 1)];
      if (c > 0) throw DomainError("transport: no highest weight vector of this weight in the target");
      for (int k = 0; k < -c; ++k) values.push_back(j);
    }
  }
  if (static_cast<int>(values.size()) != target[0].width)
    throw DomainError("transport: no highest weight vector of this weight in the target");
  TensorWord hw;
  hw.factors.push_back(target[0].kind == RowKind::Plain ? plain_row(values) : dual_row(values));
  hw.factors.push_back(right);
  if (!is_highest_weight(hw, ct))
    throw DomainError("transport: candidate " + to_string(hw) + " is not highest weight");
  auto out = lower_along(hw, r.path, ct);
  if (!out) throw std::logic_error("transport: lowering path left the target component");
  return *out;
}

std::optional<TensorWord> virtual_f(const TensorWord& w, int i, Diamond d, int n) {
  CrystalType ct = type_a(2 * n);
  if (i < 1 || i > n) throw DomainError("virtual index out of range");
  std::optional<TensorWord> cur = apply_f(w, i, ct);
  if (!cur) return cur;
  if (i < n) return apply_f(*cur, 2 * n - i, ct);
  if (d == Diamond::HDomino) return apply_f(*cur, n, ct);
  return cur;
}

std::optional<TensorWord> virtual_e(const TensorWord& w, int i, Diamond d, int n) {
  CrystalType ct = type_a(2 * n);
  if (i < 1 || i > n) throw DomainError("virtual index out of range");
  std::optional<TensorWord> cur = apply_e(w, i, ct);
  if (!cur) return cur;
  if (i < n) return apply_e(*cur, 2 * n - i, ct);
  if (d == Diamond::HDomino) return apply_e(*cur, n, ct);
  return cur;
}

}  // namespace xmk
