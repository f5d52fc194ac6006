#include "xmk/virtual_vxr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "xmk/crystal.hpp"
#include "xmk/energy.hpp"
#include "xmk/highest_weight.hpp"
#include "xmk/insertion.hpp"

namespace xmk {

namespace {

Row ones_row(int s) { return plain_row(std::vector<int>(static_cast<std::size_t>(s), 1)); }

Row leading_virtual_dual(int r, int s, int N) {
  std::vector<int> v(static_cast<std::size_t>(r), N);
  v.insert(v.end(), static_cast<std::size_t>(s - r), 1);
  return dual_row(v);
}

TensorWord two(const Row& a, const Row& b) { return TensorWord{{a, b}}; }

void check_diamond(Diamond d) {
  if (d == Diamond::Empty) throw DomainError("the virtual crystal needs the box or horizontal domino family");
}

}  // namespace

TensorWord psi_row(const Row& x, Diamond d, int n) {
  check_diamond(d);
  if (x.kind != RowKind::Diamond) throw DomainError("psi needs a diamond row");
  validate_row(x, d);
  const int N = 2 * n;
  Raised r = raise_to_highest(TensorWord{{x}}, diamond_crystal(d, n));
  const Row& top = r.highest.factors.front();
  int m = top.length();
  TensorWord w = two(leading_virtual_dual(m, x.width, N), ones_row(x.width));
  for (auto it = r.path.rbegin(); it != r.path.rend(); ++it) {
    auto next = virtual_f(w, *it, d, n);
    if (!next) throw std::logic_error("virtual lowering vanished on " + to_string(x));
    w = *next;
  }
  return w;
}

Row psi_row_inverse(const Row& dual_part, const Row& plain_part, Diamond d, int n) {
  check_diamond(d);
  if (dual_part.kind != RowKind::Dual || plain_part.kind != RowKind::Plain ||
      dual_part.width != plain_part.width)
    throw DomainError("not a virtual block: " + to_string(dual_part) + " | " + to_string(plain_part));
  const int N = 2 * n, s = plain_part.width;
  TensorWord w = two(dual_part, plain_part);
  std::vector<int> path;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= n; ++i) {
      if (auto up = virtual_e(w, i, d, n)) {
        w = *up;
        path.push_back(i);
        moved = true;
      }
    }
  }
  if (w.factors[1] != ones_row(s)) throw DomainError("block is outside the virtual image");
  int m = 0;
  for (const auto& x : w.factors[0].letters) m += x.value == N ? 1 : 0;
  if (w.factors[0] != leading_virtual_dual(m, s, N)) throw DomainError("block is outside the virtual image");
  if (d == Diamond::HDomino && (s - m) % 2 != 0) throw DomainError("block is outside the virtual image");
  Row start = m == 0 ? diamond_row(s, {empty_letter()})
                     : diamond_row(s, std::vector<Letter>(static_cast<std::size_t>(m), plain(1)));
  auto low = lower_along(TensorWord{{start}}, path, diamond_crystal(d, n));
  if (!low) throw DomainError("block is outside the virtual image");
  Row x = low->factors.front();
  if (psi_row(x, d, n) != two(dual_part, plain_part)) throw DomainError("block is outside the virtual image");
  return x;
}

TensorWord psi(const TensorWord& b, Diamond d, int n) {
  TensorWord out;
  for (const auto& x : b.factors) {
    TensorWord v = psi_row(x, d, n);
    out.factors.insert(out.factors.end(), v.factors.begin(), v.factors.end());
  }
  return out;
}

TensorWord psi_prime(const TensorWord& b, Diamond d, int n) {
  TensorWord out;
  for (const auto& x : b.factors) {
    TensorWord v = psi_row(x, d, n);
    auto [p, q] = r_matrix(v.factors[0], v.factors[1], 2 * n);
    out.factors.push_back(p);
    out.factors.push_back(q);
  }
  return out;
}

TensorWord psi_inverse(const TensorWord& v, Diamond d, int n) {
  if (v.size() % 2 != 0) throw DomainError("virtual word has an odd number of factors");
  TensorWord out;
  for (std::size_t k = 0; k < v.factors.size(); k += 2)
    out.factors.push_back(psi_row_inverse(v.factors[k], v.factors[k + 1], d, n));
  return out;
}

RPlusResult r_plus(const TensorWord& v, int N, RPlusSchedule schedule) {
  RPlusResult res;
  TensorWord cur = v;
  res.rows.push_back(cur);
  auto swap_at = [&](std::size_t k, int round) {
    const Row& a = cur.factors[k];
    const Row& b = cur.factors[k + 1];
    bool sw = a.width == 1 && b.width == 1 && a.letters[0].value == N && b.letters[0].value == N;
    auto [x, y] = r_matrix(a, b, N);
    cur.factors[k] = x;
    cur.factors[k + 1] = y;
    if (sw) res.switches.push_back({round, static_cast<int>(cur.factors.size() - k - 1)});
  };
  auto unsorted = [&](std::size_t k) {
    return cur.factors[k].kind == RowKind::Plain && cur.factors[k + 1].kind == RowKind::Dual;
  };
  int round = 0;
  while (true) {
    bool moved = false;
    ++round;
    for (std::size_t k = 0; k + 1 < cur.factors.size(); ++k) {
      if (!unsorted(k)) continue;
      swap_at(k, round);
      moved = true;
      if (schedule == RPlusSchedule::Sequential) break;
      ++k;
    }
    if (!moved) break;
    res.rows.push_back(cur);
  }
  std::size_t duals = 0;
  while (duals < cur.factors.size() && cur.factors[duals].kind == RowKind::Dual) ++duals;
  res.dcheck.factors.assign(cur.factors.begin(), cur.factors.begin() + static_cast<std::ptrdiff_t>(duals));
  res.c.factors.assign(cur.factors.begin() + static_cast<std::ptrdiff_t>(duals), cur.factors.end());
  for (const auto& r : res.c.factors)
    if (r.kind != RowKind::Plain) throw DomainError("R+ input must hold only plain and dual rows");
  return res;
}

HalfInteger virtual_coenergy(const TensorWord& b, Diamond d, int n) {
  HalfInteger full = intrinsic_coenergy(psi(b, d, n), 2 * n);
  if (!full.is_integer()) throw std::logic_error("type A coenergy is not integral");
  return HalfInteger::from_twice(full.twice() / 2);
}

HalfInteger diamond_coenergy(const TensorWord& b, Diamond d, int n) {
  bool boxes = std::all_of(b.factors.begin(), b.factors.end(), [](const Row& r) { return r.width == 1; });
  if (boxes) return intrinsic_coenergy_diamond(b, d);
  return virtual_coenergy(b, d, n);
}

HalfInteger block_coenergy(const TensorWord& dcheck, const TensorWord& c, int N) {
  TensorWord cur = concat(dcheck, c);
  HalfInteger total = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t k = 0; k + 1 < cur.factors.size(); ++k) {
      const Row& a = cur.factors[k];
      const Row& b = cur.factors[k + 1];
      if (a.kind != RowKind::Dual || b.kind != RowKind::Plain) continue;
      total += local_coenergy(a, b, N);
      auto [x, y] = r_matrix(a, b, N);
      cur.factors[k] = x;
      cur.factors[k + 1] = y;
      moved = true;
    }
  }
  return total;
}

VxrOutput vxr(const TensorWord& b, Diamond d, int n) {
  check_diamond(d);
  validate_word(b, d);
  const int N = 2 * n;
  std::vector<int> wt = weight_diamond(b, n);
  if (!is_partition_weight(wt) || !is_highest_weight(b, diamond_crystal(d, n)))
    throw DomainError("vxr needs a highest weight vector: " + to_string(b));
  Partition lam = weight_to_partition(wt);

  VxrOutput out;
  out.trace = r_plus(psi(b, d, n), N);
  out.dcheck = out.trace.dcheck;
  out.c = out.trace.c;

  std::vector<int> tw = weight_type_a(out.c, N);
  if (!is_partition_weight(tw) || !is_highest_weight(out.c, type_a(N)))
    throw std::logic_error("c is not a highest weight vector");
  out.tau = weight_to_partition(tw);
  if (out.tau.length() > n) throw std::logic_error("tau has more than n rows");
  if (!out.tau.contains(lam)) throw std::logic_error("tau does not contain lambda");

  std::vector<Letter> all = out.dcheck.letters();
  const int K = static_cast<int>(all.size());
  std::vector<Letter> minus_letters;
  for (int k = 0; k < K; ++k) {
    SplitLetter s{K - k, all[static_cast<std::size_t>(k)].value};
    if (s.value <= n) {
      out.dplus.push_back(s);
    } else {
      out.dminus.push_back(s);
      minus_letters.push_back(all[static_cast<std::size_t>(k)]);
    }
  }
  std::vector<int> zword;
  for (auto it = out.dplus.rbegin(); it != out.dplus.rend(); ++it) zword.push_back(it->value);
  out.Z = product_tableau(zword);
  out.mu = out.Z.outer();

  TensorWord dm = word_of_letters(minus_letters, RowKind::Dual);
  std::vector<int> expect(static_cast<std::size_t>(N), 0);
  for (int r = 0; r < lam.length(); ++r) expect[static_cast<std::size_t>(N - 1 - r)] = -lam[r];
  if (!is_highest_weight(dm, type_a(N)) || weight_type_a(dm, N) != expect)
    throw std::logic_error("the minus part of dcheck is not highest weight of weight -w0 lambda");
  if (!diamond_tileable(out.mu, d)) throw std::logic_error("mu = " + out.mu.to_string() + " is not tileable");

  out.grading_lhs = 2 * diamond_coenergy(b, d, n);
  out.grading_rhs = HalfInteger(b.letter_count() - lam.size()) + 2 * intrinsic_coenergy(out.c, N);
  if (out.grading_lhs != out.grading_rhs) throw std::logic_error("grading identity fails");
  return out;
}

TensorWord right_split(const TensorWord& w, Diamond d) {
  if (w.size() == 0) throw DomainError("nothing to split");
  const Row& r = w.at(1);
  if (r.width < 2) throw DomainError("right splitting needs width at least 2");
  TensorWord out = w;
  out.factors.pop_back();
  if (r.kind != RowKind::Diamond) {
    Row u{r.kind, r.width - 1, {r.letters.begin(), r.letters.end() - 1}};
    out.factors.push_back(u);
    out.factors.push_back(Row{r.kind, 1, {r.letters.back()}});
    return out;
  }
  if (d == Diamond::Empty) throw DomainError("diamond row needs a diamond family");
  if (r.is_empty_component()) {
    out.factors.push_back(diamond_row(r.width - 1, {barred(1)}));
    out.factors.push_back(diamond_row(1, {plain(1)}));
    return out;
  }
  std::vector<Letter> u(r.letters.begin(), r.letters.end() - 1);
  if (u.empty()) u.push_back(empty_letter());
  out.factors.push_back(diamond_row(r.width - 1, u));
  out.factors.push_back(diamond_row(1, {r.letters.back()}));
  return out;
}

TensorWord diamond_r(const TensorWord& b, int i, Diamond d, int n) {
  if (i < 1 || i >= b.size()) throw DomainError("R index out of range");
  const Row& left = b.at(i + 1);
  const Row& right = b.at(i);
  if (left.width == right.width) return b;
  const int N = 2 * n;
  TensorWord v = concat(psi_row(left, d, n), psi_row(right, d, n));
  auto swap = [&](std::size_t k) {
    auto [x, y] = r_matrix(v.factors[k], v.factors[k + 1], N);
    v.factors[k] = x;
    v.factors[k + 1] = y;
  };
  swap(1);
  swap(0);
  swap(2);
  swap(1);
  TensorWord out = b;
  out.at(i + 1) = psi_row_inverse(v.factors[0], v.factors[1], d, n);
  out.at(i) = psi_row_inverse(v.factors[2], v.factors[3], d, n);
  return out;
}

TensorWord theta_swap(const TensorWord& b, int i, Diamond d, int n) { return diamond_r(b, i, d, n); }

TensorWord theta_split(const TensorWord& b, Diamond d) { return right_split(b, d); }

TensorWord vxr_inverse(const TensorWord& c, const Tableau& Z, const Partition& lam, const std::vector<int>& nu,
                       Diamond d, int n) {
  for (const auto& b : enumerate_highest_weight(nu, d, lam, n)) {
    VxrOutput v = vxr(b, d, n);
    if (v.c == c && v.Z == Z) return b;
  }
  throw DomainError("(c, Z) has no preimage under vxr");
}

std::string render_r_plus(const RPlusResult& r) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    for (std::size_t k = 0; k < row.factors.size(); ++k) {
      if (k) os << (k % 2 == 0 ? "  " : " ");
      os << to_string(row.factors[k]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace xmk
