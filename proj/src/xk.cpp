#include "xmk/xk.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "xmk/energy.hpp"
#include "xmk/highest_weight.hpp"
#include "xmk/insertion.hpp"
#include "xmk/virtual_vxr.hpp"
#include "xmk/word.hpp"

namespace xmk {

namespace {

struct SkewFill {
  const Partition& tau;
  const Partition& lam;
  std::vector<int> content;  // remaining letters of each value
  std::vector<int> used;     // letters placed so far, for the lattice condition
  std::vector<std::vector<int>> rows;
  long count = 0;

  SkewFill(const Partition& t, const Partition& l, const Partition& m) : tau(t), lam(l) {
    content = m.parts();
    used.assign(content.size(), 0);
    for (int r = 0; r < tau.length(); ++r) rows.emplace_back(static_cast<std::size_t>(tau[r]), 0);
  }

  // cells in reading order: rows top to bottom, each right to left
  void fill(int r, int c) {
    if (r == tau.length()) {
      ++count;
      return;
    }
    if (c < lam[r]) {
      fill(r + 1, tau[r + 1] - 1);
      return;
    }
    int hi = c + 1 < tau[r] ? rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]
                            : static_cast<int>(content.size());
    int lo = r > 0 && c >= lam[r - 1] ? rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1 : 1;
    for (int k = lo; k <= hi; ++k) {
      auto idx = static_cast<std::size_t>(k - 1);
      if (content[idx] == 0) continue;
      if (k > 1 && used[idx] + 1 > used[idx - 1]) continue;
      --content[idx];
      ++used[idx];
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k;
      if (c == 0)
        fill(r + 1, tau[r + 1] - 1);
      else
        fill(r, c - 1);
      ++content[idx];
      --used[idx];
    }
  }
};

bool sizes_match(const Partition& tau, const Partition& lam, const Partition& mu) {
  return tau.contains(lam) && tau.size() == lam.size() + mu.size();
}

void ssyt_fill(const Partition& shape, int max_letter, std::vector<std::vector<int>>& rows, int r, int c,
               std::vector<Tableau>& out) {
  if (r == shape.length()) {
    out.emplace_back(rows);
    return;
  }
  if (c == shape[r]) {
    ssyt_fill(shape, max_letter, rows, r + 1, 0, out);
    return;
  }
  int lo = c > 0 ? rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] : 1;
  if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
  for (int k = lo; k <= max_letter; ++k) {
    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k;
    ssyt_fill(shape, max_letter, rows, r, c + 1, out);
  }
}

void standard_fill(Partition shape, const std::vector<int>& alphabet, std::vector<std::vector<int>>& rows,
                   std::vector<Tableau>& out) {
  if (shape.empty()) {
    out.emplace_back(rows);
    return;
  }
  int letter = alphabet[static_cast<std::size_t>(shape.size() - 1)];
  for (int r = 0; r < shape.length(); ++r) {
    if (!shape.is_removable(r)) continue;
    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(shape[r] - 1)] = letter;
    standard_fill(shape.remove_cell(r), alphabet, rows, out);
  }
}

HalfInteger type_a_coenergy(const TensorWord& b, int N) {
  bool boxes = std::all_of(b.factors.begin(), b.factors.end(), [](const Row& r) { return r.width == 1; });
  if (!boxes) return intrinsic_coenergy(b, N);
  const int L = b.size();
  HalfInteger total = 0;
  for (int i = 1; i < L; ++i)
    if (letter_less(b.at(i).letters[0], b.at(i + 1).letters[0])) total += L - i;
  return total;
}

}  // namespace

long lr_coefficient(const Partition& tau, const Partition& lam, const Partition& mu) {
  if (!sizes_match(tau, lam, mu)) return 0;
  SkewFill f(tau, lam, mu);
  if (tau.empty()) return 1;
  f.fill(0, tau[0] - 1);
  return f.count;
}

long lr_by_shape_mu(const Partition& tau, const Partition& lam, const Partition& mu) {
  if (!sizes_match(tau, lam, mu)) return 0;
  long count = 0;
  for (const auto& Z : semistandard_tableaux(mu, std::max(tau.length(), 1))) {
    std::vector<int> wt = lam.parts();
    wt.resize(static_cast<std::size_t>(std::max(tau.length(), 1)), 0);
    std::vector<int> word = Z.row_word();
    bool ok = true;
    for (auto it = word.rbegin(); it != word.rend() && ok; ++it) {
      auto k = static_cast<std::size_t>(*it - 1);
      ++wt[k];
      ok = k == 0 || wt[k] <= wt[k - 1];
    }
    if (ok && Partition(wt) == tau) ++count;
  }
  return count;
}

long lr_by_products(const Partition& tau, const Partition& lam, const Partition& mu) {
  if (!sizes_match(tau, lam, mu)) return 0;
  const int total = tau.size();
  std::vector<std::vector<int>> prow;
  int next = 1;
  for (int r = 0; r < tau.length(); ++r) {
    prow.emplace_back();
    for (int c = 0; c < tau[r]; ++c) prow.back().push_back(next++);
  }
  Tableau P(prow);
  long count = 0;
  std::vector<bool> pick(static_cast<std::size_t>(total), false);
  std::fill(pick.begin(), pick.begin() + lam.size(), true);
  do {
    std::vector<int> a, b;
    for (int k = 0; k < total; ++k) (pick[static_cast<std::size_t>(k)] ? a : b).push_back(k + 1);
    auto ts = standard_tableaux(lam, a);
    auto ss = standard_tableaux(mu, b);
    for (const auto& T : ts) {
      std::vector<int> tw = T.row_word();
      for (const auto& S : ss) {
        std::vector<int> w = tw;
        std::vector<int> sw = S.row_word();
        w.insert(w.end(), sw.begin(), sw.end());
        if (product_tableau(w) == P) ++count;
      }
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_letter) {
  std::vector<std::vector<int>> rows;
  for (int x : shape.parts()) rows.emplace_back(static_cast<std::size_t>(x), 0);
  std::vector<Tableau> out;
  ssyt_fill(shape, max_letter, rows, 0, 0, out);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape, const std::vector<int>& alphabet) {
  if (static_cast<int>(alphabet.size()) != shape.size()) throw DomainError("alphabet size differs from the shape");
  std::vector<std::vector<int>> rows;
  for (int x : shape.parts()) rows.emplace_back(static_cast<std::size_t>(x), 0);
  std::vector<Tableau> out;
  standard_fill(shape, alphabet, rows, out);
  return out;
}

HalfGradedPoly x_polynomial(Diamond d, const std::vector<int>& nu, const Partition& lam, int n) {
  HalfGradedPoly p;
  for (const auto& b : enumerate_highest_weight(nu, d, lam, n))
    p.add_term(d == Diamond::Empty ? type_a_coenergy(b, n) : diamond_coenergy(b, d, n));
  return p;
}

HalfGradedPoly k_polynomial(Diamond d, const std::vector<int>& nu, const Partition& lam) {
  const int total = std::accumulate(nu.begin(), nu.end(), 0);
  const int diff = total - lam.size();
  HalfGradedPoly out;
  if (diff < 0) return out;
  std::map<Partition, HalfGradedPoly> xa;
  for (const auto& mu : partitions_of(diff)) {
    if (!diamond_tileable(mu, d)) continue;
    for (const auto& tau : partitions_of(total)) {
      long c = lr_coefficient(tau, lam, mu);
      if (c == 0) continue;
      auto it = xa.find(tau);
      if (it == xa.end()) it = xa.emplace(tau, x_polynomial(Diamond::Empty, nu, tau, auto_rank(nu))).first;
      out += c * it->second.substitute_square();
    }
  }
  return out.shifted(diff);
}

bool XkReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const XkEntry& e) { return e.pass; });
}

std::string XkReport::render() const {
  std::vector<std::vector<std::string>> cells{{"lambda", "X(t^2)", "K(t)", "status"}};
  for (const auto& e : entries)
    cells.push_back({e.lambda.to_string(), e.x_squared.to_string(), e.k.to_string(), e.pass ? "ok" : "FAIL"});
  std::vector<std::size_t> w(4, 0);
  for (auto& r : cells)
    for (std::size_t j = 0; j < 4; ++j) w[j] = std::max(w[j], r[j].size());
  std::ostringstream os;
  os << to_string(d) << " nu=" << composition_to_string(nu) << " rank=" << rank << '\n';
  for (auto& r : cells) {
    for (std::size_t j = 0; j < 4; ++j) {
      os << r[j];
      if (j < 3) os << std::string(w[j] - r[j].size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

XkReport verify_xk(Diamond d, const std::vector<int>& nu, int n) {
  if (d == Diamond::Empty) throw DomainError("verify needs the box or horizontal domino family");
  require_rank(nu, n);
  XkReport rep;
  rep.d = d;
  rep.nu = nu;
  rep.rank = n;
  const int total = std::accumulate(nu.begin(), nu.end(), 0);
  for (const auto& lam : partitions_up_to(total)) {
    XkEntry e;
    e.lambda = lam;
    e.x_squared = x_polynomial(d, nu, lam, n).substitute_square();
    e.k = k_polynomial(d, nu, lam);
    if (e.x_squared.is_zero() && e.k.is_zero()) continue;
    e.pass = e.x_squared == e.k;
    rep.entries.push_back(e);
  }
  std::sort(rep.entries.begin(), rep.entries.end(), [](const XkEntry& a, const XkEntry& b) {
    return a.lambda.size() != b.lambda.size() ? a.lambda.size() < b.lambda.size() : b.lambda < a.lambda;
  });
  return rep;
}

}  // namespace xmk
