#include "checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "xmk/crystal.hpp"
#include "xmk/energy.hpp"
#include "xmk/highest_weight.hpp"
#include "xmk/virtual_vxr.hpp"
#include "xmk/xk.hpp"

namespace xmk::check {

void Result::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  if (failures == 0) first_failure = what;
  ++failures;
}

std::string Result::summary() const {
  std::string s = std::to_string(cases - failures) + "/" + std::to_string(cases);
  if (failures) s += " first failure: " + first_failure;
  return s;
}

Row random_row(std::mt19937& rng, RowKind kind, int width, int N) {
  std::uniform_int_distribution<int> letter(1, N);
  std::vector<int> v(static_cast<std::size_t>(width));
  for (int& x : v) x = letter(rng);
  if (kind == RowKind::Plain) {
    std::sort(v.begin(), v.end());
    return plain_row(v);
  }
  std::sort(v.rbegin(), v.rend());
  return dual_row(v);
}

TensorWord random_type_a_word(std::mt19937& rng, int factors, int max_width, int N) {
  std::uniform_int_distribution<int> width(1, max_width), coin(0, 1);
  TensorWord w;
  for (int k = 0; k < factors; ++k)
    w.factors.push_back(random_row(rng, coin(rng) ? RowKind::Plain : RowKind::Dual, width(rng), N));
  return w;
}

int hook_length_count(const Partition& p) {
  Partition c = p.conjugate();
  long num = 1, den = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  for (int r = 0; r < p.length(); ++r)
    for (int j = 0; j < p[r]; ++j) den *= (p[r] - j - 1) + (c[j] - r - 1) + 1;
  return static_cast<int>(num / den);
}

namespace {

void fill_skew(const Partition& inner, const Partition& outer, const std::vector<int>& letters,
               std::vector<std::vector<int>>& grid, std::vector<Tableau>& out) {
  int count = outer.size() - inner.size();
  if (count == 0) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < static_cast<int>(grid.size()); ++r)
      rows.emplace_back(grid[static_cast<std::size_t>(r)].begin() + inner[r], grid[static_cast<std::size_t>(r)].end());
    out.emplace_back(inner, rows);
    return;
  }
  int x = letters[static_cast<std::size_t>(count - 1)];
  for (int r = 0; r < outer.length(); ++r) {
    if (!outer.is_removable(r) || outer[r] <= inner[r]) continue;
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(outer[r] - 1)] = x;
    fill_skew(inner, outer.remove_cell(r), letters, grid, out);
  }
}

void extend_shapes(const Partition& p, int extra, std::set<Partition>& out) {
  if (extra == 0) {
    out.insert(p);
    return;
  }
  for (int r = 0; r <= p.length(); ++r)
    if (p.is_addable(r)) extend_shapes(p.add_cell(r), extra - 1, out);
}

void build_involutions(std::vector<int> rest, Involution cur, std::vector<Involution>& out) {
  if (rest.empty()) {
    cur.normalize();
    out.push_back(cur);
    return;
  }
  int a = rest.front();
  rest.erase(rest.begin());
  Involution fixed = cur;
  fixed.fixed.push_back(a);
  build_involutions(rest, fixed, out);
  for (std::size_t k = 0; k < rest.size(); ++k) {
    Involution paired = cur;
    paired.cycles.emplace_back(a, rest[k]);
    std::vector<int> left = rest;
    left.erase(left.begin() + static_cast<long>(k));
    build_involutions(left, paired, out);
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> s;
    for (int j = 0; j < n; ++j)
      if (pick[static_cast<std::size_t>(j)]) s.push_back(j + 1);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    if (!std::binary_search(s.begin(), s.end(), j)) out.push_back(j);
  return out;
}

Partition lambda_of(const TensorWord& b, int n) { return weight_to_partition(weight_diamond(b, n)); }

}  // namespace

std::vector<Tableau> skew_fillings(const Partition& inner, const Partition& outer, const std::vector<int>& letters) {
  std::vector<std::vector<int>> grid;
  for (int r = 0; r < outer.length(); ++r) grid.emplace_back(static_cast<std::size_t>(outer[r]), 0);
  std::vector<Tableau> out;
  fill_skew(inner, outer, letters, grid, out);
  return out;
}

std::vector<Partition> outer_shapes(const Partition& inner, int extra) {
  std::set<Partition> s;
  extend_shapes(inner, extra, s);
  return {s.begin(), s.end()};
}

std::vector<Involution> involutions(int m) {
  std::vector<int> pts(static_cast<std::size_t>(m));
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<Involution> out;
  build_involutions(pts, Involution{}, out);
  return out;
}

std::vector<SkewInput> skew_inputs(int max_letters) {
  std::vector<SkewInput> out;
  for (const auto& alpha : partitions_up_to(2))
    for (int t = 0; t <= max_letters; ++t)
      for (int u = 0; t + u <= max_letters; ++u)
        for (int k = 0; t + u + k <= max_letters; ++k)
          for (const auto& tv : subsets(t + k, t))
            for (const auto& uv : subsets(u + k, u)) {
              std::vector<int> wv = complement(t + k, tv), wp = complement(u + k, uv);
              std::vector<int> perm = wv;
              std::vector<Biword> ws;
              do {
                Biword w;
                for (int j = 0; j < k; ++j) w.pairs.emplace_back(wp[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(j)]);
                ws.push_back(w);
              } while (std::next_permutation(perm.begin(), perm.end()));
              for (const auto& beta : outer_shapes(alpha, t))
                for (const auto& T : skew_fillings(alpha, beta, tv))
                  for (const auto& gamma : outer_shapes(alpha, u))
                    for (const auto& U : skew_fillings(alpha, gamma, uv))
                      for (const auto& w : ws) out.push_back({T, U, w});
            }
  return out;
}

std::vector<TensorWord> all_highest_weight(Diamond d, int L, int n) {
  std::vector<TensorWord> out;
  std::vector<int> nu(static_cast<std::size_t>(L), 1);
  for (const auto& lam : partitions_up_to(L))
    for (auto& b : enumerate_highest_weight(nu, d, lam, n)) out.push_back(std::move(b));
  return out;
}

Result yang_baxter_random(int triples, unsigned seed) {
  std::mt19937 rng(seed);
  Result res;
  for (int k = 0; k < triples; ++k) {
    int N = 4 + k % 3;
    TensorWord w = random_type_a_word(rng, 3, 2, N);
    res.record(yang_baxter_check(w, N), to_string(w));
  }
  return res;
}

Result leading_coenergy_vanishes(int max_width, int N) {
  Result res;
  std::vector<RowModule> mods;
  for (int s = 1; s <= max_width; ++s) {
    mods.push_back({RowKind::Plain, s});
    mods.push_back({RowKind::Dual, s});
  }
  for (const auto& a : mods)
    for (const auto& b : mods) {
      Row l = leading_row(a, N), r = leading_row(b, N);
      res.record(local_coenergy(l, r, N) == 0, to_string(l) + " | " + to_string(r));
    }
  return res;
}

Result coenergy_r_invariance(int samples, unsigned seed) {
  std::mt19937 rng(seed);
  Result res;
  for (int k = 0; k < samples; ++k) {
    int N = 4 + k % 3;
    TensorWord w = random_type_a_word(rng, 2, 3, N);
    HalfInteger h = local_coenergy_at(w, 1, N);
    TensorWord r = apply_r(w, 1, N);
    res.record(local_coenergy_at(r, 1, N) == h, "R " + to_string(w));
    std::uniform_int_distribution<int> idx(1, N - 1);
    int i = idx(rng);
    if (auto f = apply_f(w, i, type_a(N))) res.record(local_coenergy_at(*f, 1, N) == h, "f " + to_string(w));
  }
  return res;
}

Result dual_star_coenergy(int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    int N = L + 1;
    std::vector<int> w(static_cast<std::size_t>(L), 1);
    while (true) {
      TensorWord c;
      for (int x : w) c.factors.push_back(plain_row({x}));
      res.record(intrinsic_coenergy(c, N) == intrinsic_coenergy(star(dual(c), N), N), to_string(c));
      int k = L - 1;
      while (k >= 0 && w[static_cast<std::size_t>(k)] == N) w[static_cast<std::size_t>(k--)] = 1;
      if (k < 0) break;
      ++w[static_cast<std::size_t>(k)];
    }
  }
  return res;
}

Result block_coenergy_identity(Diamond d, int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    int n = L + 1;
    for (const auto& b : all_highest_weight(d, L, n)) {
      VxrOutput v = vxr(b, d, n);
      res.record(block_coenergy(v.dcheck, v.c, 2 * n) == L - lambda_of(b, n).size(), to_string(b));
    }
  }
  return res;
}

Result barred_letter_identity(Diamond d, int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    int n = L + 1;
    for (const auto& b : all_highest_weight(d, L, n)) {
      int barred = 0, empty = 0;
      for (const auto& x : b.letters()) {
        barred += x.kind == LetterKind::Barred;
        empty += x.kind == LetterKind::Empty;
      }
      res.record(L - lambda_of(b, n).size() == 2 * barred + empty, to_string(b));
    }
  }
  return res;
}

Result virtual_coenergy_agrees(Diamond d, int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    int n = L + 1;
    for (const auto& b : all_highest_weight(d, L, n))
      res.record(virtual_coenergy(b, d, n) == intrinsic_coenergy_diamond(b, d), to_string(b));
  }
  return res;
}

namespace {

long expected_image_size(Diamond d, int L, const Partition& lam) {
  long total = 0;
  for (const auto& tau : partitions_of(L))
    for (const auto& mu : partitions_of(L - lam.size()))
      if (diamond_tileable(mu, d)) total += hook_length_count(tau) * lr_coefficient(tau, lam, mu);
  return total;
}

}  // namespace

Result vxr_bijection(Diamond d, int max_len, bool round_trip) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    int n = L + 1;
    std::vector<int> nu(static_cast<std::size_t>(L), 1);
    for (const auto& lam : partitions_up_to(L)) {
      auto bs = enumerate_highest_weight(nu, d, lam, n);
      std::set<std::pair<TensorWord, Tableau>> image;
      for (const auto& b : bs) {
        VxrOutput v = vxr(b, d, n);
        std::vector<int> cw;
        for (const auto& x : v.c.letters()) cw.push_back(x.value);
        bool ok = is_yamanouchi(cw) && weight_to_partition(weight_type_a(v.c, n)) == v.tau &&
                  v.Z.outer() == v.mu && diamond_tileable(v.mu, d) && v.Z.is_semistandard();
        res.record(ok, "image " + to_string(b));
        image.insert({v.c, v.Z});
        if (round_trip) res.record(vxr_inverse(v.c, v.Z, lam, nu, d, n) == b, "inverse " + to_string(b));
      }
      res.record(image.size() == bs.size(), "injective at " + lam.to_string());
      res.record(static_cast<long>(bs.size()) == expected_image_size(d, L, lam), "cardinality at " + lam.to_string());
    }
  }
  return res;
}

Result vxr_agrees_with_ddf(Diamond d, int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    int n = L + 1;
    for (const auto& b : all_highest_weight(d, L, n)) {
      VxrOutput v = vxr(b, d, n);
      DdfData g = ddf_map(b, d);
      TildeTriple t = tilde_from_vxr(b, d, n);
      bool ok = t.P == g.P && t.Q == g.Q && t.T == g.T && v.c == g.c && v.tau == g.tau && v.mu == g.mu;
      res.record(ok, to_string(b));
    }
  }
  return res;
}

Result switches_match_specials(Diamond d, int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    int n = L + 1;
    for (const auto& b : all_highest_weight(d, L, n)) {
      VxrOutput v = vxr(b, d, n);
      GrowthDdf g = growth_ddf(word_to_shape_sequence(b, d));
      std::set<std::pair<int, int>> from_growth, from_r;
      for (auto [a, c] : g.array.specials)
        if (a + c > L + 1) from_growth.insert({a + c - L - 1, L + a - c});
      for (const auto& s : v.trace.switches) from_r.insert({s.round, s.factor});
      res.record(from_growth == from_r, to_string(b));
    }
  }
  return res;
}

Result ddf_bijection(Diamond d, int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L) {
    std::vector<int> nu(static_cast<std::size_t>(L), 1);
    for (const auto& lam : partitions_up_to(L)) {
      auto bs = enumerate_highest_weight(nu, d, lam, L + 1);
      std::set<std::tuple<TensorWord, Tableau, Tableau>> image;
      for (const auto& b : bs) {
        DdfData g = ddf_map(b, d);
        image.insert({g.c, g.T, g.S});
        res.record(ddf_map_inverse(g.c, g.T, g.S, d) == b, "inverse " + to_string(b));
        res.record(diamond_tileable(g.mu, d), "tileable " + to_string(b));
      }
      res.record(image.size() == bs.size(), "injective at " + lam.to_string());
      res.record(static_cast<long>(bs.size()) == expected_image_size(d, L, lam), "cardinality at " + lam.to_string());
    }
  }
  return res;
}

Result fixed_points_vs_even_rows(int max_points) {
  Result res;
  for (int m = 0; m <= max_points; ++m)
    for (const auto& I : involutions(m)) {
      Tableau S = burge(I);
      bool even = true;
      for (int r = 0; r < S.num_rows(); ++r) even = even && S.row_length(r) % 2 == 0;
      res.record(even == I.fixed.empty(), I.to_string());
      res.record(burge_inverse(S) == I, "inverse " + I.to_string());
    }
  return res;
}

Result local_rules_inverse(int max_size) {
  Result res;
  for (const auto& sigma : partitions_up_to(max_size)) {
    std::vector<Partition> below{sigma};
    for (int r = 0; r < sigma.length(); ++r)
      if (sigma.is_removable(r)) below.push_back(sigma.remove_cell(r));
    for (const auto& nu : below)
      for (const auto& rho : below) {
        auto [mu, special] = reverse_local_rule(nu, rho, sigma);
        res.record(forward_local_rule(mu, nu, rho, special) == sigma,
                   "reverse " + nu.to_string() + " " + rho.to_string() + " " + sigma.to_string());
      }
  }
  for (const auto& mu : partitions_up_to(max_size - 1)) {
    std::vector<Partition> above{mu};
    for (int r = 0; r <= mu.length(); ++r)
      if (mu.is_addable(r)) above.push_back(mu.add_cell(r));
    for (const auto& nu : above)
      for (const auto& rho : above)
        for (bool special : {false, true}) {
          if (special && !(nu == mu && rho == mu)) continue;
          Partition sigma = forward_local_rule(mu, nu, rho, special);
          res.record(reverse_local_rule(nu, rho, sigma) == std::make_pair(mu, special),
                     "forward " + mu.to_string() + " " + nu.to_string() + " " + rho.to_string());
        }
  }
  return res;
}

Result skew_rs_transposition(int max_letters) {
  Result res;
  for (const auto& in : skew_inputs(max_letters)) {
    auto [P, Q] = skew_rs(in.T, in.U, in.w);
    auto [P2, Q2] = skew_rs(in.U, in.T, in.w.inverse());
    std::string what = in.T.to_string() + " ; " + in.U.to_string();
    res.record(P2 == Q && Q2 == P, "swap " + what);
    GrowthSkewRs g = growth_skew_rs(in.T, in.U, in.w);
    GrowthSkewRs h = growth_skew_rs(in.U, in.T, in.w.inverse());
    res.record(g.P == P && g.Q == Q, "growth borders " + what);
    res.record(h.array == g.array.transposed(), "transposed array " + what);
  }
  return res;
}

Result growth_matches_ddf(Diamond d, int max_len) {
  Result res;
  for (int L = 1; L <= max_len; ++L)
    for (const auto& b : all_highest_weight(d, L, L + 1)) {
      DdfData g = ddf_map(b, d);
      GrowthDdf h = growth_ddf(word_to_shape_sequence(b, d));
      res.record(h.T == g.T && h.I == g.I && h.P == g.P && h.Q == g.Q, to_string(b));
    }
  return res;
}

Result rank_stability(Diamond d, const std::vector<std::vector<int>>& nus) {
  Result res;
  for (const auto& nu : nus) {
    int total = std::accumulate(nu.begin(), nu.end(), 0);
    int n = auto_rank(nu);
    for (const auto& lam : partitions_up_to(total))
      res.record(x_polynomial(d, nu, lam, n) == x_polynomial(d, nu, lam, n + 1),
                 composition_to_string(nu) + " " + lam.to_string());
  }
  return res;
}

Result lr_three_way(int max_size) {
  Result res;
  for (int k = 0; k <= max_size; ++k)
    for (const auto& tau : partitions_of(k))
      for (const auto& lam : partitions_up_to(k)) {
        if (!tau.contains(lam)) continue;
        for (const auto& mu : partitions_of(k - lam.size())) {
          long a = lr_coefficient(tau, lam, mu);
          res.record(a == lr_by_shape_mu(tau, lam, mu) && a == lr_by_products(tau, lam, mu),
                     tau.to_string() + " " + lam.to_string() + " " + mu.to_string());
        }
      }
  return res;
}

}  // namespace xmk::check
