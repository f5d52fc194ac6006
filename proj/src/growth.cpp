#include "xmk/growth.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xmk {

namespace {

// Row of the single cell big/small; -1 when equal. Throws unless big covers small.
int cover_row(const Partition& small, const Partition& big) {
  if (small == big) return -1;
  if (!big.contains(small) || big.size() != small.size() + 1)
    throw DomainError(big.to_string() + " does not cover " + small.to_string());
  for (int r = 0; r < big.length(); ++r)
    if (big[r] != small[r]) return r;
  return -1;
}

Partition shape_below(const Tableau& t, int v) {
  std::vector<int> parts;
  for (int r = 0; r < t.num_rows(); ++r) {
    int len = t.inner()[r];
    for (int c = t.inner()[r]; c < t.row_length(r); ++c)
      if (t.at(r, c) <= v) ++len;
    parts.push_back(len);
  }
  return Partition(parts);
}

Tableau tableau_from_border(const std::vector<Partition>& chain, const std::vector<int>& letters) {
  Tableau t(chain.front(), {});
  for (std::size_t k = 1; k < chain.size(); ++k) {
    int r = cover_row(chain[k - 1], chain[k]);
    if (r >= 0) t.push_back(r, letters[k - 1]);
  }
  return t;
}

std::string glyph(const Partition& p) {
  if (p.empty()) return ".";
  std::string s;
  for (int x : p.parts()) s += x < 10 ? std::to_string(x) : "(" + std::to_string(x) + ")";
  return s;
}

}  // namespace

GrowthArray GrowthArray::transposed() const {
  GrowthArray t;
  int X = rows(), Y = cols();
  t.G.assign(static_cast<std::size_t>(Y + 1), std::vector<Partition>(static_cast<std::size_t>(X + 1)));
  for (int x = 0; x <= X; ++x)
    for (int y = 0; y <= Y; ++y) t.G[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = G[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  for (auto [a, b] : specials) t.specials.emplace(b, a);
  return t;
}

Partition forward_local_rule(const Partition& mu, const Partition& nu, const Partition& rho, bool special) {
  int s = cover_row(mu, nu), t = cover_row(mu, rho);
  if (special) {
    if (s >= 0 || t >= 0) throw DomainError("a special square needs nu = rho = mu");
    return mu.add_cell(0);
  }
  if (s >= 0 && s == t) return nu.add_cell(s + 1);
  return nu.union_with(rho);
}

std::pair<Partition, bool> reverse_local_rule(const Partition& nu, const Partition& rho, const Partition& sigma) {
  int s = cover_row(rho, sigma), t = cover_row(nu, sigma);
  if (s >= 0 && s == t) {
    if (s == 0) return {nu, true};
    return {nu.remove_cell(s - 1), false};
  }
  Partition mu = nu.intersection_with(rho);
  cover_row(mu, nu);
  cover_row(mu, rho);
  return {mu, false};
}

GrowthDdf growth_ddf(const ShapeSequence& seq) {
  const int L = static_cast<int>(seq.shapes.size()) - 1;
  for (int k = 1; k <= L; ++k) {
    const auto& a = seq.shapes[static_cast<std::size_t>(k - 1)];
    const auto& b = seq.shapes[static_cast<std::size_t>(k)];
    if (a != b && a.size() + 1 != b.size() && b.size() + 1 != a.size())
      throw DomainError("antidiagonal is not a shape sequence");
  }
  GrowthDdf out;
  auto& A = out.array;
  A.G.assign(static_cast<std::size_t>(L + 1), std::vector<Partition>(static_cast<std::size_t>(L + 1)));
  auto at = [&](int x, int y) -> Partition& { return A.G[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
  for (int k = 0; k <= L; ++k) at(k, L - k) = seq.shapes[static_cast<std::size_t>(k)];

  // squares whose top-right and bottom-left corners lie on the antidiagonal
  for (int a = 1; a <= L; ++a) {
    int b = L + 1 - a;
    const Partition& nu = at(a - 1, b);
    const Partition& rho = at(a, b - 1);
    if (nu == rho) {
      at(a - 1, b - 1) = nu;
      A.specials.emplace(a, b);
    } else {
      at(a - 1, b - 1) = nu.intersection_with(rho);
    }
  }
  for (int sum = L; sum >= 2; --sum) {
    for (int a = 1; a < sum; ++a) {
      int b = sum - a;
      auto [mu, special] = reverse_local_rule(at(a - 1, b), at(a, b - 1), at(a, b));
      at(a - 1, b - 1) = mu;
      if (special) A.specials.emplace(a, b);
    }
  }
  // mirror the upper specials across the antidiagonal
  std::set<std::pair<int, int>> upper = A.specials;
  for (auto [a, b] : upper) A.specials.emplace(L + 1 - b, L + 1 - a);
  for (int sum = L + 1; sum <= 2 * L; ++sum) {
    for (int a = std::max(1, sum - L); a <= std::min(L, sum - 1); ++a) {
      int b = sum - a;
      at(a, b) = forward_local_rule(at(a - 1, b - 1), at(a - 1, b), at(a, b - 1), A.specials.count({a, b}) > 0);
    }
  }

  std::vector<Partition> left, right, bottom;
  std::vector<int> values, positions;
  for (int x = 0; x <= L; ++x) {
    left.push_back(at(x, 0));
    right.push_back(at(x, L));
  }
  for (int y = 0; y <= L; ++y) bottom.push_back(at(L, y));
  for (int k = 1; k <= L; ++k) {
    values.push_back(k);
    positions.push_back(-(L + 1 - k));
  }
  out.T = tableau_from_border(left, values);
  out.P = tableau_from_border(right, values);
  out.Q = tableau_from_border(bottom, positions);
  std::vector<std::pair<int, int>> graph;
  for (auto [a, b] : upper) {
    int p = L + 1 - b;
    graph.emplace_back(p, a);
    if (p != a) graph.emplace_back(a, p);
  }
  out.I = involution_from_graph(graph);
  return out;
}

GrowthSkewRs growth_skew_rs(const Tableau& T, const Tableau& U, const Biword& w) {
  if (T.inner() != U.inner()) throw DomainError("T and U need a common inner shape");
  std::vector<int> va = T.letters(), pa = U.letters();
  for (auto [p, v] : w.pairs) {
    va.push_back(v);
    pa.push_back(p);
  }
  std::sort(va.begin(), va.end());
  std::sort(pa.begin(), pa.end());
  if (std::adjacent_find(va.begin(), va.end()) != va.end() || std::adjacent_find(pa.begin(), pa.end()) != pa.end())
    throw DomainError("repeated letter in skew RS input");
  const int X = static_cast<int>(va.size()), Y = static_cast<int>(pa.size());
  GrowthSkewRs out;
  auto& A = out.array;
  A.G.assign(static_cast<std::size_t>(X + 1), std::vector<Partition>(static_cast<std::size_t>(Y + 1)));
  auto at = [&](int x, int y) -> Partition& { return A.G[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
  auto rank = [](const std::vector<int>& v, int x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin()) + 1;
  };
  for (auto [p, v] : w.pairs) A.specials.emplace(rank(va, v), rank(pa, p));
  at(0, 0) = T.inner();
  for (int x = 1; x <= X; ++x) at(x, 0) = shape_below(T, va[static_cast<std::size_t>(x - 1)]);
  for (int y = 1; y <= Y; ++y) at(0, y) = shape_below(U, pa[static_cast<std::size_t>(y - 1)]);
  for (int a = 1; a <= X; ++a)
    for (int b = 1; b <= Y; ++b)
      at(a, b) = forward_local_rule(at(a - 1, b - 1), at(a - 1, b), at(a, b - 1), A.specials.count({a, b}) > 0);
  std::vector<Partition> right, bottom;
  for (int x = 0; x <= X; ++x) right.push_back(at(x, Y));
  for (int y = 0; y <= Y; ++y) bottom.push_back(at(X, y));
  out.P = tableau_from_border(right, va);
  out.Q = tableau_from_border(bottom, pa);
  return out;
}

std::string render_growth(const GrowthArray& a) {
  const int X = a.rows(), Y = a.cols();
  std::size_t w = 1;
  for (const auto& col : a.G)
    for (const auto& p : col) w = std::max(w, glyph(p).size());
  std::ostringstream os;
  for (int y = 0; y <= Y; ++y) {
    for (int x = 0; x <= X; ++x) {
      std::string g = glyph(a.G[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      os << std::string(w - g.size(), ' ') << g;
      if (x < X) os << "  ";
    }
    os << '\n';
    if (y == Y) break;
    for (int x = 0; x <= X; ++x) {
      os << std::string(w, ' ');
      if (x < X) os << (a.specials.count({x + 1, y + 1}) ? " \xE2\x8A\x97" : "  ");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace xmk
