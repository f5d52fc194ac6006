#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xmk/ddf.hpp"
#include "xmk/insertion.hpp"
#include "xmk/partition.hpp"
#include "xmk/tableau.hpp"

namespace xmk {

/// Shapes G[x][y], x over values 0..X, y over positions 0..Y. Square (a, b)
/// has corners G[a-1][b-1], G[a-1][b], G[a][b-1], G[a][b].
struct GrowthArray {
  std::vector<std::vector<Partition>> G;
  std::set<std::pair<int, int>> specials;

  int rows() const { return static_cast<int>(G.size()) - 1; }
  int cols() const { return G.empty() ? -1 : static_cast<int>(G.front().size()) - 1; }
  /// Swap the roles of values and positions.
  GrowthArray transposed() const;
  friend bool operator==(const GrowthArray&, const GrowthArray&) = default;
};

/// sigma from mu ⊂ nu, rho. Throws DomainError on an invalid corner configuration.
Partition forward_local_rule(const Partition& mu, const Partition& nu, const Partition& rho, bool special);

/// (mu, special) from nu, rho ⊂ sigma.
std::pair<Partition, bool> reverse_local_rule(const Partition& nu, const Partition& rho, const Partition& sigma);

struct GrowthDdf {
  GrowthArray array;
  Tableau T;
  Involution I;
  Tableau P;
  Tableau Q;
};

/// Shape array of a Motzkin or oscillating tableau placed on the antidiagonal:
/// reverse rules above it give (T, I), forward rules below it give (P, Q).
GrowthDdf growth_ddf(const ShapeSequence& seq);

/// Forward fill of skew Robinson-Schensted: T on the value border, U on the
/// position border, specials at the biletters of w. Letters are ranked within
/// each alphabet.
struct GrowthSkewRs {
  GrowthArray array;
  Tableau P;
  Tableau Q;
};
GrowthSkewRs growth_skew_rs(const Tableau& T, const Tableau& U, const Biword& w);

/// Text grid: rows are positions, columns values; specials marked ⊗.
std::string render_growth(const GrowthArray& a);

}  // namespace xmk
