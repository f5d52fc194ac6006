#pragma once

#include <map>
#include <string>
#include <vector>

#include "xmk/partition.hpp"
#include "xmk/poly.hpp"
#include "xmk/tableau.hpp"

namespace xmk {

/// Yamanouchi skew tableaux of shape tau/lam and content mu.
long lr_coefficient(const Partition& tau, const Partition& lam, const Partition& mu);

/// Same count as tau/lam-Yamanouchi tableaux of shape mu.
long lr_by_shape_mu(const Partition& tau, const Partition& lam, const Partition& mu);

/// Same count as pairs (T, S) of standard tableaux of shapes lam and mu on
/// complementary alphabets whose product is a fixed standard tableau of shape tau.
long lr_by_products(const Partition& tau, const Partition& lam, const Partition& mu);

/// Semistandard tableaux of the given shape with letters in 1..max_letter.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_letter);

/// Standard tableaux of the given shape on a sorted alphabet.
std::vector<Tableau> standard_tableaux(const Partition& shape, const std::vector<int>& alphabet);

/// One-dimensional sum over highest weight vectors of weight lam. For
/// Diamond::Empty the rows are type A rows of rank n.
HalfGradedPoly x_polynomial(Diamond d, const std::vector<int>& nu, const Partition& lam, int n);

/// t^{|L|-|lam|} Σ_tau X^A_{nu,tau}(t^2) Σ_{mu tileable} c^tau_{lam,mu}.
HalfGradedPoly k_polynomial(Diamond d, const std::vector<int>& nu, const Partition& lam);

struct XkEntry {
  Partition lambda;
  HalfGradedPoly x_squared;  // X(t^2)
  HalfGradedPoly k;
  bool pass = false;
};

struct XkReport {
  Diamond d = Diamond::Box;
  std::vector<int> nu;
  int rank = 0;
  std::vector<XkEntry> entries;
  bool all_pass() const;
  std::string render() const;
};

/// Compares X(t^2) with K(t) for every lam of size at most |nu| where either side is nonzero.
XkReport verify_xk(Diamond d, const std::vector<int>& nu, int n);

}  // namespace xmk
