#pragma once

#include <string>
#include <vector>

#include "xmk/poly.hpp"
#include "xmk/tableau.hpp"
#include "xmk/word.hpp"

namespace xmk {

/// Virtual image of one diamond row: dual row ⊗ plain row of equal width, rank N = 2n.
TensorWord psi_row(const Row& x, Diamond d, int n);

/// Inverse of psi_row on its image; throws DomainError off the image.
Row psi_row_inverse(const Row& dual_part, const Row& plain_part, Diamond d, int n);

/// Factorwise virtual image: every diamond factor becomes two type A factors.
TensorWord psi(const TensorWord& b, Diamond d, int n);

/// Primed image: R applied inside each virtual block.
TensorWord psi_prime(const TensorWord& b, Diamond d, int n);

/// Recovers b from psi(b). Factors are paired left to right.
TensorWord psi_inverse(const TensorWord& v, Diamond d, int n);

enum class RPlusSchedule {
  Parallel,    // every plain ⊗ dual pair swaps at once in each round
  Sequential,  // one leftmost swap at a time
};

/// Position of a switch N ⊗ N∨ <- 1∨ ⊗ 1: the round of the swap and
/// the letter position (counted from the right) of its plain letter afterwards.
struct RPlusSwitch {
  int round = 0;
  int factor = 0;
};

struct RPlusResult {
  TensorWord dcheck;
  TensorWord c;
  std::vector<TensorWord> rows;  // first is the input, last is dcheck ⊗ c
  std::vector<RPlusSwitch> switches;
};

/// Moves every plain factor right past every dual factor by adjacent R-matrices.
RPlusResult r_plus(const TensorWord& v, int N, RPlusSchedule schedule = RPlusSchedule::Parallel);

/// Dual letters of dcheck split by alphabet, each with its position from the right.
struct SplitLetter {
  int position = 0;
  int value = 0;
};

struct VxrOutput {
  TensorWord c;
  Tableau Z;
  Partition tau;
  Partition mu;
  TensorWord dcheck;
  std::vector<SplitLetter> dplus;
  std::vector<SplitLetter> dminus;
  HalfInteger grading_lhs;  // 2 D◇(b)
  HalfInteger grading_rhs;  // |L| - |λ| + 2 D∅(c)
  RPlusResult trace;
};

/// The VXR map b -> (c, Z). Verifies the highest weight property of d-, the
/// tileability of mu and the grading identity; throws std::logic_error on failure.
VxrOutput vxr(const TensorWord& b, Diamond d, int n);

/// Preimage of (c, Z) under vxr by matching over P_◇(B^nu, lam). Throws
/// DomainError when there is none.
TensorWord vxr_inverse(const TensorWord& c, const Tableau& Z, const Partition& lam, const std::vector<int>& nu,
                       Diamond d, int n);

/// Intrinsic coenergy of a diamond word. Width-one words use the local tables;
/// otherwise half the type A coenergy of the virtual image.
HalfInteger diamond_coenergy(const TensorWord& b, Diamond d, int n);

/// Half the type A coenergy of psi(b), for any widths.
HalfInteger virtual_coenergy(const TensorWord& b, Diamond d, int n);

/// Coenergy of dcheck ⊗ c as a two-block product: local coenergies summed
/// over the swaps moving every dual factor right past every plain factor.
HalfInteger block_coenergy(const TensorWord& dcheck, const TensorWord& c, int N);

/// Splits the rightmost factor. Type A rows lose their last letter; diamond rows
/// split as u ⊗ x, or 1- ⊗ 1 on the zero-length component.
TensorWord right_split(const TensorWord& w, Diamond d);

/// R-matrix of diamond factors at tensor positions i+1 and i, through the virtual crystal.
TensorWord diamond_r(const TensorWord& b, int i, Diamond d, int n);

/// theta for an exchange of positions i+1 and i.
TensorWord theta_swap(const TensorWord& b, int i, Diamond d, int n);
/// theta for splitting the rightmost factor.
TensorWord theta_split(const TensorWord& b, Diamond d);

/// One line per round of an R+ computation, factors grouped in pairs.
std::string render_r_plus(const RPlusResult& r);

}  // namespace xmk
