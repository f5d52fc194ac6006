#pragma once

#include <utility>
#include <vector>

#include "xmk/poly.hpp"
#include "xmk/word.hpp"

namespace xmk {

/// Row reading word of a type A factor. A dual row j_1∨ ... j_s∨ is read as the
/// (N-1) x s rectangle whose k-th column is {1..N} minus j_k.
std::vector<int> reading_word(const Row& r, int N);

/// Cells of [read(left) read(right)] in columns beyond max(width(left), width(right)).
int e_statistic(const Row& left, const Row& right, int N);

/// Local coenergy of left ⊗ right, normalized to vanish on the leading element.
HalfInteger local_coenergy(const Row& left, const Row& right, int N);

/// Local coenergy on B^1_◇ ⊗ B^1_◇ for the box and horizontal domino families.
HalfInteger local_coenergy_diamond(const Letter& x, const Letter& y, Diamond d);

/// Intrinsic coenergy of a single diamond letter.
HalfInteger single_coenergy_diamond(const Letter& x, Diamond d);

/// Which algorithm computes an R-matrix.
enum class RStrategy { Auto, Table, Recursion, Transport };

/// Combinatorial R-matrix left ⊗ right -> right' ⊗ left'. Auto uses the box
/// tables, then the strip recursion for plain ⊗ dual, then transport.
std::pair<Row, Row> r_matrix(const Row& left, const Row& right, int N,
                             RStrategy strategy = RStrategy::Auto);

/// R-matrix on box factors i ⊗ j∨ and j∨ ⊗ i.
std::pair<Row, Row> r_box_table(const Row& left, const Row& right, int N);

/// R-matrix on B^t ⊗ B^{s∨} by stripping common N / N∨ letters and shuffling boxes.
std::pair<Row, Row> r_strip_recursion(const Row& left, const Row& right, int N);

/// R acting on tensor positions i+1 and i (counted from the right).
TensorWord apply_r(const TensorWord& w, int i, int N);

/// Local coenergy at tensor positions i+1 and i.
HalfInteger local_coenergy_at(const TensorWord& w, int i, int N);

/// Intrinsic coenergy of a type A tensor product of rows and dual rows.
HalfInteger intrinsic_coenergy(const TensorWord& w, int N);

/// Intrinsic coenergy of a word of B^1_◇ factors.
HalfInteger intrinsic_coenergy_diamond(const TensorWord& w, Diamond d);

/// Braid relation R1 R2 R1 = R2 R1 R2 and both exchange identities for the
/// local coenergy, evaluated on a three-factor element.
bool yang_baxter_check(const TensorWord& w, int N);

}  // namespace xmk
