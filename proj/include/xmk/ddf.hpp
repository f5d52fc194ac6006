#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xmk/tableau.hpp"
#include "xmk/word.hpp"

namespace xmk {

enum class StepKind { Add, Remove, Stay };

struct ShapeStep {
  StepKind kind = StepKind::Stay;
  int row = 0;  // 1-based; unused for Stay
  friend bool operator==(const ShapeStep&, const ShapeStep&) = default;
};

/// λ(0) = ∅, ..., λ(L), one step per letter b_1, ..., b_L.
struct ShapeSequence {
  std::vector<Partition> shapes;
  std::vector<ShapeStep> steps;
  friend bool operator==(const ShapeSequence&, const ShapeSequence&) = default;
};

/// Standard, oscillating or Motzkin tableau of a word of single letters.
/// Throws DomainError when some prefix leaves the partitions.
ShapeSequence word_to_shape_sequence(const TensorWord& b, Diamond d);
TensorWord shape_sequence_to_word(const ShapeSequence& seq, Diamond d);
ShapeSequence sequence_from_steps(const std::vector<ShapeStep>& steps);

/// Involution on a subset of {1..L}: 2-cycles (a, i) with a < i, and fixed points.
struct Involution {
  std::vector<std::pair<int, int>> cycles;
  std::vector<int> fixed;

  void normalize();
  std::vector<int> domain() const;
  int image(int a) const;
  bool contains(int a) const;
  /// Pairs (a, I(a)) for a in the domain, increasing in a.
  std::vector<std::pair<int, int>> graph() const;
  /// "(2,4)(5)(1,7)": cycles and fixed points ordered by their largest element.
  std::string to_string() const;
  friend bool operator==(const Involution&, const Involution&) = default;
};

Involution involution_from_graph(const std::vector<std::pair<int, int>>& graph);

/// (T, I) from b, for the box and horizontal domino families.
std::pair<Tableau, Involution> ddf_forward(const TensorWord& b, Diamond d);

/// Inverse of ddf_forward on words of length L.
TensorWord ddf_inverse(const Tableau& T, const Involution& I, int L, Diamond d);

/// S by column insertion of the biword of I.
Tableau burge_column(const Involution& I);

struct BurgeStep {
  int a = 0;
  int i = 0;
  Tableau inserted;  // S'_j; equal to the previous S for fixed points
  Tableau result;    // S_j
};

/// S by the pair algorithm; returns the steps S'_j, S_j.
std::vector<BurgeStep> burge_pairs(const Involution& I);

/// burge_column, checked against burge_pairs.
Tableau burge(const Involution& I);

/// Inverse Burge correspondence.
Involution burge_inverse(const Tableau& S);

struct DdfData {
  TensorWord c;
  Tableau T;
  Involution I;
  Tableau S;
  Biword Iw0;  // pairs (-a, I(a)); hatted letters are stored negated
  Tableau P;
  Tableau Q;
  Partition lambda;
  Partition mu;
  Partition tau;
};

/// Yamanouchi word whose letter i is the row of i in the standard tableau P.
TensorWord yamanouchi_word(const Tableau& P, int L);

/// The full DDF map b -> (c, T ⊗ S).
DdfData ddf_map(const TensorWord& b, Diamond d);

/// Recovers b from (c, T, S). Throws DomainError when there is no preimage.
TensorWord ddf_map_inverse(const TensorWord& c, const Tableau& T, const Tableau& S, Diamond d);

/// DDF data of every right factor b_i ... b_1, i = 1..L.
std::vector<DdfData> ddf_trace(const TensorWord& b, Diamond d);

/// Aligned table with columns i, T, I, S, Iw0, P, Q.
std::string render_ddf_trace(const std::vector<DdfData>& rows);

struct TildeTriple {
  Tableau P;
  Tableau Q;
  Tableau T;
};

/// (P~, Q~, T~) from the vxr output of a word of single letters at rank n.
TildeTriple tilde_from_vxr(const TensorWord& b, Diamond d, int n);

}  // namespace xmk
