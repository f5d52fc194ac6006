#pragma once

#include <optional>
#include <vector>

#include "xmk/word.hpp"

namespace xmk {

/// Classical crystal in which operators act. For type A `rank` is N (letters
/// 1..N, indices 1..N-1); for B and C it is n (indices 1..n).
struct CrystalType {
  enum Kind { A, B, C } kind = A;
  int rank = 0;

  int max_index() const { return kind == A ? rank - 1 : rank; }
};

inline CrystalType type_a(int N) { return {CrystalType::A, N}; }
/// Box words live in type B_n, horizontal-domino words in type C_n.
CrystalType diamond_crystal(Diamond d, int n);

int letter_phi(const CrystalType& ct, int i, const Letter& x);
int letter_epsilon(const CrystalType& ct, int i, const Letter& x);
std::optional<Letter> letter_f(const CrystalType& ct, int i, const Letter& x);
std::optional<Letter> letter_e(const CrystalType& ct, int i, const Letter& x);

/// Lowering operator; nullopt stands for the zero result.
std::optional<TensorWord> apply_f(const TensorWord& w, int i, const CrystalType& ct);
std::optional<TensorWord> apply_e(const TensorWord& w, int i, const CrystalType& ct);

int epsilon(const TensorWord& w, int i, const CrystalType& ct);
int phi(const TensorWord& w, int i, const CrystalType& ct);

/// Annihilated by every classical raising operator.
bool is_highest_weight(const TensorWord& w, const CrystalType& ct);

struct Raised {
  TensorWord highest;
  std::vector<int> path;  // raising indices in the order applied
};

Raised raise_to_highest(const TensorWord& w, const CrystalType& ct);

/// Replays the lowering steps that undo `path`, starting from `start`.
std::optional<TensorWord> lower_along(const TensorWord& start, const std::vector<int>& path,
                                      const CrystalType& ct);

/// Shape of a type A tensor factor: kind plus width.
struct RowModule {
  RowKind kind;
  int width;
  friend bool operator==(const RowModule&, const RowModule&) = default;
};

RowModule module_of(const Row& r);
std::vector<RowModule> modules_of(const TensorWord& w);

/// The leading element: plain 1^s or dual N∨^s.
Row leading_row(const RowModule& m, int N);

/// Image of w under the component isomorphism into a two-factor target
/// product. Throws DomainError when the target has no matching highest
/// weight vector.
TensorWord transport(const TensorWord& w, const std::vector<RowModule>& target, int N);

/// Virtual operators on a type A word of rank N = 2n: f_i f_{N-i} for i < n,
/// and f_n (box) or f_n^2 (horizontal domino) at i = n.
std::optional<TensorWord> virtual_f(const TensorWord& w, int i, Diamond d, int n);
std::optional<TensorWord> virtual_e(const TensorWord& w, int i, Diamond d, int n);

}  // namespace xmk
