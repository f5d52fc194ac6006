#pragma once

#include <vector>

#include "xmk/partition.hpp"
#include "xmk/word.hpp"

namespace xmk {

/// Default rank: one more than the number of letters.
int auto_rank(const std::vector<int>& nu);

/// Throws DomainError when n is below the large-rank bound for nu.
void require_rank(const std::vector<int>& nu, int n);

/// Every right factor of the letter word has partition weight.
bool is_yamanouchi(const std::vector<int>& word);

/// Highest weight test for words of single letters via partial weights.
/// Requires n at least the number of letters.
bool is_diamond_highest_weight(const TensorWord& w, Diamond d, int n);

/// Classical highest weight elements of B^nu of weight lam. For Diamond::Empty
/// the rows are plain type A rows over 1..n; otherwise diamond rows at rank n.
/// Words of width-one factors use the partial weight test, others the crystal
/// raising operators.
std::vector<TensorWord> enumerate_highest_weight(const std::vector<int>& nu, Diamond d,
                                                 const Partition& lam, int n);

/// All elements of the row crystal of width s (every classical component).
std::vector<Row> row_elements(int s, Diamond d, int n);

}  // namespace xmk
