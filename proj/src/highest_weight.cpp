#include "xmk/highest_weight.hpp"

#include <algorithm>
#include <numeric>

#include "xmk/crystal.hpp"

namespace xmk {

int auto_rank(const std::vector<int>& nu) {
  return std::accumulate(nu.begin(), nu.end(), 0) + 1;
}

void require_rank(const std::vector<int>& nu, int n) {
  int letters = std::accumulate(nu.begin(), nu.end(), 0);
  if (n < letters)
    throw DomainError("rank " + std::to_string(n) + " is below the large-rank bound " +
                      std::to_string(letters));
}

bool is_yamanouchi(const std::vector<int>& word) {
  std::vector<int> wt;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int r = *it;
    if (r <= 0) return false;
    if (static_cast<int>(wt.size()) < r) wt.resize(static_cast<std::size_t>(r), 0);
    ++wt[static_cast<std::size_t>(r - 1)];
    if (r > 1 && wt[static_cast<std::size_t>(r - 1)] > wt[static_cast<std::size_t>(r - 2)]) return false;
  }
  return true;
}

namespace {

// Applies letter x to the partial weight; false when the result is not a partition
// or the letter is excluded from large-rank highest weight vectors.
bool step_weight(std::vector<int>& wt, const Letter& x, Diamond d, int n) {
  switch (x.kind) {
    case LetterKind::Empty: return d == Diamond::Box;
    case LetterKind::Zero: return false;
    case LetterKind::Dual: return false;
    case LetterKind::Plain:
    case LetterKind::Barred: {
      int i = x.value;
      if (i > n) return false;
      if (d == Diamond::HDomino && i == n) return false;
      if (d == Diamond::Empty && x.kind == LetterKind::Barred) return false;
      auto& c = wt[static_cast<std::size_t>(i - 1)];
      if (x.kind == LetterKind::Plain) {
        ++c;
        return i == 1 || c <= wt[static_cast<std::size_t>(i - 2)];
      }
      --c;
      return c >= 0 && (i == n || c >= wt[static_cast<std::size_t>(i)]);
    }
  }
  return false;
}

}  // namespace

bool is_diamond_highest_weight(const TensorWord& w, Diamond d, int n) {
  if (n < w.size()) throw DomainError("rank too small for the partial weight characterization");
  std::vector<int> wt(static_cast<std::size_t>(n), 0);
  for (int p = 1; p <= w.size(); ++p) {
    const Row& r = w.at(p);
    if (r.letters.size() != 1) throw DomainError("partial weight test needs single-letter factors");
    if (!step_weight(wt, r.letters.front(), d, n)) return false;
  }
  return true;
}

std::vector<Row> row_elements(int s, Diamond d, int n) {
  std::vector<Letter> alphabet;
  if (d == Diamond::Empty) {
    for (int i = 1; i <= n; ++i) alphabet.push_back(plain(i));
  } else {
    for (int i = 1; i <= n; ++i) alphabet.push_back(plain(i));
    if (d == Diamond::Box) alphabet.push_back(zero_letter());
    for (int i = n; i >= 1; --i) alphabet.push_back(barred(i));
  }
  std::vector<Row> out;
  std::vector<int> lengths;
  if (d == Diamond::Empty) {
    lengths.push_back(s);
  } else {
    for (int m = s; m >= 0; m -= d == Diamond::Box ? 1 : 2) lengths.push_back(m);
  }
  for (int m : lengths) {
    if (m == 0) {
      out.push_back(diamond_row(s, {empty_letter()}));
      continue;
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
      std::vector<Letter> letters;
      int zeros = 0;
      for (auto k : idx) {
        letters.push_back(alphabet[k]);
        if (alphabet[k].kind == LetterKind::Zero) ++zeros;
      }
      if (zeros <= 1) {
        if (d == Diamond::Empty) {
          Row r{RowKind::Plain, s, letters};
          out.push_back(r);
        } else {
          out.push_back(diamond_row(s, letters));
        }
      }
      // next weakly increasing index vector
      int k = m - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] == alphabet.size() - 1) --k;
      if (k < 0) break;
      auto v = idx[static_cast<std::size_t>(k)] + 1;
      for (int j = k; j < m; ++j) idx[static_cast<std::size_t>(j)] = v;
    }
  }
  return out;
}

namespace {

void dfs_letters(std::vector<Letter>& word, std::vector<int>& wt, int remaining, Diamond d, int n,
                 const Partition& lam, std::vector<TensorWord>& out) {
  if (remaining == 0) {
    if (weight_to_partition(wt) == lam) {
      std::vector<Letter> textual(word.rbegin(), word.rend());
      out.push_back(word_of_letters(textual, d == Diamond::Empty ? RowKind::Plain : RowKind::Diamond));
    }
    return;
  }
  int size = 0;
  for (int c : wt) size += c;
  // prune: the final size must be reachable
  if (size - remaining > lam.size() || size + remaining < lam.size()) return;
  int rows = 0;
  while (rows < n && wt[static_cast<std::size_t>(rows)] > 0) ++rows;
  std::vector<Letter> choices;
  for (int i = 1; i <= std::min(rows + 1, n); ++i) choices.push_back(plain(i));
  if (d != Diamond::Empty)
    for (int i = 1; i <= rows; ++i) choices.push_back(barred(i));
  if (d == Diamond::Box) choices.push_back(empty_letter());
  for (const auto& x : choices) {
    auto saved = wt;
    if (step_weight(wt, x, d, n)) {
      word.push_back(x);
      dfs_letters(word, wt, remaining - 1, d, n, lam, out);
      word.pop_back();
    }
    wt = saved;
  }
}

void dfs_rows(const std::vector<std::vector<Row>>& candidates, std::size_t k, std::vector<Row>& acc,
              const CrystalType& ct, Diamond d, int n, const Partition& lam,
              std::vector<TensorWord>& out) {
  TensorWord w;
  w.factors.assign(acc.rbegin(), acc.rend());
  if (k > 0 && !is_highest_weight(w, ct)) return;
  if (k == candidates.size()) {
    std::vector<int> wt = d == Diamond::Empty ? weight_type_a(w, n) : weight_diamond(w, n);
    if (is_partition_weight(wt) && weight_to_partition(wt) == lam) out.push_back(w);
    return;
  }
  for (const auto& r : candidates[k]) {
    acc.push_back(r);
    dfs_rows(candidates, k + 1, acc, ct, d, n, lam, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<TensorWord> enumerate_highest_weight(const std::vector<int>& nu, Diamond d,
                                                 const Partition& lam, int n) {
  require_rank(nu, n);
  std::vector<TensorWord> out;
  bool boxes = std::all_of(nu.begin(), nu.end(), [](int s) { return s == 1; });
  if (boxes) {
    std::vector<Letter> word;
    std::vector<int> wt(static_cast<std::size_t>(n), 0);
    dfs_letters(word, wt, static_cast<int>(nu.size()), d, n, lam, out);
  } else {
    CrystalType ct = d == Diamond::Empty ? type_a(n) : diamond_crystal(d, n);
    int total = std::accumulate(nu.begin(), nu.end(), 0);
    // letters of index above the total letter count never occur in a highest weight vector
    int alphabet_rank = std::min(n, total);
    std::vector<std::vector<Row>> candidates;
    for (int s : nu) candidates.push_back(row_elements(s, d, alphabet_rank));
    std::vector<Row> acc;
    dfs_rows(candidates, 0, acc, ct, d, n, lam, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace xmk
