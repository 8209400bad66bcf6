#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invschub/involution.hpp"
#include "invschub/partition.hpp"
#include "invschub/permutation.hpp"
#include "invschub/symfunc.hpp"

namespace invschub {

// Shifted tableau stored by rows; row i (1-based) occupies columns i .. i+len-1.
// Negative entries are marked.
struct ShiftedTableau {
  std::vector<std::vector<int>> rows;

  StrictPartition shape() const;
  bool empty() const { return rows.empty(); }
  std::size_t size() const;
  // Entries of column j from top to bottom.
  std::vector<int> column(int j) const;
  // Positive entries, strictly increasing along rows and columns, on a strict shape.
  bool is_increasing() const;
  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;
  friend auto operator<=>(const ShiftedTableau& a, const ShiftedTableau& b) { return a.rows <=> b.rows; }
};

// Cells hold nonempty sets sorted by -1 < 1 < -2 < 2 < ...
struct SetValuedShiftedTableau {
  std::vector<std::vector<std::vector<int>>> rows;

  StrictPartition shape() const;
  bool all_singletons() const;
  // The tableau with singleton cells, if it has them.
  std::optional<ShiftedTableau> as_tableau() const;
  // Standard of rank n: every selection is semistandard and |.| is a bijection onto [n].
  bool is_standard(int n) const;
  friend bool operator==(const SetValuedShiftedTableau&, const SetValuedShiftedTableau&) = default;
  friend auto operator<=>(const SetValuedShiftedTableau& a, const SetValuedShiftedTableau& b) {
    return a.rows <=> b.rows;
  }
};

// Position of x in the order -1 < 1 < -2 < 2 < ...
int marked_order_key(int x);

struct BumpResult {
  int q = 0;
  int dir = 0;
  std::vector<int> m;
  bool equal_last = false;  // the B2 branch fired
};
BumpResult bump(int p, int dir, const std::vector<int>& m);

struct InsertResult {
  int j = 0;
  int dir = 0;
  ShiftedTableau p;
  bool used_equal_last = false;  // some bump took the B2 branch
  bool rejected = false;         // some P' was not increasing
};
InsertResult insert(int p, const ShiftedTableau& tableau);

struct SHStep {
  int letter = 0;
  int j = 0;
  int dir = 0;
  ShiftedTableau p;
  SetValuedShiftedTableau q;
};

struct SHResult {
  ShiftedTableau p;
  SetValuedShiftedTableau q;
  std::vector<SHStep> trace;
  bool used_equal_last = false;
  bool rejected = false;
};
SHResult shifted_hecke_insert(const Word& a);

std::set<int> word_descents(const Word& a);
std::set<int> tableau_descents(const SetValuedShiftedTableau& q);
// Rows bottom to top, each left to right.
Word reading_word(const ShiftedTableau& p);

enum class KnuthOutcome { equivalent, closure_exhausted, state_limit };
struct KnuthSearch {
  KnuthOutcome outcome = KnuthOutcome::closure_exhausted;
  std::size_t states = 0;
};
// Breadth-first search over weak K-Knuth moves among words of length at most max_len
// (default: longer input + 2).  Only `equivalent` is definitive.
KnuthSearch weak_k_knuth_search(const Word& a, const Word& b, int max_len = -1,
                                std::size_t state_limit = 2000000);
bool weak_k_knuth_equivalent(const Word& a, const Word& b, int max_len = -1);
// Neighbours under weak K-Knuth moves (1)-(5), or (1)-(4) only.
std::vector<Word> k_knuth_neighbours(const Word& w, bool with_idempotent, int max_len);

struct ICKResult {
  Involution y;
  ShiftedTableau p;
  ShiftedTableau q;
  std::vector<SHStep> trace;
};
// PreconditionError unless a is an involution word.
ICKResult involution_ck_insert(const Word& a);

// Increasing shifted tableaux of the given shape with entries in [1, max_entry].
std::vector<ShiftedTableau> increasing_tableaux(const StrictPartition& shape, int max_entry);
// Standard set-valued shifted tableaux of rank n; brute force, for small cases.
std::vector<SetValuedShiftedTableau> standard_set_valued_tableaux(const StrictPartition& shape, int n);

// beta_{y,lambda}: increasing shifted P of shape lambda whose reading word is an involution word of y.
SymFunExpansion beta_coefficients(const Involution& y, int guard = 12, int jobs = 1);

// Classes of involution words under moves (1)-(4) against classes by insertion tableau.
struct CKMismatch {
  Involution y;
  Word a;
  Word b;
  bool same_class = false;  // same class under the moves
  bool same_p = false;      // same insertion tableau
};
std::vector<CKMismatch> conjecture_ck_search(int max_len, int alphabet);

std::string to_text(const ShiftedTableau& t);
std::string to_text(const SetValuedShiftedTableau& t);

}  // namespace invschub
