#include "invschub/insertion.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "invschub/error.hpp"
#include "invschub/parallel.hpp"

namespace invschub {

int marked_order_key(int x) { return 2 * std::abs(x) - (x < 0 ? 1 : 0); }

namespace {

bool strict_shape(const std::vector<std::size_t>& lens) {
  for (std::size_t i = 0; i < lens.size(); ++i) {
    if (lens[i] == 0) return false;
    if (i > 0 && lens[i] >= lens[i - 1]) return false;
  }
  return true;
}

template <class Rows>
StrictPartition shape_of(const Rows& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return StrictPartition(parts);
}

bool key_less(int a, int b) { return marked_order_key(a) < marked_order_key(b); }

}  // namespace

StrictPartition ShiftedTableau::shape() const { return shape_of(rows); }

std::size_t ShiftedTableau::size() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

std::vector<int> ShiftedTableau::column(int j) const {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    int len = static_cast<int>(rows[i - 1].size());
    if (i <= j && j <= i + len - 1) out.push_back(rows[i - 1][j - i]);
  }
  return out;
}

bool ShiftedTableau::is_increasing() const {
  std::vector<std::size_t> lens;
  for (const auto& r : rows) lens.push_back(r.size());
  if (!strict_shape(lens)) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      if (rows[i][k] <= 0) return false;
      if (k > 0 && rows[i][k - 1] >= rows[i][k]) return false;
      // The cell above (i-1, same column) sits at index k+1 of the previous row.
      if (i > 0 && rows[i - 1][k + 1] >= rows[i][k]) return false;
    }
  }
  return true;
}

StrictPartition SetValuedShiftedTableau::shape() const { return shape_of(rows); }

bool SetValuedShiftedTableau::all_singletons() const {
  for (const auto& r : rows)
    for (const auto& c : r)
      if (c.size() != 1) return false;
  return true;
}

std::optional<ShiftedTableau> SetValuedShiftedTableau::as_tableau() const {
  if (!all_singletons()) return std::nullopt;
  ShiftedTableau t;
  for (const auto& r : rows) {
    t.rows.emplace_back();
    for (const auto& c : r) t.rows.back().push_back(c.front());
  }
  return t;
}

bool SetValuedShiftedTableau::is_standard(int n) const {
  std::vector<std::size_t> lens;
  for (const auto& r : rows) lens.push_back(r.size());
  if (!strict_shape(lens)) return false;
  std::vector<int> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      const auto& cell = rows[i][k];
      if (cell.empty()) return false;
      for (int v : cell) {
        if (v == 0) return false;
        seen.push_back(std::abs(v));
        if (k == 0 && v < 0) return false;  // diagonal entries are unmarked
      }
      auto lo = *std::min_element(cell.begin(), cell.end(), key_less);
      auto hi_prev = [&](const std::vector<int>& c) { return *std::max_element(c.begin(), c.end(), key_less); };
      // Distinct absolute values make weak and strict order agree.
      if (k > 0 && !key_less(hi_prev(rows[i][k - 1]), lo)) return false;
      if (i > 0 && !key_less(hi_prev(rows[i - 1][k + 1]), lo)) return false;
    }
  }
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(seen.size()) != n) return false;
  for (int t = 0; t < n; ++t)
    if (seen[t] != t + 1) return false;
  return true;
}

BumpResult bump(int p, int dir, const std::vector<int>& m) {
  if (p <= 0) throw PreconditionError("bump needs a positive entry");
  BumpResult r;
  r.dir = dir;
  r.m = m;
  if (m.empty() || p > m.back()) {  // B1
    r.m.push_back(p);
    return r;
  }
  if (p == m.back()) {  // B2
    r.equal_last = true;
    return r;
  }
  // B4: m_{i-1} < p <= m_i.
  std::size_t i = std::lower_bound(m.begin(), m.end(), p) - m.begin();
  if (i == 0) r.dir = 1;  // B5
  if (p == m[i]) {        // B6
    r.q = m[i + 1];
  } else {  // B7
    r.q = m[i];
    r.m[i] = p;
  }
  return r;
}

namespace {

std::optional<ShiftedTableau> replace_row(const ShiftedTableau& t, int j, const std::vector<int>& row) {
  ShiftedTableau out = t;
  int nrows = static_cast<int>(t.rows.size());
  if (j <= nrows) out.rows[j - 1] = row;
  else if (j == nrows + 1) out.rows.push_back(row);
  else return std::nullopt;
  return out;
}

std::optional<ShiftedTableau> replace_column(const ShiftedTableau& t, int j, const std::vector<int>& col) {
  ShiftedTableau out = t;
  int old = static_cast<int>(t.column(j).size());
  for (int k = 1; k <= old; ++k) out.rows[k - 1][j - k] = col[k - 1];
  if (static_cast<int>(col.size()) > old) {
    int k = old + 1;
    int nrows = static_cast<int>(t.rows.size());
    if (k <= nrows && k + static_cast<int>(t.rows[k - 1].size()) == j)
      out.rows[k - 1].push_back(col.back());
    else if (k == nrows + 1 && k == j)
      out.rows.push_back({col.back()});
    else
      return std::nullopt;
  }
  return out;
}

}  // namespace

InsertResult insert(int p, const ShiftedTableau& tableau) {
  if (p <= 0) throw PreconditionError("insert needs a positive entry");
  InsertResult res;
  res.p = tableau;
  while (p > 0) {
    ++res.j;
    std::optional<ShiftedTableau> next;
    BumpResult b;
    if (res.dir == 0) {
      int nrows = static_cast<int>(res.p.rows.size());
      std::vector<int> row = res.j <= nrows ? res.p.rows[res.j - 1] : std::vector<int>{};
      b = bump(p, 0, row);
      next = replace_row(res.p, res.j, b.m);
    } else {
      b = bump(p, 1, res.p.column(res.j));
      next = replace_column(res.p, res.j, b.m);
    }
    p = b.q;
    res.dir = b.dir;
    res.used_equal_last = res.used_equal_last || b.equal_last;
    if (next && next->is_increasing()) res.p = std::move(*next);
    else res.rejected = true;
  }
  return res;
}

namespace {

void add_to_cell(SetValuedShiftedTableau& q, int row, int col, int value) {
  while (static_cast<int>(q.rows.size()) < row) q.rows.emplace_back();
  auto& r = q.rows[row - 1];
  std::size_t idx = col - row;
  if (idx < r.size()) {
    auto& cell = r[idx];
    cell.insert(std::upper_bound(cell.begin(), cell.end(), value, key_less), value);
  } else if (idx == r.size()) {
    r.push_back({value});
  } else {
    throw InvariantViolation("recording position is not adjacent to the tableau");
  }
}

}  // namespace

SHResult shifted_hecke_insert(const Word& a) {
  SHResult res;
  for (std::size_t t = 0; t < a.size(); ++t) {
    int i = static_cast<int>(t) + 1;
    InsertResult ins = insert(a[t], res.p);
    res.p = std::move(ins.p);
    res.used_equal_last = res.used_equal_last || ins.used_equal_last;
    res.rejected = res.rejected || ins.rejected;
    StrictPartition lambda = res.p.shape();
    if (ins.dir == 0) {
      int len = static_cast<int>(res.p.rows.at(ins.j - 1).size());
      int c = ins.j + len - 1;
      int k = 1;
      for (int r = 1; r <= lambda.length(); ++r)
        if (r <= c && r + lambda[r - 1] - 1 >= c) k = r;
      add_to_cell(res.q, k, c, i);
    } else {
      int r = static_cast<int>(res.p.column(ins.j).size());
      add_to_cell(res.q, r, r + lambda[r - 1] - 1, -i);
    }
    INVSCHUB_CHECK(res.q.shape() == lambda, "recording tableau shape differs from insertion tableau");
    res.trace.push_back({a[t], ins.j, ins.dir, res.p, res.q});
  }
  return res;
}

std::set<int> word_descents(const Word& a) {
  std::set<int> out;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] > a[i + 1]) out.insert(static_cast<int>(i) + 1);
  return out;
}

std::set<int> tableau_descents(const SetValuedShiftedTableau& q) {
  struct Pos {
    int row, col;
  };
  std::map<int, Pos> where;
  int n = 0;
  for (std::size_t i = 0; i < q.rows.size(); ++i)
    for (std::size_t k = 0; k < q.rows[i].size(); ++k)
      for (int v : q.rows[i][k]) {
        where[v] = {static_cast<int>(i) + 1, static_cast<int>(i + k) + 1};
        n = std::max(n, std::abs(v));
      }
  auto has = [&](int v) { return where.count(v) > 0; };
  std::set<int> out;
  for (int i = 1; i < n; ++i) {
    bool d = false;
    if (has(i) && has(i + 1) && where[i].row < where[i + 1].row) d = true;
    if (has(i) && has(-(i + 1))) d = true;
    if (has(-i) && has(-(i + 1))) {
      const Pos& a = where[-i];
      const Pos& b = where[-(i + 1)];
      if (b.row < a.row) d = true;
      if (a.row == b.row && a.col != b.col) d = true;
    }
    if (d) out.insert(i);
  }
  return out;
}

Word reading_word(const ShiftedTableau& p) {
  Word out;
  for (auto it = p.rows.rbegin(); it != p.rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::vector<Word> k_knuth_neighbours(const Word& w, bool with_idempotent, int max_len) {
  std::vector<Word> out;
  std::size_t n = w.size();
  if (n >= 2 && w[0] != w[1]) {
    Word v = w;
    std::swap(v[0], v[1]);
    out.push_back(v);
  }
  for (std::size_t i = 0; i + 2 < n; ++i) {
    int x = w[i], y = w[i + 1], z = w[i + 2];
    auto between = [](int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); };
    if (between(z, x, y)) {  // acb ~ cab
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(v);
    }
    if (between(x, y, z)) {  // bac ~ bca
      Word v = w;
      std::swap(v[i + 1], v[i + 2]);
      out.push_back(v);
    }
    if (x == z && x != y) {  // aba ~ bab
      Word v = w;
      v[i] = v[i + 2] = y;
      v[i + 1] = x;
      out.push_back(v);
    }
  }
  if (with_idempotent) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (w[i] == w[i + 1]) {
        Word v = w;
        v.erase(v.begin() + static_cast<long>(i));
        out.push_back(v);
      }
    }
    if (static_cast<int>(n) < max_len) {
      for (std::size_t i = 0; i < n; ++i) {
        Word v = w;
        v.insert(v.begin() + static_cast<long>(i), w[i]);
        out.push_back(v);
      }
    }
  }
  return out;
}

KnuthSearch weak_k_knuth_search(const Word& a, const Word& b, int max_len, std::size_t state_limit) {
  if (max_len < 0) max_len = static_cast<int>(std::max(a.size(), b.size())) + 2;
  KnuthSearch res;
  if (static_cast<int>(a.size()) > max_len || static_cast<int>(b.size()) > max_len) return res;
  std::set<Word> seen{a};
  std::deque<Word> queue{a};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (w == b) {
      res.outcome = KnuthOutcome::equivalent;
      res.states = seen.size();
      return res;
    }
    for (Word& v : k_knuth_neighbours(w, true, max_len)) {
      if (seen.insert(v).second) {
        if (seen.size() > state_limit) {
          res.outcome = KnuthOutcome::state_limit;
          res.states = seen.size();
          return res;
        }
        queue.push_back(std::move(v));
      }
    }
  }
  res.states = seen.size();
  return res;
}

bool weak_k_knuth_equivalent(const Word& a, const Word& b, int max_len) {
  return weak_k_knuth_search(a, b, max_len).outcome == KnuthOutcome::equivalent;
}

ICKResult involution_ck_insert(const Word& a) {
  for (int v : a)
    if (v <= 0) throw PreconditionError("letters must be positive");
  if (!is_involution_word(a)) throw PreconditionError("not an involution word");
  ICKResult res;
  res.y = involution_of_word(a);
  SHResult sh = shifted_hecke_insert(a);
  if (sh.used_equal_last || sh.rejected)
    throw Falsification("involution word triggered B2 or a rejected bump");
  auto q = sh.q.as_tableau();
  if (!q) throw Falsification("recording tableau of an involution word has a non-singleton cell");
  Word rho = reading_word(sh.p);
  if (!is_involution_word(rho) || involution_of_word(rho) != res.y)
    throw Falsification("reading word of the insertion tableau is not an involution word of y");
  res.p = std::move(sh.p);
  res.q = std::move(*q);
  res.trace = std::move(sh.trace);
  return res;
}

namespace {

// Fills row by row, left to right, with each entry above its left and upper neighbours.
void for_each_increasing(const StrictPartition& shape, int max_entry,
                         const std::function<void(const ShiftedTableau&)>& visit) {
  ShiftedTableau t;
  int r = shape.length();
  for (int i = 0; i < r; ++i) t.rows.emplace_back(shape[i], 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < shape[i]; ++k) cells.emplace_back(i, k);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      visit(t);
      return;
    }
    auto [i, k] = cells[idx];
    int lo = 1;
    if (k > 0) lo = std::max(lo, t.rows[i][k - 1] + 1);
    if (i > 0) lo = std::max(lo, t.rows[i - 1][k + 1] + 1);
    // Room for the rest of the row and the cells below in the same column.
    int right = shape[i] - k - 1;
    int below = 0;
    for (int d = i + 1; d < r && k - (d - i) >= 0 && k - (d - i) < shape[d]; ++d) ++below;
    int hi = max_entry - std::max(right, below);
    for (int v = lo; v <= hi; ++v) {
      t.rows[i][k] = v;
      rec(idx + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<ShiftedTableau> increasing_tableaux(const StrictPartition& shape, int max_entry) {
  std::vector<ShiftedTableau> out;
  for_each_increasing(shape, max_entry, [&](const ShiftedTableau& t) { out.push_back(t); });
  return out;
}

std::vector<SetValuedShiftedTableau> standard_set_valued_tableaux(const StrictPartition& shape, int n) {
  std::vector<SetValuedShiftedTableau> out;
  int cells = shape.size();
  if (n < cells) return out;
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < shape.length(); ++i)
    for (int k = 0; k < shape[i]; ++k) pos.emplace_back(i, k);
  SetValuedShiftedTableau t;
  for (int i = 0; i < shape.length(); ++i) t.rows.emplace_back(shape[i]);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      if (t.is_standard(n)) out.push_back(t);
      return;
    }
    for (auto [i, k] : pos) {
      for (int s : {v, -v}) {
        auto& cell = t.rows[i][k];
        cell.push_back(s);
        // Values arrive in increasing absolute order, so the cell stays sorted.
        rec(v + 1);
        cell.pop_back();
      }
    }
  };
  rec(1);
  return out;
}

SymFunExpansion beta_coefficients(const Involution& y, int guard, int jobs) {
  int len = inv_length(y);
  if (len > guard) throw GuardExceeded("inv_length exceeds the enumeration guard");
  SymFunExpansion out;
  out.basis = Basis::schurP;
  if (y.is_identity()) {
    out.add(Partition(std::vector<int>{}), 1);
    return out;
  }
  int off = 1 - y.perm().min_support();
  Involution z(shift(y.perm(), off));
  int max_entry = z.perm().max_support() - 1;
  std::vector<StrictPartition> shapes = strict_partitions(len);
  auto counts = parallel_map(
      shapes,
      [&](const StrictPartition& lambda) {
        BigInt c = 0;
        for_each_increasing(lambda, max_entry, [&](const ShiftedTableau& t) {
          Word rho = reading_word(t);
          if (is_involution_word(rho) && involution_of_word(rho) == z) ++c;
        });
        return c;
      },
      jobs);
  for (std::size_t k = 0; k < shapes.size(); ++k)
    if (counts[k] != 0) out.add(shapes[k].as_partition(), counts[k]);
  return out;
}

std::vector<CKMismatch> conjecture_ck_search(int max_len, int alphabet) {
  std::vector<CKMismatch> out;
  for (const Involution& y : all_involutions(alphabet + 1)) {
    int len = inv_length(y);
    if (len == 0 || len > max_len) continue;
    std::vector<Word> words = involution_words(y, max_len);
    std::map<Word, std::size_t> index;
    for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;
    std::vector<std::size_t> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t k = 0; k < words.size(); ++k)
      for (const Word& v : k_knuth_neighbours(words[k], false, len)) {
        auto it = index.find(v);
        if (it != index.end()) parent[find(k)] = find(it->second);
      }
    std::vector<ShiftedTableau> ptab;
    for (const Word& w : words) ptab.push_back(shifted_hecke_insert(w).p);
    std::map<std::size_t, std::size_t> class_rep;
    std::map<ShiftedTableau, std::size_t> p_rep;
    for (std::size_t k = 0; k < words.size(); ++k) {
      std::size_t root = find(k);
      auto [cit, cnew] = class_rep.emplace(root, k);
      if (!cnew && ptab[cit->second] != ptab[k])
        out.push_back({y, words[cit->second], words[k], true, false});
      auto [pit, pnew] = p_rep.emplace(ptab[k], k);
      if (!pnew && find(pit->second) != root)
        out.push_back({y, words[pit->second], words[k], false, true});
    }
  }
  return out;
}

namespace {

std::string entry_text(int v) { return v < 0 ? std::to_string(-v) + "'" : std::to_string(v); }

std::string rows_text(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "(empty)\n";
  std::size_t w = 1;
  for (const auto& r : rows)
    for (const auto& c : r) w = std::max(w, c.size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << std::string(i * (w + 1), ' ');
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      if (k) os << ' ';
      os << std::string(w - rows[i][k].size(), ' ') << rows[i][k];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_text(const ShiftedTableau& t) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : t.rows) {
    rows.emplace_back();
    for (int v : r) rows.back().push_back(entry_text(v));
  }
  return rows_text(rows);
}

std::string to_text(const SetValuedShiftedTableau& t) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : t.rows) {
    rows.emplace_back();
    for (const auto& cell : r) {
      std::string s;
      for (std::size_t k = 0; k < cell.size(); ++k) s += (k ? "," : "") + entry_text(cell[k]);
      rows.back().push_back(cell.size() > 1 ? "{" + s + "}" : s);
    }
  }
  return rows_text(rows);
}

}  // namespace invschub
