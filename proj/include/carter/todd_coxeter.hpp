#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "carter/presentation.hpp"

namespace carter {

/// Result of a coset enumeration.  When complete, `index` is the number of
/// cosets and `rows` the transitive action table: rows[c][2g] is the image
/// of coset c under generator g, rows[c][2g+1] under its inverse (0-based
/// cosets, row 0 the trivial coset).
struct CosetTable {
  enum class Status { complete, capped };
  Status status = Status::capped;
  std::size_t index = 0;
  std::vector<std::vector<int>> rows;

  bool complete() const { return status == Status::complete; }
};

namespace detail {

/// Relator-scanning enumeration with immediate gap filling, no lookahead.
/// Cosets are processed in definition order and relators in listed order,
/// so runs are deterministic.
class CosetEnumerator {
 public:
  CosetEnumerator(int ngens, std::size_t cap) : ngens_(ngens), cap_(cap) { new_coset(); }

  static std::vector<int> flatten(const GeneratorWord& w) {
    std::vector<int> out;
    for (auto [g, e] : w.letters) out.push_back(2 * g + (e < 0 ? 1 : 0));
    return out;
  }

  bool run(const std::vector<std::vector<int>>& relators,
           const std::vector<std::vector<int>>& subgens) {
    for (const auto& w : subgens)
      if (!scan_and_fill(0, w)) return false;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : relators) {
        if (!scan_and_fill(static_cast<int>(c), r)) return false;
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (int x = 0; x < 2 * ngens_; ++x) {  // complete the row
        if (entry(static_cast<int>(c), x) >= 0) continue;
        int d = new_coset();
        if (d < 0) return false;
        set_entry(static_cast<int>(c), x, d);
      }
    }
    check_closed();
    return true;
  }

  std::size_t live_count() const {
    std::size_t k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) ++k;
    return k;
  }

  std::vector<std::vector<int>> compressed() const {
    std::vector<int> renumber(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) renumber[c] = next++;
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      std::vector<int> row(table_[c].size(), -1);
      for (std::size_t x = 0; x < row.size(); ++x)
        if (table_[c][x] >= 0) row[x] = renumber[static_cast<std::size_t>(rep(table_[c][x]))];
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int rep(int c) const {
    while (parent_[static_cast<std::size_t>(c)] != c) c = parent_[static_cast<std::size_t>(c)];
    return c;
  }

  int entry(int c, int x) const {
    int v = table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
    return v < 0 ? -1 : rep(v);
  }

  void set_entry(int c, int x, int d) {
    table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d;
    table_[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv(x))] = c;
  }

  int new_coset() {
    if (table_.size() >= cap_) return -1;
    table_.emplace_back(static_cast<std::size_t>(2 * ngens_), -1);
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    return static_cast<int>(table_.size()) - 1;
  }

  static int inv(int x) { return x ^ 1; }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    dead_.push_back(b);
  }

  void process_coincidences() {
    while (!dead_.empty()) {
      int e = dead_.front();
      dead_.pop_front();
      for (int x = 0; x < 2 * ngens_; ++x) {
        int f = table_[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)];
        if (f < 0) continue;
        table_[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] = -1;
        // drop the backref only when it still points at the dying coset
        if (table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(inv(x))] == e)
          table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(inv(x))] = -1;
        int e1 = rep(e), f1 = rep(f);
        int ex = entry(e1, x);
        int fx = entry(f1, inv(x));
        if (ex >= 0)
          merge(f1, ex);
        else if (fx >= 0)
          merge(e1, fx);
        else
          set_entry(e1, x, f1);
      }
    }
  }

  // Returns false when the coset cap is hit.
  bool scan_and_fill(int start, const std::vector<int>& word) {
    if (word.empty()) return true;
    int f = rep(start), b = f;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    while (true) {
      while (i <= j) {
        int nxt = entry(f, word[static_cast<std::size_t>(i)]);
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i > j) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return true;
      }
      while (j >= i) {
        int nxt = entry(b, inv(word[static_cast<std::size_t>(j)]));
        if (nxt < 0) break;
        b = nxt;
        --j;
      }
      if (j < i) {
        merge(f, b);
        process_coincidences();
        return true;
      }
      if (j == i) {
        set_entry(f, word[static_cast<std::size_t>(i)], b);
        return true;
      }
      int c = new_coset();  // fill the first gap and keep scanning
      if (c < 0) return false;
      set_entry(f, word[static_cast<std::size_t>(i)], c);
      f = c;
      ++i;
    }
  }

  void check_closed() const {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < 2 * ngens_; ++x)
        if (entry(static_cast<int>(c), x) < 0)
          throw std::logic_error("coset table finished with a hole");
    }
  }

  int ngens_;
  std::size_t cap_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<int> dead_;
};

}  // namespace detail

/// Enumerate cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`.  Deterministic; reports capped status instead of a
/// wrong count when the table would outgrow `cap`.
inline CosetTable todd_coxeter(const Presentation& p,
                               const std::vector<GeneratorWord>& subgroup = {},
                               std::size_t cap = kDefaultCosetCap) {
  if (cap == 0) throw std::invalid_argument("coset cap must be positive");
  detail::CosetEnumerator enumerator(static_cast<int>(p.generators.size()), cap);
  std::vector<std::vector<int>> rel, sub;
  for (const auto& r : p.relators)
    rel.push_back(detail::CosetEnumerator::flatten(r.freely_reduced()));
  for (const auto& s : subgroup)
    sub.push_back(detail::CosetEnumerator::flatten(s.freely_reduced()));
  CosetTable out;
  if (!enumerator.run(rel, sub)) return out;  // capped
  out.status = CosetTable::Status::complete;
  out.rows = enumerator.compressed();
  out.index = out.rows.size();
  return out;
}

}  // namespace carter
