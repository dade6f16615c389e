#include <algorithm>
#include <deque>
#include <numeric>

#include "projspec/errors.hpp"
#include "projspec/groups.hpp"

namespace projspec {
namespace {

constexpr int kUndefined = -1;

// Column 2g is generator g, column 2g+1 its inverse.
int column(int letter) {
  const int g = std::abs(letter) - 1;
  return letter > 0 ? 2 * g : 2 * g + 1;
}

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t max_cosets)
      : cols_(2 * generators), max_(max_cosets) {
    add_row();
  }

  std::size_t rows() const { return table_.size(); }
  bool live(int c) const { return parent_[c] == c; }
  int at(int c, int col) const { return table_[c][col]; }

  void define(int c, int col) {
    if (table_.size() >= max_) {
      throw InvalidInput("coset enumeration exceeded " + std::to_string(max_) + " cosets");
    }
    const int fresh = add_row();
    table_[c][col] = fresh;
    table_[fresh][col ^ 1] = c;
  }

  // Scans relator `w` from coset c, filling deductions and processing
  // coincidences as they appear.
  void scan_and_fill(int c, const Word& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][column(w[i])] != kUndefined) f = table_[f][column(w[i++])];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][column(w[j]) ^ 1] != kUndefined) {
        b = table_[b][column(w[j--]) ^ 1];
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][column(w[i])] = b;
        table_[b][column(w[i]) ^ 1] = f;
        return;
      }
      define(f, column(w[i]));
    }
  }

 private:
  int add_row() {
    table_.emplace_back(cols_, kUndefined);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const int f = table_[e][x];
        if (f == kUndefined) continue;
        table_[f][x ^ 1] = kUndefined;
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (table_[e1][x] != kUndefined) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][x ^ 1] != kUndefined) {
          merge(e1, table_[f1][x ^ 1], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

CayleyTable cayley_from_presentation(std::vector<std::string> labels,
                                     const std::vector<Word>& relators, std::size_t max_cosets) {
  const std::size_t ngens = labels.size();
  if (ngens == 0) throw InvalidInput("presentation needs at least one generator");
  for (const auto& r : relators) {
    for (int letter : r) {
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > ngens) {
        throw InvalidInput("relator uses an unknown generator");
      }
    }
  }

  CosetTable ct(ngens, max_cosets);
  for (int c = 0; c < static_cast<int>(ct.rows()); ++c) {
    for (const auto& r : relators) {
      if (!ct.live(c)) break;
      ct.scan_and_fill(c, r);
    }
    for (std::size_t x = 0; x < 2 * ngens; ++x) {
      if (ct.live(c) && ct.at(c, static_cast<int>(x)) == kUndefined) {
        ct.define(c, static_cast<int>(x));
      }
    }
  }

  // Breadth-first renumbering from coset 0; words[k] reaches element k.
  std::vector<int> number(ct.rows(), -1);
  std::vector<int> order{0};
  std::vector<Word> words{Word{}};
  number[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t x = 0; x < 2 * ngens; ++x) {
      const int next = ct.at(order[head], static_cast<int>(x));
      if (number[next] != -1) continue;
      number[next] = static_cast<int>(order.size());
      order.push_back(next);
      Word w = words[head];
      const int g = static_cast<int>(x / 2) + 1;
      w.push_back(x % 2 ? -g : g);
      words.push_back(std::move(w));
    }
  }

  CayleyTable out;
  out.order = order.size();
  out.labels = std::move(labels);
  out.identity = 0;
  out.table.assign(out.order, std::vector<std::size_t>(out.order));
  for (std::size_t i = 0; i < out.order; ++i) {
    for (std::size_t j = 0; j < out.order; ++j) {
      int c = order[i];
      for (int letter : words[j]) c = ct.at(c, column(letter));
      out.table[i][j] = static_cast<std::size_t>(number[c]);
    }
  }
  for (std::size_t g = 0; g < ngens; ++g) {
    out.generators.push_back(static_cast<std::size_t>(number[ct.at(0, static_cast<int>(2 * g))]));
  }
  out.validate();
  return out;
}

}  // namespace projspec
