#include "d2kit/group_table.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "d2kit/errors.hpp"

namespace d2kit {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 64;
constexpr std::size_t kRandomAssociativityTriples = 1000;

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument("invalid group table: " + what); }

}  // namespace

FiniteGroupTable::FiniteGroupTable(GroupPresentation presentation, std::vector<std::vector<ElementIndex>> product,
                                   std::vector<ElementIndex> generator_images,
                                   std::vector<GroupWord> element_words)
    : presentation_(std::move(presentation)),
      product_(std::move(product)),
      generator_images_(std::move(generator_images)),
      element_words_(std::move(element_words)) {
  const std::size_t n = product_.size();
  if (n == 0) invalid("empty table");
  for (const auto& row : product_) {
    if (row.size() != n) invalid("product table is not square");
    for (ElementIndex v : row) {
      if (v >= n) invalid("product entry out of range");
    }
  }
  if (element_words_.size() != n) invalid("element word listing has wrong length");
  if (generator_images_.size() != presentation_.generator_count()) invalid("one image per generator required");
  for (ElementIndex g : generator_images_) {
    if (g >= n) invalid("generator image out of range");
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (product_[0][a] != a || product_[a][0] != a) invalid("element 0 is not the identity");
  }

  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& row = product_[a];
    auto it = std::find(row.begin(), row.end(), ElementIndex{0});
    if (it == row.end()) invalid("element " + std::to_string(a) + " has no inverse");
    const auto b = static_cast<ElementIndex>(it - row.begin());
    if (product_[b][a] != 0) invalid("left and right inverses differ");
    inverse_[a] = b;
  }

  auto associative = [&](std::size_t a, std::size_t b, std::size_t c) {
    return product_[product_[a][b]][c] == product_[a][product_[b][c]];
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!associative(a, b, c)) invalid("product is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < kRandomAssociativityTriples; ++k) {
      if (!associative(pick(rng), pick(rng), pick(rng))) invalid("product is not associative");
    }
  }

  for (const GroupWord& r : presentation_.relators) {
    if (r.generator_bound() > presentation_.generator_count()) invalid("relator uses unknown generator");
    if (evaluate_word(*this, r) != 0) invalid("a relator does not evaluate to the identity");
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (element_words_[g].generator_bound() > presentation_.generator_count()) {
      invalid("element word uses unknown generator");
    }
    if (evaluate_word(*this, element_words_[g]) != g) {
      invalid("element word " + std::to_string(g) + " does not evaluate to its element");
    }
  }
  // Every element has a word in the generators, so the images generate.
}

std::size_t FiniteGroupTable::element_order(ElementIndex g) const {
  std::size_t k = 1;
  for (ElementIndex x = g; x != 0; x = product_[x][g]) ++k;
  return k;
}

bool FiniteGroupTable::same_group(const FiniteGroupTable& other) const {
  return product_ == other.product_ && generator_images_ == other.generator_images_;
}

ElementIndex evaluate_word(const FiniteGroupTable& t, const GroupWord& w) {
  ElementIndex x = 0;
  for (const Letter& l : w.letters()) {
    const ElementIndex g = t.generator_image(l.generator);
    x = t.multiply(x, l.exponent > 0 ? g : t.inverse(g));
  }
  return x;
}

namespace {

constexpr int kUndefined = -1;

// Coset table for the HLT strategy with coincidence processing.
class CosetEnumerator {
 public:
  CosetEnumerator(const GroupPresentation& p, std::size_t max_cosets)
      : columns_(2 * p.generator_count()), max_cosets_(max_cosets) {
    for (const GroupWord& r : p.relators) {
      std::vector<int> cols;
      for (const Letter& l : r.letters()) cols.push_back(column(l));
      relators_.push_back(std::move(cols));
    }
    new_coset();
  }

  void run() {
    for (int alpha = 0; alpha < static_cast<int>(table_.size()); ++alpha) {
      if (!live(alpha)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(alpha, r);
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      for (int x = 0; x < columns_; ++x) {
        if (table_[alpha][x] == kUndefined) define(alpha, x);
      }
    }
  }

  // Live cosets in breadth-first order from coset 0, with their BFS words.
  void standardize(std::vector<std::vector<int>>& right_action, std::vector<GroupWord>& words) const {
    std::vector<int> number(table_.size(), kUndefined);
    std::vector<int> order;
    std::vector<std::vector<Letter>> raw_words;
    number[0] = 0;
    order.push_back(0);
    raw_words.emplace_back();
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int c = order[k];
      for (int x = 0; x < columns_; ++x) {
        const int d = root(table_[c][x]);
        if (number[d] == kUndefined) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
          auto w = raw_words[k];
          w.push_back(letter(x));
          raw_words.push_back(std::move(w));
        }
      }
    }
    right_action.assign(order.size(), std::vector<int>(columns_));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int x = 0; x < columns_; ++x) right_action[k][x] = number[root(table_[order[k]][x])];
    }
    words.clear();
    for (const auto& w : raw_words) words.push_back(free_reduce(w));
  }

 private:
  static int column(const Letter& l) { return static_cast<int>(l.generator) * 2 + (l.exponent < 0 ? 1 : 0); }
  static Letter letter(int col) {
    return {static_cast<std::uint32_t>(col / 2), static_cast<std::int8_t>(col % 2 == 0 ? 1 : -1)};
  }
  static int inverse_column(int col) { return col ^ 1; }

  bool live(int c) const { return parent_[c] == c; }

  int root(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  int new_coset() {
    if (table_.size() >= max_cosets_) throw EnumerationExhausted(max_cosets_);
    table_.emplace_back(columns_, kUndefined);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    const int d = new_coset();
    table_[c][x] = d;
    table_[d][inverse_column(x)] = c;
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    const int r = static_cast<int>(w.size());
    int f = alpha;
    int i = 0;
    int b = alpha;
    int j = r - 1;
    while (true) {
      while (i < r && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i >= r) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && table_[b][inverse_column(w[j])] != kUndefined) b = table_[b][inverse_column(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        table_[f][w[i]] = b;
        table_[b][inverse_column(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k);
    const int b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int alpha, int beta) {
    std::vector<int> queue;
    merge(alpha, beta, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int gamma = queue[q];
      for (int x = 0; x < columns_; ++x) {
        const int delta = table_[gamma][x];
        if (delta == kUndefined) continue;
        table_[delta][inverse_column(x)] = kUndefined;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (table_[mu][x] != kUndefined) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][inverse_column(x)] != kUndefined) {
          merge(mu, table_[nu][inverse_column(x)], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][inverse_column(x)] = mu;
        }
      }
    }
  }

  int columns_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

FiniteGroupTable todd_coxeter(const GroupPresentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
  CosetEnumerator enumerator(p, max_cosets);
  enumerator.run();

  std::vector<std::vector<int>> right_action;
  std::vector<GroupWord> words;
  enumerator.standardize(right_action, words);

  const std::size_t n = right_action.size();
  // Element g corresponds to the coset reached by words[g]; g*h is found by
  // tracing words[h] from coset g.
  std::vector<std::vector<ElementIndex>> product(n, std::vector<ElementIndex>(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      int c = static_cast<int>(g);
      for (const Letter& l : words[h].letters()) {
        c = right_action[c][static_cast<int>(l.generator) * 2 + (l.exponent < 0 ? 1 : 0)];
      }
      product[g][h] = static_cast<ElementIndex>(c);
    }
  }
  std::vector<ElementIndex> images;
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    images.push_back(static_cast<ElementIndex>(right_action[0][2 * i]));
  }
  return FiniteGroupTable(p, std::move(product), std::move(images), std::move(words));
}

std::optional<std::vector<ElementIndex>> find_isomorphism(const FiniteGroupTable& from, const FiniteGroupTable& to,
                                                          std::size_t max_attempts) {
  const std::size_t n = from.order();
  if (n != to.order()) return std::nullopt;
  const std::size_t k = from.presentation().generator_count();

  std::vector<std::vector<ElementIndex>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ord = from.element_order(from.generator_image(i));
    for (ElementIndex g = 0; g < n; ++g) {
      if (to.element_order(g) == ord) candidates[i].push_back(g);
    }
    if (candidates[i].empty()) return std::nullopt;
  }

  // Extends a choice of generator images along every element word and checks
  // the result is a bijective homomorphism.
  auto try_images = [&](const std::vector<ElementIndex>& images) -> std::optional<std::vector<ElementIndex>> {
    std::vector<ElementIndex> map(n);
    std::vector<bool> hit(n, false);
    for (ElementIndex g = 0; g < n; ++g) {
      ElementIndex x = 0;
      for (const Letter& l : from.word(g).letters()) {
        const ElementIndex y = images[l.generator];
        x = to.multiply(x, l.exponent > 0 ? y : to.inverse(y));
      }
      if (hit[x]) return std::nullopt;
      hit[x] = true;
      map[g] = x;
    }
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        if (map[from.multiply(a, b)] != to.multiply(map[a], map[b])) return std::nullopt;
    return map;
  };

  std::vector<std::size_t> choice(k, 0);
  std::vector<ElementIndex> images(k);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < k; ++i) images[i] = candidates[i][choice[i]];
    if (auto map = try_images(images)) return map;
    std::size_t i = 0;
    while (i < k && ++choice[i] == candidates[i].size()) choice[i++] = 0;
    if (i == k) break;
  }
  return std::nullopt;
}

}  // namespace d2kit
