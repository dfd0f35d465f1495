#include "hopfind/groups.hpp"

#include <array>
#include <optional>

#include "hopfind/error.hpp"

namespace hopfind {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("not a group: empty table");
  if (table_.size() != n) throw InputError("not a group: table has " + std::to_string(table_.size()) + " rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw InputError("not a group: row " + labels_[a] + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] >= n) throw InputError("not a group: entry " + labels_[a] + "·" + labels_[b] + " out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InputError("not a group: associativity fails at (" + labels_[a] + ", " + labels_[b] + ", " +
                           labels_[c] + ")");
        }
      }
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table_[a][b] == b && table_[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw InputError("not a group: no identity element");
  identity_ = *e;
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) throw InputError("not a group: " + labels_[a] + " has no inverse");
  }
}

FiniteGroup cyclicGroup(std::size_t n) {
  if (n == 0) throw InputError("cyclic group needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup symmetricGroup3() {
  // Images of the points 0, 1, 2.
  using Perm = std::array<std::size_t, 3>;
  const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  std::vector<std::string> labels{"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k) {
        if (perms[k] == c) table[a][b] = k;
      }
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

}  // namespace hopfind
