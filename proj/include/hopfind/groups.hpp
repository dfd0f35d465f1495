#ifndef HOPFIND_GROUPS_HPP
#define HOPFIND_GROUPS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace hopfind {

/// Finite group given by a Cayley table: table[a][b] is the index of a·b.
class FiniteGroup {
 public:
  /// Throws InputError with a witness unless the table is a group.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// C_n with elements 1, g, g^2, ..., g^(n-1).
FiniteGroup cyclicGroup(std::size_t n);
/// S_3 with elements 1, (12), (13), (23), (123), (132); the product
/// a·b is the composite permutation "first b, then a".
FiniteGroup symmetricGroup3();

}  // namespace hopfind

#endif  // HOPFIND_GROUPS_HPP
