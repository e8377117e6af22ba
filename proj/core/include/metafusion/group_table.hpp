#pragma once

#include <memory>
#include <string>
#include <vector>

namespace metafusion {

class GroupTable;
using GroupTablePtr = std::shared_ptr<const GroupTable>;

/// Provenance of an explicit multiplication table.
enum class TableSource {
  MetacyclicParams,
  PermutationGenerators,
  Quotient,
  SubgroupRestriction,
};

std::string to_string(TableSource s);

/// An explicit finite group: dense element indices 0..order-1 with the
/// identity fixed at index 0, and fully precomputed multiplication,
/// inverse and element-order tables.
///
/// Construction validates the group axioms: identity, two-sided inverses,
/// and associativity (exhaustively up to order 64, on at least 10^5
/// deterministic random triples above that). Instances are immutable and
/// safe to share read-only across threads.
class GroupTable {
 public:
  static constexpr int kMaxOrder = 1024;

  /// Builds a validated table from multiplication rows. Throws
  /// std::invalid_argument on any axiom or size violation.
  static GroupTablePtr create(std::vector<std::vector<int>> mul,
                              std::vector<std::string> labels,
                              TableSource source);

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int g) const { return inv_[g]; }
  static constexpr int identity() { return 0; }
  const std::string& label(int g) const { return labels_[g]; }
  TableSource source() const { return source_; }

  /// g^e with e of either sign.
  int power(int g, long long e) const;
  /// h g h^-1
  int conjugate(int h, int g) const { return mul(mul(h, g), inv(h)); }
  /// a b a^-1 b^-1
  int commutator(int a, int b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }

  int element_order(int g) const { return orders_[g]; }
  const std::vector<int>& element_orders() const { return orders_; }
  bool is_abelian() const { return abelian_; }
  /// lcm of element orders
  long long exponent() const;
  /// true if the group order is a power of two
  bool is_2_group() const;

 private:
  GroupTable() = default;

  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  TableSource source_ = TableSource::MetacyclicParams;
  bool abelian_ = false;
};

bool is_power_of_two(long long n);
/// largest power of two dividing n
long long two_part(long long n);
/// n with all factors of two removed
long long odd_part(long long n);

}  // namespace metafusion
