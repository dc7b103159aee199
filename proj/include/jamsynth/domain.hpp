#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace jamsynth {

/// Sorted, duplicate-free set of attribute indices. Structural equality is
/// set equality; ordering is lexicographic on the sorted index sequence.
class Clique {
 public:
  Clique() = default;
  explicit Clique(std::vector<int> attrs);
  Clique(std::initializer_list<int> attrs);

  const std::vector<int>& attrs() const { return attrs_; }
  std::size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }

  bool contains(int attr) const;
  bool subset_of(const Clique& other) const;
  Clique set_union(const Clique& other) const;
  Clique set_intersection(const Clique& other) const;
  Clique set_difference(const Clique& other) const;

  auto operator<=>(const Clique&) const = default;

  std::string to_string() const;  // e.g. "{0,2,5}"

 private:
  std::vector<int> attrs_;
};

/// Ordered list of attributes with finite categorical value sets. The full
/// universe is the cross product of the per-attribute value sets; its size can
/// overflow a machine word, so it is only exposed in log space.
class Domain {
 public:
  Domain() = default;
  Domain(std::vector<std::string> names, std::vector<int> cardinalities);

  std::size_t attr_count() const { return cards_.size(); }
  int cardinality(int attr) const;
  const std::string& name(int attr) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& cardinalities() const { return cards_; }

  /// Index of the named attribute, or -1 when absent.
  int index_of(std::string_view attr_name) const;

  /// log(product of all cardinalities).
  double log_total_size() const;

  /// Number of cells in the marginal table over `clique`. Throws
  /// std::length_error when the product exceeds kMaxCells.
  std::int64_t cell_count(const Clique& clique) const;

  /// Same product evaluated in floating point; never throws.
  double cell_count_approx(const Clique& clique) const;

  /// Throws std::invalid_argument when the clique references attributes
  /// outside this domain.
  void validate_clique(const Clique& clique) const;

  bool operator==(const Domain&) const = default;

  // Largest marginal table this library will materialize (doubles).
  static constexpr std::int64_t kMaxCells = std::int64_t{1} << 28;

 private:
  std::vector<std::string> names_;
  std::vector<int> cards_;
};

}  // namespace jamsynth
