#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jamsynth/domain.hpp"

namespace jamsynth {

/// Row-major table of attribute value indices over a Domain. Immutable once
/// built; safe to share across threads.
class Dataset {
 public:
  explicit Dataset(Domain domain);
  /// `values` holds n*m indices, row major. Every index is range checked.
  Dataset(Domain domain, std::vector<int> values);

  const Domain& domain() const { return domain_; }
  std::size_t row_count() const;
  std::size_t attr_count() const { return domain_.attr_count(); }

  int value(std::size_t row, int attr) const {
    return values_[row * domain_.attr_count() + static_cast<std::size_t>(attr)];
  }
  std::span<const int> row(std::size_t r) const {
    return {values_.data() + r * domain_.attr_count(), domain_.attr_count()};
  }

  void append_row(std::span<const int> record);

  /// New dataset holding the given rows (by index, in order).
  Dataset subset(std::span<const std::size_t> rows) const;

  bool operator==(const Dataset&) const = default;

 private:
  Domain domain_;
  std::vector<int> values_;
};

}  // namespace jamsynth
