#include "jamsynth/dataset.hpp"

#include <stdexcept>
#include <string>

namespace jamsynth {

Dataset::Dataset(Domain domain) : domain_(std::move(domain)) {
  if (domain_.attr_count() == 0) {
    throw std::invalid_argument("dataset: domain must have at least one attribute");
  }
}

Dataset::Dataset(Domain domain, std::vector<int> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  const std::size_t m = domain_.attr_count();
  if (m == 0) {
    throw std::invalid_argument("dataset: domain must have at least one attribute");
  }
  if (values_.size() % m != 0) {
    throw std::invalid_argument("dataset: value buffer is not a whole number of rows");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int attr = static_cast<int>(i % m);
    const int v = values_[i];
    if (v < 0 || v >= domain_.cardinality(attr)) {
      throw std::invalid_argument(
          "dataset: value " + std::to_string(v) + " out of range for attribute '" +
          domain_.name(attr) + "' (cardinality " +
          std::to_string(domain_.cardinality(attr)) + ")");
    }
  }
}

std::size_t Dataset::row_count() const {
  return values_.size() / domain_.attr_count();
}

void Dataset::append_row(std::span<const int> record) {
  const std::size_t m = domain_.attr_count();
  if (record.size() != m) {
    throw std::invalid_argument("dataset: record length does not match domain");
  }
  for (std::size_t j = 0; j < m; ++j) {
    const int v = record[j];
    if (v < 0 || v >= domain_.cardinality(static_cast<int>(j))) {
      throw std::invalid_argument(
          "dataset: value " + std::to_string(v) + " out of range for attribute '" +
          domain_.name(static_cast<int>(j)) + "'");
    }
  }
  values_.insert(values_.end(), record.begin(), record.end());
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  const std::size_t m = domain_.attr_count();
  std::vector<int> vals;
  vals.reserve(rows.size() * m);
  for (std::size_t r : rows) {
    if (r >= row_count()) throw std::out_of_range("dataset: subset row out of range");
    auto rec = row(r);
    vals.insert(vals.end(), rec.begin(), rec.end());
  }
  Dataset out(domain_);
  out.values_ = std::move(vals);
  return out;
}

}  // namespace jamsynth
