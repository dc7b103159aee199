#include "jamsynth/domain.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace jamsynth {

Clique::Clique(std::vector<int> attrs) : attrs_(std::move(attrs)) {
  std::sort(attrs_.begin(), attrs_.end());
  attrs_.erase(std::unique(attrs_.begin(), attrs_.end()), attrs_.end());
  if (!attrs_.empty() && attrs_.front() < 0) {
    throw std::invalid_argument("clique attribute index must be non-negative");
  }
}

Clique::Clique(std::initializer_list<int> attrs)
    : Clique(std::vector<int>(attrs)) {}

bool Clique::contains(int attr) const {
  return std::binary_search(attrs_.begin(), attrs_.end(), attr);
}

bool Clique::subset_of(const Clique& other) const {
  return std::includes(other.attrs_.begin(), other.attrs_.end(),
                       attrs_.begin(), attrs_.end());
}

Clique Clique::set_union(const Clique& other) const {
  std::vector<int> out;
  out.reserve(attrs_.size() + other.attrs_.size());
  std::set_union(attrs_.begin(), attrs_.end(), other.attrs_.begin(),
                 other.attrs_.end(), std::back_inserter(out));
  Clique c;
  c.attrs_ = std::move(out);
  return c;
}

Clique Clique::set_intersection(const Clique& other) const {
  std::vector<int> out;
  std::set_intersection(attrs_.begin(), attrs_.end(), other.attrs_.begin(),
                        other.attrs_.end(), std::back_inserter(out));
  Clique c;
  c.attrs_ = std::move(out);
  return c;
}

Clique Clique::set_difference(const Clique& other) const {
  std::vector<int> out;
  std::set_difference(attrs_.begin(), attrs_.end(), other.attrs_.begin(),
                      other.attrs_.end(), std::back_inserter(out));
  Clique c;
  c.attrs_ = std::move(out);
  return c;
}

std::string Clique::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < attrs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(attrs_[i]);
  }
  s += '}';
  return s;
}

Domain::Domain(std::vector<std::string> names, std::vector<int> cardinalities)
    : names_(std::move(names)), cards_(std::move(cardinalities)) {
  if (names_.size() != cards_.size()) {
    throw std::invalid_argument("domain: names and cardinalities differ in length");
  }
  for (int c : cards_) {
    if (c < 1) throw std::invalid_argument("domain: cardinality must be >= 1");
  }
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) {
    throw std::invalid_argument("domain: attribute names must be unique");
  }
}

int Domain::cardinality(int attr) const {
  if (attr < 0 || static_cast<std::size_t>(attr) >= cards_.size()) {
    throw std::invalid_argument("domain: attribute index out of range");
  }
  return cards_[attr];
}

const std::string& Domain::name(int attr) const {
  if (attr < 0 || static_cast<std::size_t>(attr) >= names_.size()) {
    throw std::invalid_argument("domain: attribute index out of range");
  }
  return names_[attr];
}

int Domain::index_of(std::string_view attr_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == attr_name) return static_cast<int>(i);
  }
  return -1;
}

double Domain::log_total_size() const {
  double s = 0.0;
  for (int c : cards_) s += std::log(static_cast<double>(c));
  return s;
}

std::int64_t Domain::cell_count(const Clique& clique) const {
  validate_clique(clique);
  std::int64_t cells = 1;
  for (int a : clique.attrs()) {
    cells *= cards_[a];
    if (cells > kMaxCells) {
      throw std::length_error("marginal table over " + clique.to_string() +
                              " exceeds the materialization limit");
    }
  }
  return cells;
}

double Domain::cell_count_approx(const Clique& clique) const {
  validate_clique(clique);
  double cells = 1.0;
  for (int a : clique.attrs()) cells *= static_cast<double>(cards_[a]);
  return cells;
}

void Domain::validate_clique(const Clique& clique) const {
  for (int a : clique.attrs()) {
    if (a < 0 || static_cast<std::size_t>(a) >= cards_.size()) {
      throw std::invalid_argument("clique " + clique.to_string() +
                                  " does not fit domain with " +
                                  std::to_string(cards_.size()) + " attributes");
    }
  }
}

}  // namespace jamsynth
