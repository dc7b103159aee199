#pragma once

#include <cstdint>
#include <vector>

#include "jamsynth/domain.hpp"

namespace jamsynth {

/// Dense table over a clique's value combinations, row major over the
/// clique's sorted attribute order. Used in log space by the inference code.
struct Tensor {
  Clique scope;
  std::vector<int> cards;      // cardinality per scope attribute
  std::vector<double> values;  // size = product of cards

  static Tensor zeros(const Domain& domain, const Clique& scope);
  static Tensor constant(const Domain& domain, const Clique& scope, double v);

  std::int64_t cells() const { return static_cast<std::int64_t>(values.size()); }
};

/// Visits every cell of a table with the given per-axis cardinalities,
/// maintaining a projected linear index: proj = sum_i digit_i * proj_strides_i.
/// Calls fn(linear_index, projected_index).
template <typename Fn>
void for_each_cell(const std::vector<int>& cards,
                   const std::vector<std::int64_t>& proj_strides, Fn&& fn) {
  std::int64_t cells = 1;
  for (int c : cards) cells *= c;
  std::vector<int> digit(cards.size(), 0);
  std::int64_t proj = 0;
  for (std::int64_t lin = 0; lin < cells; ++lin) {
    fn(lin, proj);
    for (std::size_t i = cards.size(); i-- > 0;) {
      if (++digit[i] < cards[i]) {
        proj += proj_strides[i];
        break;
      }
      digit[i] = 0;
      proj -= proj_strides[i] * (cards[i] - 1);
    }
  }
}

/// Strides into a table over `sub` for each axis of `scope` (0 for axes not
/// present in `sub`). `sub` must be a subset of `scope`.
std::vector<std::int64_t> projection_strides(const Domain& domain, const Clique& scope,
                                             const Clique& sub);

/// x[t] += s[project(t)] where s.scope is a subset of x.scope.
void add_broadcast(const Domain& domain, Tensor& x, const Tensor& s);
void sub_broadcast(const Domain& domain, Tensor& x, const Tensor& s);

/// Log-space marginalization: out[u] = log sum_{t -> u} exp(x[t]).
Tensor lse_marginalize(const Domain& domain, const Tensor& x, const Clique& target);

/// log sum exp over all cells.
double lse_all(const Tensor& x);

}  // namespace jamsynth
