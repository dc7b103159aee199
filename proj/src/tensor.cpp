#include "jamsynth/tensor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "jamsynth/marginal.hpp"

namespace jamsynth {

Tensor Tensor::zeros(const Domain& domain, const Clique& scope) {
  return constant(domain, scope, 0.0);
}

Tensor Tensor::constant(const Domain& domain, const Clique& scope, double v) {
  Tensor t;
  t.scope = scope;
  t.cards.reserve(scope.size());
  for (int a : scope.attrs()) t.cards.push_back(domain.cardinality(a));
  const std::int64_t cells = domain.cell_count(scope);
  t.values.assign(static_cast<std::size_t>(cells), v);
  return t;
}

std::vector<std::int64_t> projection_strides(const Domain& domain, const Clique& scope,
                                             const Clique& sub) {
  if (!sub.subset_of(scope)) {
    throw std::invalid_argument("projection_strides: sub must be contained in scope");
  }
  const auto sub_strides = marginal_strides(domain, sub);
  const auto& attrs = scope.attrs();
  const auto& sattrs = sub.attrs();
  std::vector<std::int64_t> proj(attrs.size(), 0);
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    for (std::size_t j = 0; j < sattrs.size(); ++j) {
      if (sattrs[j] == attrs[i]) proj[i] = sub_strides[j];
    }
  }
  return proj;
}

void add_broadcast(const Domain& domain, Tensor& x, const Tensor& s) {
  const auto proj = projection_strides(domain, x.scope, s.scope);
  for_each_cell(x.cards, proj, [&](std::int64_t lin, std::int64_t p) {
    x.values[static_cast<std::size_t>(lin)] += s.values[static_cast<std::size_t>(p)];
  });
}

void sub_broadcast(const Domain& domain, Tensor& x, const Tensor& s) {
  const auto proj = projection_strides(domain, x.scope, s.scope);
  for_each_cell(x.cards, proj, [&](std::int64_t lin, std::int64_t p) {
    x.values[static_cast<std::size_t>(lin)] -= s.values[static_cast<std::size_t>(p)];
  });
}

Tensor lse_marginalize(const Domain& domain, const Tensor& x, const Clique& target) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  Tensor out = Tensor::constant(domain, target, kNegInf);
  const auto proj = projection_strides(domain, x.scope, target);

  // Two passes for stability: per-target max, then shifted exp sums.
  for_each_cell(x.cards, proj, [&](std::int64_t lin, std::int64_t p) {
    const double v = x.values[static_cast<std::size_t>(lin)];
    if (v > out.values[static_cast<std::size_t>(p)]) {
      out.values[static_cast<std::size_t>(p)] = v;
    }
  });
  std::vector<double> sums(out.values.size(), 0.0);
  for_each_cell(x.cards, proj, [&](std::int64_t lin, std::int64_t p) {
    const double m = out.values[static_cast<std::size_t>(p)];
    if (m > kNegInf) {
      sums[static_cast<std::size_t>(p)] += std::exp(x.values[static_cast<std::size_t>(lin)] - m);
    }
  });
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (out.values[i] > kNegInf) out.values[i] += std::log(sums[i]);
  }
  return out;
}

double lse_all(const Tensor& x) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : x.values) m = std::max(m, v);
  if (!(m > -std::numeric_limits<double>::infinity())) return m;
  double s = 0.0;
  for (double v : x.values) s += std::exp(v - m);
  return m + std::log(s);
}

}  // namespace jamsynth
