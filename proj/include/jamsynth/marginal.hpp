#pragma once

#include <vector>

#include "jamsynth/dataset.hpp"
#include "jamsynth/domain.hpp"

namespace jamsynth {

/// Count vector over the cross product of a clique's attribute values, row
/// major over the clique's sorted attribute order. Exact marginals of a
/// dataset are non-negative integers summing to n; noisy, proxy, and model
/// marginals share the type and may carry negative or fractional entries.
struct Marginal {
  Clique clique;
  std::vector<double> counts;

  double sum() const;
};

/// Strides for addressing a marginal table: cell index of a record is
/// sum_i record[attr_i] * stride_i over the clique's sorted attributes.
std::vector<std::int64_t> marginal_strides(const Domain& domain, const Clique& clique);

/// Exact count vector of `data` on `clique` (deterministic).
Marginal compute_marginal(const Dataset& data, const Clique& clique);

/// Sums `m` over the attributes outside `sub`; `sub` must be a subset of
/// m.clique.
Marginal marginal_project(const Domain& domain, const Marginal& m, const Clique& sub);

double l1_distance(const Marginal& a, const Marginal& b);
double l2_distance(const Marginal& a, const Marginal& b);

/// Public-proxy estimate of a private marginal: q_tau(pub) * (n / n_pub).
/// Deterministic; consumes no privacy budget. Throws when `pub` is empty.
Marginal public_proxy(const Dataset& pub, const Clique& clique, double private_n);

/// Non-empty, duplicate-free set of marginal cliques.
struct Workload {
  std::vector<Clique> cliques;

  explicit Workload(std::vector<Clique> cs);
};

/// Anything that can answer marginal queries in count scale over a fixed
/// domain: datasets, scaled public proxies, graphical models.
class MarginalSource {
 public:
  virtual ~MarginalSource() = default;
  virtual Marginal marginal(const Clique& clique) const = 0;
  virtual const Domain& source_domain() const = 0;
};

class DatasetSource final : public MarginalSource {
 public:
  explicit DatasetSource(const Dataset& data) : data_(&data) {}
  Marginal marginal(const Clique& clique) const override;
  const Domain& source_domain() const override { return data_->domain(); }

 private:
  const Dataset* data_;
};

/// Public dataset rescaled to the private record count (the proxy estimator).
class ProxySource final : public MarginalSource {
 public:
  ProxySource(const Dataset& pub, double private_n) : pub_(&pub), n_(private_n) {}
  Marginal marginal(const Clique& clique) const override;
  const Domain& source_domain() const override { return pub_->domain(); }

 private:
  const Dataset* pub_;
  double n_;
};

/// (1 / (n * |W|)) * sum_tau ||q_tau(a) - q_tau(b)||_1 with the given n.
double workload_error(const MarginalSource& a, const MarginalSource& b, double n,
                      const Workload& w);

/// Workload error of a marginal source against the private data (n = data.n).
double workload_error(const Dataset& data, const MarginalSource& s, const Workload& w);
double workload_error(const Dataset& data, const Dataset& synth, const Workload& w);

}  // namespace jamsynth
