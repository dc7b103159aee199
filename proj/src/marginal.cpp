#include "jamsynth/marginal.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jamsynth {

double Marginal::sum() const {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

std::vector<std::int64_t> marginal_strides(const Domain& domain, const Clique& clique) {
  const auto& attrs = clique.attrs();
  std::vector<std::int64_t> strides(attrs.size());
  std::int64_t s = 1;
  for (std::size_t i = attrs.size(); i-- > 0;) {
    strides[i] = s;
    s *= domain.cardinality(attrs[i]);
  }
  return strides;
}

Marginal compute_marginal(const Dataset& data, const Clique& clique) {
  const Domain& dom = data.domain();
  const std::int64_t cells = dom.cell_count(clique);
  const auto strides = marginal_strides(dom, clique);
  const auto& attrs = clique.attrs();

  Marginal m{clique, std::vector<double>(static_cast<std::size_t>(cells), 0.0)};
  const std::size_t n = data.row_count();
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      idx += strides[i] * data.value(r, attrs[i]);
    }
    m.counts[static_cast<std::size_t>(idx)] += 1.0;
  }
  return m;
}

Marginal marginal_project(const Domain& domain, const Marginal& m, const Clique& sub) {
  if (!sub.subset_of(m.clique)) {
    throw std::invalid_argument("marginal_project: target is not a subset of the clique");
  }
  const auto& attrs = m.clique.attrs();
  const auto sub_strides_full = marginal_strides(domain, sub);

  // Stride into the target table for each source axis (0 when summed out).
  std::vector<std::int64_t> proj(attrs.size(), 0);
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    const auto& sattrs = sub.attrs();
    for (std::size_t j = 0; j < sattrs.size(); ++j) {
      if (sattrs[j] == attrs[i]) proj[i] = sub_strides_full[j];
    }
  }

  const std::int64_t sub_cells = domain.cell_count(sub);
  Marginal out{sub, std::vector<double>(static_cast<std::size_t>(sub_cells), 0.0)};

  std::vector<int> digit(attrs.size(), 0);
  std::int64_t sub_idx = 0;
  const std::int64_t cells = static_cast<std::int64_t>(m.counts.size());
  for (std::int64_t lin = 0; lin < cells; ++lin) {
    out.counts[static_cast<std::size_t>(sub_idx)] += m.counts[static_cast<std::size_t>(lin)];
    // Odometer increment, maintaining the projected index.
    for (std::size_t i = attrs.size(); i-- > 0;) {
      const int card = domain.cardinality(attrs[i]);
      if (++digit[i] < card) {
        sub_idx += proj[i];
        break;
      }
      digit[i] = 0;
      sub_idx -= proj[i] * (card - 1);
    }
  }
  return out;
}

namespace {
void check_same_clique(const Marginal& a, const Marginal& b) {
  if (a.clique != b.clique || a.counts.size() != b.counts.size()) {
    throw std::invalid_argument("marginal distance: cliques do not match");
  }
}
}  // namespace

double l1_distance(const Marginal& a, const Marginal& b) {
  check_same_clique(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.counts.size(); ++i) s += std::abs(a.counts[i] - b.counts[i]);
  return s;
}

double l2_distance(const Marginal& a, const Marginal& b) {
  check_same_clique(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    const double d = a.counts[i] - b.counts[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Marginal public_proxy(const Dataset& pub, const Clique& clique, double private_n) {
  if (pub.row_count() == 0) {
    throw std::invalid_argument("public_proxy: public dataset is empty");
  }
  Marginal m = compute_marginal(pub, clique);
  const double scale = private_n / static_cast<double>(pub.row_count());
  for (double& c : m.counts) c *= scale;
  return m;
}

Workload::Workload(std::vector<Clique> cs) : cliques(std::move(cs)) {
  if (cliques.empty()) throw std::invalid_argument("workload: must be non-empty");
  std::set<Clique> seen(cliques.begin(), cliques.end());
  if (seen.size() != cliques.size()) {
    throw std::invalid_argument("workload: cliques must be duplicate-free");
  }
}

Marginal DatasetSource::marginal(const Clique& clique) const {
  return compute_marginal(*data_, clique);
}

Marginal ProxySource::marginal(const Clique& clique) const {
  return public_proxy(*pub_, clique, n_);
}

double workload_error(const MarginalSource& a, const MarginalSource& b, double n,
                      const Workload& w) {
  if (!(a.source_domain() == b.source_domain())) {
    throw std::invalid_argument("workload_error: sources have different domains");
  }
  if (n <= 0.0) throw std::invalid_argument("workload_error: n must be positive");
  double total = 0.0;
  for (const Clique& tau : w.cliques) {
    total += l1_distance(a.marginal(tau), b.marginal(tau));
  }
  return total / (n * static_cast<double>(w.cliques.size()));
}

double workload_error(const Dataset& data, const MarginalSource& s, const Workload& w) {
  return workload_error(DatasetSource(data), s, static_cast<double>(data.row_count()), w);
}

double workload_error(const Dataset& data, const Dataset& synth, const Workload& w) {
  return workload_error(data, DatasetSource(synth), w);
}

}  // namespace jamsynth
