#include "spm/weighted_quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "spm/error.hpp"
#include "spm/number_theory.hpp"

namespace spm {

WeightedQuiver::WeightedQuiver(std::vector<unsigned> weights, std::vector<Arrow> arrows)
    : weights_(std::move(weights)), arrows_(std::move(arrows)) {
  for (unsigned w : weights_) {
    if (w == 0) throw Error(ErrorCode::invalid_argument, "vertex weights must be positive");
  }
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.id.empty()) throw Error(ErrorCode::invalid_argument, "arrow id must be nonempty");
    if (a.source >= size() || a.target >= size()) {
      throw Error(ErrorCode::unknown_vertex, "arrow " + a.id + " has an endpoint out of range");
    }
    if (a.source == a.target) throw Error(ErrorCode::invalid_argument, "arrow " + a.id + " is a loop");
    if (i > 0 && arrows_[i - 1].id == a.id) {
      throw Error(ErrorCode::invalid_argument, "duplicate arrow id " + a.id);
    }
  }
}

std::optional<std::size_t> WeightedQuiver::find(const std::string& id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, const std::string& key) { return a.id < key; });
  if (it == arrows_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::size_t WeightedQuiver::multiplicity(std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
    return a.source == j && a.target == i;
  }));
}

std::vector<std::vector<std::size_t>> WeightedQuiver::multiplicities() const {
  std::vector<std::vector<std::size_t>> m(size(), std::vector<std::size_t>(size(), 0));
  for (const Arrow& a : arrows_) ++m[a.target][a.source];
  return m;
}

bool is_2_acyclic(const WeightedQuiver& q) {
  const auto m = q.multiplicities();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (m[i][j] > 0 && m[j][i] > 0) return false;
    }
  }
  return true;
}

bool is_strongly_primitive(const WeightedQuiver& q) {
  const auto& w = q.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (std::gcd(w[i], w[j]) != 1) return false;
    }
  }
  return true;
}

WeightedQuiver matrix_to_quiver(const ExchangeMatrix& b) {
  if (!validate(b)) throw Error(ErrorCode::malformed_matrix, "matrix is not skew-symmetrized by D");
  const auto& d = b.skew_symmetrizer();
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::int64_t bij = b.at(i, j);
      if (bij <= 0) continue;
      const std::int64_t g = std::gcd(d[i], d[j]);
      if ((g * bij) % d[j] != 0) {
        throw Error(ErrorCode::malformed_matrix, "entry b_" + std::to_string(i + 1) +
                                                     std::to_string(j + 1) +
                                                     " violates the divisibility condition");
      }
      const std::int64_t count = g * bij / d[j];
      for (std::int64_t m = 1; m <= count; ++m) {
        arrows.push_back(Arrow{"a" + std::to_string(j + 1) + "_" + std::to_string(i + 1) + "_" +
                                   std::to_string(m),
                               j, i});
      }
    }
  }
  return WeightedQuiver(d, std::move(arrows));
}

ExchangeMatrix quiver_to_matrix(const WeightedQuiver& q) {
  if (!is_2_acyclic(q)) throw Error(ErrorCode::not_two_acyclic, "quiver has an oriented 2-cycle");
  const auto& d = q.weights();
  const auto m = q.multiplicities();
  const std::size_t n = q.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] == 0) continue;
      const std::int64_t g = std::gcd(d[i], d[j]);
      const auto count = static_cast<std::int64_t>(m[i][j]);
      rows[i][j] = count * d[j] / g;
      rows[j][i] = -count * d[i] / g;
    }
  }
  return ExchangeMatrix(d, std::move(rows));
}

std::string reversed_arrow_id(const std::string& id) {
  if (!id.empty() && id.back() == '*') return id.substr(0, id.size() - 1);
  return id + "*";
}

std::string composite_arrow_id(const std::string& b, unsigned label, const std::string& a) {
  return "[" + b + "." + std::to_string(label) + "." + a + "]";
}

Premutation premutate_quiver_detailed(const WeightedQuiver& q, std::size_t k) {
  if (k >= q.size()) throw Error(ErrorCode::unknown_vertex, "mutation vertex out of range");
  if (!is_2_acyclic(q)) throw Error(ErrorCode::not_two_acyclic, "quiver has an oriented 2-cycle");

  const auto& d = q.weights();
  const bool primitive = is_strongly_primitive(q);
  const unsigned lcm = static_cast<unsigned>(lcm_of(d));

  Premutation out;
  out.renamed.resize(q.arrows().size());
  std::set<std::string> taken;
  std::vector<Arrow> arrows;
  auto claim = [&](std::string id) {
    while (taken.count(id) > 0) id += "'";
    taken.insert(id);
    return id;
  };

  for (std::size_t idx = 0; idx < q.arrows().size(); ++idx) {
    const Arrow& c = q.arrow(idx);
    if (c.source != k && c.target != k) {
      out.renamed[idx] = claim(c.id);
      arrows.push_back(Arrow{out.renamed[idx], c.source, c.target});
    }
  }
  for (std::size_t bi = 0; bi < q.arrows().size(); ++bi) {
    const Arrow& b = q.arrow(bi);
    if (b.source != k) continue;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
      const Arrow& a = q.arrow(ai);
      if (a.target != k) continue;
      const std::size_t i = b.target;
      const std::size_t j = a.source;
      const unsigned count = std::gcd(d[i], d[j]) * d[k] / (std::gcd(d[i], d[k]) * std::gcd(d[k], d[j]));
      for (unsigned t = 0; t < count; ++t) {
        const unsigned label = primitive ? t * (lcm / d[k]) : t;
        std::string id = claim(composite_arrow_id(b.id, label, a.id));
        out.composites.emplace(std::make_tuple(bi, label, ai), id);
        arrows.push_back(Arrow{std::move(id), j, i});
      }
    }
  }
  for (std::size_t idx = 0; idx < q.arrows().size(); ++idx) {
    const Arrow& c = q.arrow(idx);
    if (c.source == k || c.target == k) {
      out.renamed[idx] = claim(reversed_arrow_id(c.id));
      arrows.push_back(Arrow{out.renamed[idx], c.target, c.source});
    }
  }
  out.quiver = WeightedQuiver(d, std::move(arrows));
  return out;
}

WeightedQuiver premutate_quiver(const WeightedQuiver& q, std::size_t k) {
  return premutate_quiver_detailed(q, k).quiver;
}

WeightedQuiver remove_2cycles(const WeightedQuiver& q) {
  const std::size_t n = q.size();
  std::vector<bool> removed(q.arrows().size(), false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> forward;   // j -> i
      std::vector<std::size_t> backward;  // i -> j
      for (std::size_t idx = 0; idx < q.arrows().size(); ++idx) {
        const Arrow& a = q.arrow(idx);
        if (a.source == j && a.target == i) forward.push_back(idx);
        if (a.source == i && a.target == j) backward.push_back(idx);
      }
      const std::size_t cancel = std::min(forward.size(), backward.size());
      for (std::size_t t = 0; t < cancel; ++t) {
        removed[forward[t]] = true;
        removed[backward[t]] = true;
      }
    }
  }
  std::vector<Arrow> kept;
  for (std::size_t idx = 0; idx < q.arrows().size(); ++idx) {
    if (!removed[idx]) kept.push_back(q.arrow(idx));
  }
  return WeightedQuiver(q.weights(), std::move(kept));
}

WeightedQuiver mutate_quiver(const WeightedQuiver& q, std::size_t k) {
  return remove_2cycles(premutate_quiver(q, k));
}

}  // namespace spm
