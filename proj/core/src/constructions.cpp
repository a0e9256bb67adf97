#include "dirmet/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dirmet {

FiniteDSpace reverse(const FiniteDSpace& space) {
  std::vector<Edge> edges;
  edges.reserve(space.edges().size());
  for (const Edge& e : space.edges()) edges.push_back({e.dst, e.src, e.length});
  return FiniteDSpace(space.labels(), space.base(), std::move(edges));
}

FiniteDSpace disjoint_union(const FiniteDSpace& a, const FiniteDSpace& b) {
  const std::size_t na = a.size();
  const std::size_t n = na + b.size();
  ExtendedDistanceMatrix base(n, ExtReal::infinity());
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) base(i, j) = a.base()(i, j);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      base(na + i, na + j) = b.base()(i, j);
    }
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.push_back({na + e.src, na + e.dst, e.length});
  }
  return FiniteDSpace(std::move(labels), BaseMetric(std::move(base)),
                      std::move(edges));
}

FiniteDSpace product(const FiniteDSpace& a, const FiniteDSpace& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  auto at = [nb](std::size_t i, std::size_t j) { return i * nb + j; };

  ExtendedDistanceMatrix base(na * nb);
  std::vector<std::string> labels(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      labels[at(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
      for (std::size_t i2 = 0; i2 < na; ++i2) {
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          base(at(i, j), at(i2, j2)) = a.base()(i, i2) + b.base()(j, j2);
        }
      }
    }
  }

  std::vector<Edge> edges;
  for (const Edge& ea : a.edges()) {
    for (std::size_t j = 0; j < nb; ++j) {
      edges.push_back({at(ea.src, j), at(ea.dst, j), ea.length});
    }
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (const Edge& eb : b.edges()) {
      edges.push_back({at(i, eb.src), at(i, eb.dst), eb.length});
    }
  }
  for (const Edge& ea : a.edges()) {
    for (const Edge& eb : b.edges()) {
      edges.push_back(
          {at(ea.src, eb.src), at(ea.dst, eb.dst), ea.length + eb.length});
    }
  }
  return FiniteDSpace(std::move(labels), BaseMetric(std::move(base)),
                      std::move(edges));
}

QuotientResult quotient(const FiniteDSpace& space,
                        const std::vector<std::vector<std::size_t>>& classes) {
  const std::size_t n = space.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, kUnset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw std::invalid_argument("quotient: class " + std::to_string(c) +
                                  " is empty");
    }
    for (std::size_t p : classes[c]) {
      if (p >= n) {
        throw std::invalid_argument("quotient: point " + std::to_string(p) +
                                    " is out of range");
      }
      if (class_of[p] != kUnset) {
        throw std::invalid_argument("quotient: point " + std::to_string(p) +
                                    " appears in two classes");
      }
      class_of[p] = c;
    }
  }
  if (std::find(class_of.begin(), class_of.end(), kUnset) != class_of.end()) {
    throw std::invalid_argument("quotient: classes do not cover every point");
  }

  // Chain metric: shortest paths on the class graph whose arc weights are
  // the closest base distances between members.
  const std::size_t nc = classes.size();
  ExtendedDistanceMatrix chain(nc);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const std::size_t cp = class_of[p];
      const std::size_t cq = class_of[q];
      if (cp == cq) continue;
      const ExtReal d = space.base()(p, q);
      if (d < chain(cp, cq)) chain.set_symmetric(cp, cq, d);
    }
  }
  for (std::size_t m = 0; m < nc; ++m) {
    for (std::size_t i = 0; i < nc; ++i) {
      const ExtReal im = chain(i, m);
      if (im.is_infinite()) continue;
      for (std::size_t j = 0; j < nc; ++j) {
        const ExtReal via = im + chain(m, j);
        if (via < chain(i, j)) chain(i, j) = via;
      }
    }
  }

  // Merge classes at chain distance zero; representatives are the first
  // class of each group in index order.
  std::vector<std::size_t> group(nc, kUnset);
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c < nc; ++c) {
    if (group[c] != kUnset) continue;
    group[c] = reps.size();
    for (std::size_t d = c + 1; d < nc; ++d) {
      if (group[d] == kUnset && chain(c, d).value() <= 0.0) group[d] = reps.size();
    }
    reps.push_back(c);
  }

  const std::size_t ng = reps.size();
  ExtendedDistanceMatrix base(ng);
  std::vector<std::string> labels(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    const auto& members = classes[reps[g]];
    labels[g] = space.label(*std::min_element(members.begin(), members.end()));
    for (std::size_t h = g + 1; h < ng; ++h) {
      base.set_symmetric(g, h, chain(reps[g], reps[h]));
    }
  }

  std::vector<std::size_t> point_group(n);
  for (std::size_t p = 0; p < n; ++p) point_group[p] = group[class_of[p]];

  std::vector<Edge> edges;
  for (const Edge& e : space.edges()) {
    const std::size_t s = point_group[e.src];
    const std::size_t t = point_group[e.dst];
    if (s != t) edges.push_back({s, t, e.length});
  }
  return {FiniteDSpace(std::move(labels), BaseMetric(std::move(base)),
                       std::move(edges)),
          std::move(point_group)};
}

}  // namespace dirmet
