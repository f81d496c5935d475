#include "grouprho/centroid.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "grouprho/error.hpp"

namespace grouprho {

namespace {

// Undirected edge {g, g.l}, stored from the smaller endpoint.
using Edge = std::tuple<std::uint64_t, std::uint64_t, std::uint8_t>;

Edge make_edge(std::uint64_t from, Letter l, std::uint64_t to) {
  if (from < to || (from == to && l.code() < l.inverse().code())) return {from, to, l.code()};
  return {to, from, l.inverse().code()};
}

// Shared construction over a navigator with step(v, l) -> v.l.
template <typename Id, typename Step>
std::vector<Id> build_centroid(const std::vector<Id>& path, const std::vector<Letter>& labels,
                               const std::vector<Word>& relator_words, Step step) {
  std::set<Edge> geodesic;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    geodesic.insert(make_edge(path[i], labels[i], path[i + 1]));
  }
  std::vector<Id> out(path.begin(), path.end());
  std::vector<Id> cycle;
  for (Id u : path) {
    for (const Word& w : relator_words) {
      // A qualifying cycle shares an edge with the geodesic, so some rotation
      // of it starts with a geodesic edge at a geodesic vertex.
      Id first = step(u, w[0]);
      if (!geodesic.count(make_edge(u, w[0], first))) continue;
      cycle.assign(1, u);
      std::set<Edge> shared;
      Id v = u;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Id next = i == 0 ? first : step(v, w[i]);
        Edge e = make_edge(v, w[i], next);
        if (geodesic.count(e)) shared.insert(e);
        v = next;
        cycle.push_back(v);
      }
      if (v != u) throw Error("relator path does not close; the word problem data is inconsistent");
      if (6 * shared.size() >= w.size()) out.insert(out.end(), cycle.begin(), cycle.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct OracleGeodesic {
  std::vector<ElementId> path;
  std::vector<Letter> labels;
};

OracleGeodesic oracle_geodesic(GroupOracle& oracle, ElementId x, ElementId y) {
  OracleGeodesic g;
  Word label = oracle.normal_form(oracle.multiply(oracle.inverse(x), y));
  g.path.push_back(x);
  for (std::size_t i = 0; i < label.size(); ++i) {
    g.labels.push_back(label[i]);
    g.path.push_back(oracle.step(g.path.back(), label[i]));
  }
  return g;
}

}  // namespace

std::vector<std::uint32_t> centroid_set(const BallGraph& ball, const Presentation& p,
                                        std::uint32_t x, std::uint32_t y) {
  std::vector<std::uint32_t> path = shortlex_geodesic(ball, x, y);
  std::vector<Letter> labels;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    for (std::size_t c = 0; c < ball.letter_count; ++c) {
      Letter l = Letter::from_code(static_cast<std::uint8_t>(c));
      if (ball.edge(path[i], l) == static_cast<std::int32_t>(path[i + 1])) {
        labels.push_back(l);
        break;
      }
    }
  }
  auto step = [&](std::uint32_t v, Letter l) -> std::uint32_t {
    std::int32_t t = ball.edge(v, l);
    if (t == BallGraph::kNoEdge) throw Error("ball too small for the centroid set");
    return static_cast<std::uint32_t>(t);
  };
  return build_centroid(path, labels, symmetrize(p).distinct_words, step);
}

std::vector<ElementId> centroid_set(GroupOracle& oracle, const Presentation& p, ElementId x,
                                    ElementId y) {
  OracleGeodesic g = oracle_geodesic(oracle, x, y);
  auto step = [&](ElementId v, Letter l) { return oracle.step(v, l); };
  return build_centroid(g.path, g.labels, symmetrize(p).distinct_words, step);
}

CrReport check_cr(GroupOracle& oracle, const Presentation& p, std::size_t r_test) {
  CrReport report;
  report.r_test = r_test;
  const std::vector<Word> words = symmetrize(p).distinct_words;
  auto step = [&](ElementId v, Letter l) { return oracle.step(v, l); };
  auto centroid = [&](ElementId x, ElementId y) {
    OracleGeodesic g = oracle_geodesic(oracle, x, y);
    return build_centroid(g.path, g.labels, words, step);
  };

  BallGraph ball = build_ball(oracle, r_test);
  const ElementId e = oracle.identity();
  auto fail = [&](char property, std::string detail, ElementId y, ElementId z) {
    report.passes = false;
    report.violation = CrViolation{property, std::move(detail), Word(), oracle.normal_form(y),
                                   oracle.normal_form(z)};
  };

  for (ElementId y : ball.elements) {
    ++report.pairs;
    std::vector<ElementId> c = centroid(e, y);
    report.max_set_size = std::max(report.max_set_size, c.size());
    if (!std::binary_search(c.begin(), c.end(), e)) {
      fail('a', "x is not in C(x, y)", y, y);
      return report;
    }
    std::vector<std::size_t> from_x;
    for (ElementId g : c) from_x.push_back(oracle.length(g));
    std::sort(from_x.begin(), from_x.end());
    for (std::size_t i = 0; i < from_x.size(); ++i) {
      // the first i+1 points lie in B(x, from_x[i])
      std::size_t r = from_x[i];
      if (i + 1 < from_x.size() && from_x[i + 1] == r) continue;
      if (i + 1 > (2 * r + 1) * (2 * r + 1)) {
        fail('c', "|C(x, y) n B(x, " + std::to_string(r) + ")| = " + std::to_string(i + 1), y, y);
        return report;
      }
    }
    std::size_t diam = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) diam = std::max(diam, oracle.distance(c[i], c[j]));
    }
    std::size_t d = oracle.length(y);
    if (diam > 5 * d) {
      fail('d', "diam C(x, y) = " + std::to_string(diam) + " > 5 d(x, y) = " + std::to_string(5 * d), y, y);
      return report;
    }
    if (d > 0 && diam * report.max_diameter_ratio_den > report.max_diameter_ratio_num * d) {
      report.max_diameter_ratio_num = diam;
      report.max_diameter_ratio_den = d;
    }
  }

  for (ElementId y : ball.elements) {
    for (ElementId z : ball.elements) {
      ++report.triples;
      OracleGeodesic xy = oracle_geodesic(oracle, e, y);
      OracleGeodesic yz = oracle_geodesic(oracle, y, z);
      OracleGeodesic zx = oracle_geodesic(oracle, z, e);
      std::unordered_set<ElementId> a(xy.path.begin(), xy.path.end());
      std::unordered_set<ElementId> ab;
      for (ElementId g : yz.path) {
        if (a.count(g)) ab.insert(g);
      }
      bool met = false;
      for (ElementId g : zx.path) met = met || ab.count(g);
      if (met) continue;
      ++report.cycle_fallbacks;
      std::vector<ElementId> c1 = centroid(e, y), c2 = centroid(y, z), c3 = centroid(z, e);
      std::vector<ElementId> c12, c123;
      std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(c12));
      std::set_intersection(c12.begin(), c12.end(), c3.begin(), c3.end(), std::back_inserter(c123));
      if (c123.empty()) {
        fail('b', "C(x, y) n C(y, z) n C(z, x) is empty", y, z);
        return report;
      }
    }
  }
  return report;
}

nlohmann::json to_json(const CrReport& r, const Alphabet& alphabet) {
  nlohmann::json j{{"passes", r.passes},
                   {"r_test", r.r_test},
                   {"pairs", r.pairs},
                   {"triples", r.triples},
                   {"cycle_fallbacks", r.cycle_fallbacks},
                   {"max_set_size", r.max_set_size},
                   {"max_diameter_ratio", std::to_string(r.max_diameter_ratio_num) + "/" +
                                              std::to_string(r.max_diameter_ratio_den)},
                   {"Q", "(2r+1)^2"},
                   {"R", "5r"}};
  if (r.violation) {
    j["violation"] = {{"property", std::string(1, r.violation->property)},
                      {"detail", r.violation->detail},
                      {"x", ""},
                      {"y", to_string(r.violation->y, alphabet)},
                      {"z", to_string(r.violation->z, alphabet)}};
  }
  return j;
}

}  // namespace grouprho
