#include "tomatomp/mma.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "tomatomp/error.hpp"
#include "tomatomp/parallel.hpp"

namespace tomatomp {

std::size_t MatchingFunction::matched_count() const {
  return static_cast<std::size_t>(
      std::count_if(image.begin(), image.end(), [](const auto& j) { return j.has_value(); }));
}

MatchingFunction match_consecutive(const PersistenceDiagram& from, const PersistenceDiagram& to,
                                   double q) {
  const DiagramDistance dd = diagram_distance(from, to, q);
  MatchingFunction m;
  m.image.assign(from.size(), std::nullopt);
  for (const auto& [i, j] : dd.correspondence.matched) m.image[i] = j;
  return m;
}

bool strictly_less(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("points live in different dimensions");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] < y[i])) return false;
  }
  return true;
}

CompatibilityReport check_compatibility(const DiagonalLine& from_line,
                                        const PersistenceDiagram& from,
                                        const DiagonalLine& to_line,
                                        const PersistenceDiagram& to,
                                        const MatchingFunction& m) {
  if (m.image.size() != from.size()) throw InputError("matching does not fit the diagram");
  CompatibilityReport report;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!m.image[i]) continue;
    const std::size_t j = *m.image[i];
    if (j >= to.size()) throw InputError("matching points outside the target diagram");
    const Bar a = bar(from_line, from[i]);
    const Bar b = bar(to_line, to[j]);
    const bool comparable = strictly_less(a.birth_end, b.birth_end) ||
                            strictly_less(b.birth_end, a.birth_end) ||
                            strictly_less(a.death_end, b.death_end) ||
                            strictly_less(b.death_end, a.death_end);
    if (comparable) report.violations.emplace_back(i, j);
  }
  report.compatible = report.violations.empty();
  return report;
}

std::optional<std::size_t> Decomposition::point_of(std::size_t summand, std::size_t line) const {
  const Summand& s = summands.at(summand);
  if (!s.spans(line)) return std::nullopt;
  return s.points[line - s.first_line];
}

const DiagramPoint& Decomposition::bar_point(std::size_t summand, std::size_t line) const {
  const auto idx = point_of(summand, line);
  if (!idx) throw InputError("summand is absent on line " + std::to_string(line));
  return diagrams[line][*idx];
}

std::size_t Decomposition::most_prominent_line(std::size_t summand) const {
  const Summand& s = summands.at(summand);
  std::size_t best = s.first_line;
  double best_prom = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const double pr = prominence(diagrams[s.first_line + k][s.points[k]]);
    if (pr > best_prom) {
      best_prom = pr;
      best = s.first_line + k;
    }
  }
  return best;
}

Decomposition assemble_decomposition(LineFamily family, std::vector<PersistenceDiagram> diagrams,
                                     double q) {
  if (family.size() != diagrams.size()) {
    throw InputError("need one diagram per line of the family");
  }
  if (family.size() == 0) throw InputError("a decomposition needs at least one line");
  const std::size_t n_lines = family.size();

  Decomposition dec;
  dec.family = std::move(family);
  dec.diagrams = std::move(diagrams);
  dec.matchings.resize(n_lines - 1);
  std::vector<CompatibilityReport> reports(n_lines - 1);
  parallel_for(n_lines - 1, [&](std::size_t l) {
    dec.matchings[l] = match_consecutive(dec.diagrams[l], dec.diagrams[l + 1], q);
    reports[l] = check_compatibility(dec.family.lines[l], dec.diagrams[l], dec.family.lines[l + 1],
                                     dec.diagrams[l + 1], dec.matchings[l]);
  });
  for (std::size_t l = 0; l + 1 < n_lines; ++l) {
    if (!reports[l].compatible) {
      dec.warnings.push_back("lines " + std::to_string(l) + "-" + std::to_string(l + 1) + ": " +
                             std::to_string(reports[l].violations.size()) +
                             " matched bar pair(s) with strictly comparable endpoints");
    }
  }

  std::vector<Summand> summands;
  for (std::size_t l = 0; l < n_lines; ++l) {
    std::vector<char> has_incoming(dec.diagrams[l].size(), 0);
    if (l > 0) {
      for (const auto& j : dec.matchings[l - 1].image) {
        if (j) has_incoming[*j] = 1;
      }
    }
    for (std::size_t j = 0; j < dec.diagrams[l].size(); ++j) {
      if (has_incoming[j]) continue;
      Summand s{l, {j}};
      std::size_t line = l;
      std::size_t point = j;
      while (line + 1 < n_lines && dec.matchings[line].image[point]) {
        point = *dec.matchings[line].image[point];
        ++line;
        s.points.push_back(point);
      }
      summands.push_back(std::move(s));
    }
  }

  auto max_prom = [&](const Summand& s) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      best = std::max(best, prominence(dec.diagrams[s.first_line + k][s.points[k]]));
    }
    return best;
  };
  std::vector<double> key(summands.size());
  for (std::size_t i = 0; i < summands.size(); ++i) key[i] = max_prom(summands[i]);
  std::vector<std::size_t> order(summands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Summand& sa = summands[a];
    const Summand& sb = summands[b];
    if (sa.first_line != sb.first_line) return sa.first_line < sb.first_line;
    if (key[a] != key[b]) return key[a] > key[b];
    return sa.points.front() < sb.points.front();
  });

  dec.summands.reserve(summands.size());
  for (std::size_t i : order) dec.summands.push_back(std::move(summands[i]));

  dec.summand_of_point.resize(n_lines);
  for (std::size_t l = 0; l < n_lines; ++l) {
    dec.summand_of_point[l].assign(dec.diagrams[l].size(), std::numeric_limits<std::size_t>::max());
  }
  for (std::size_t id = 0; id < dec.summands.size(); ++id) {
    const Summand& s = dec.summands[id];
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      dec.summand_of_point[s.first_line + k][s.points[k]] = id;
    }
  }
  return dec;
}

Decomposition build_decomposition(std::span<const ScalarField> fields, const Graph& g,
                                  const LineFamily& family, double q) {
  std::vector<PersistenceDiagram> diagrams(family.size());
  parallel_for(family.size(), [&](std::size_t l) {
    diagrams[l] = compute_persistence(g, sliced_field(fields, family.lines[l]));
  });
  return assemble_decomposition(family, std::move(diagrams), q);
}

std::vector<InducedPoint> induced_diagram(const Decomposition& dec, std::size_t line) {
  if (line >= dec.diagrams.size()) throw InputError("line index out of range");
  std::vector<InducedPoint> out;
  for (std::size_t j = 0; j < dec.diagrams[line].size(); ++j) {
    out.push_back({dec.summand_of_point[line][j], dec.diagrams[line][j]});
  }
  std::sort(out.begin(), out.end(),
            [](const InducedPoint& a, const InducedPoint& b) { return a.summand < b.summand; });
  return out;
}

std::vector<InducedPoint> induced_diagram(const Decomposition& dec, const DiagonalLine& line) {
  std::vector<InducedPoint> out;
  const auto base = line.base();
  for (std::size_t id = 0; id < dec.summands.size(); ++id) {
    const Interval iv = interval_realization(dec, id);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Box& box : iv.boxes) {
      if (box.lower.size() != base.size()) throw InputError("line dimension does not match");
      double enter = -std::numeric_limits<double>::infinity();
      double leave = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < base.size(); ++i) {
        enter = std::max(enter, box.lower[i] - base[i]);
        leave = std::min(leave, box.upper[i] - base[i]);
      }
      if (enter <= leave) {
        lo = std::min(lo, enter);
        hi = std::max(hi, leave);
      }
    }
    if (lo <= hi) out.push_back({id, DiagramPoint{hi, lo, std::nullopt, false}});
  }
  return out;
}

bool Box::intersects(const Box& other) const {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > other.upper[i] || other.lower[i] > upper[i]) return false;
  }
  return true;
}

Interval interval_realization(const Decomposition& dec, std::size_t summand) {
  const Summand& s = dec.summands.at(summand);
  std::vector<Bar> bars;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const std::size_t l = s.first_line + k;
    bars.push_back(bar(dec.family.lines[l], dec.diagrams[l][s.points[k]]));
  }
  Interval iv;
  if (bars.size() == 1) {
    iv.boxes.push_back({bars[0].death_end, bars[0].birth_end});
    return iv;
  }
  for (std::size_t k = 0; k + 1 < bars.size(); ++k) {
    Box box{bars[k].death_end, bars[k].birth_end};
    for (std::size_t i = 0; i < box.lower.size(); ++i) {
      box.lower[i] = std::min(box.lower[i], bars[k + 1].death_end[i]);
      box.upper[i] = std::max(box.upper[i], bars[k + 1].birth_end[i]);
    }
    iv.boxes.push_back(std::move(box));
  }
  return iv;
}

}  // namespace tomatomp
