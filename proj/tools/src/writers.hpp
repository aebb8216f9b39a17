#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tomatomp/analytics.hpp"
#include "tomatomp/diagrams.hpp"
#include "tomatomp/mma.hpp"
#include "tomatomp/tomato.hpp"

namespace tomatomp::cli {

// Everything is rendered to strings first so a failing run leaves no files.
std::string labels_csv(const std::vector<std::size_t>& labels);
std::string ranking_csv(const Ranking& r);

/// {"points": [...]} plus "lines" (one diagram per family line) when given.
std::string diagram_json(const PersistenceDiagram& points,
                         const std::vector<PersistenceDiagram>* lines = nullptr);

std::string summands_json(const Decomposition& dec);
std::string match_json(const PersistenceDiagram& a, const PersistenceDiagram& b,
                       const DiagramDistance& dd, double q);
std::string metrics_json(const std::map<std::string, double>& metrics);

/// Scatter of (death, birth) with the diagonal; the band birth - death in
/// (d1, d2) is shaded when both are given.
std::string diagram_svg(const PersistenceDiagram& d, std::optional<double> d1,
                        std::optional<double> d2);

}  // namespace tomatomp::cli
