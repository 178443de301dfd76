// Copyright 2026 The Pauliscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PAULISCOPE_GEOMETRY_H
#define PAULISCOPE_GEOMETRY_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pauliscope/graph.h"
#include "pauliscope/vertex_set.h"

namespace pauliscope {

/// Raised when a constructed incidence structure fails an axiom it must satisfy.
class AxiomViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Points plus lines, each line a set of point indices.
struct PointLineGeometry {
    std::vector<std::string> points;
    std::vector<VertexSet> lines;

    size_t num_points() const {
        return points.size();
    }
    size_t num_lines() const {
        return lines.size();
    }
    std::vector<size_t> lines_through(size_t point) const;
    /// Distinct and on a common line.
    bool collinear(size_t a, size_t b) const;
    /// Two distinct points lie on at most one common line.
    bool is_near_linear() const;
    /// Every point off a line is collinear with exactly one of its points.
    bool satisfies_gq_axiom() const;
    /// Points joined when collinear.
    Graph collinearity_graph() const;
    /// Every line meets `s` in exactly one point or lies inside it.
    bool is_hyperplane(const VertexSet &s) const;
    /// {"points": [...], "lines": [[labels], ...]}.
    nlohmann::json to_json() const;
};

/// A configuration (v_a, e_b): v points, e lines, a lines per point, b points
/// per line, and no two points on two common lines.
bool verify_configuration(const PointLineGeometry &geom, size_t v, size_t e, size_t a, size_t b);

PointLineGeometry fano_plane();
/// Points are the 2-subsets of {0..4}; lines the 3-subsets, containing their pairs.
PointLineGeometry desargues_configuration();

/// AG(2,3) with one parallel class of lines removed: the Pappus (9_3).
PointLineGeometry pappus_configuration();

/// Bipartite point-line incidence graph (points first, then lines).
Graph levi_graph(const PointLineGeometry &geom);

}  // namespace pauliscope

#endif
