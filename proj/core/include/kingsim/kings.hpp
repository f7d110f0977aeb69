#pragma once

#include <vector>

#include "kingsim/oracle.hpp"
#include "kingsim/tournament.hpp"

namespace kingsim {

/// Closed second out-neighbourhood N++[v] = {v} u N+(v) u N+(N+(v)),
/// computed from full ground truth (never query-billed).
std::vector<Vertex> second_out_neighborhood(const Tournament& t, Vertex v);

/// |N++[v]|
std::size_t control_count(const Tournament& t, Vertex v);

/// |N++[v]| / n
double control_fraction(const Tournament& t, Vertex v);

/// true iff v controls every vertex.
bool is_king(const Tournament& t, Vertex v);

/// Maximum out-degree vertex, ties to the smallest index. Always a king;
/// serves as the full-reveal baseline king-finder.
Vertex mod_vertex(const Tournament& t);

/// |N++[v]| over revealed arcs only. Sound: never exceeds the ground-truth
/// value when the oracle wraps a fixed tournament.
std::size_t revealed_control_lower_bound(const RevealedDigraph& r, Vertex v);

}  // namespace kingsim
