#pragma once

#include <array>
#include <string>
#include <vector>

#include "disthom/errors.hpp"

namespace disthom {

// Oriented classical link diagram from a signed PD code.
//
// Each crossing lists its four edge ends counterclockwise starting at the
// incoming under-edge.  With both strands drawn diagonally this puts the
// slots at SE, NE, NW, SW for a positive crossing: the over strand runs
// slot 3 -> slot 1.  Negative crossings run the over strand slot 1 -> slot 3.
// Edges are segments between consecutive crossing passages; arcs (what
// colorings see) are unions of edges glued through over-passages.
// Crossing-free unknot components are counted separately and own no edges.
struct Crossing {
    int sign = +1;
    std::array<int, 4> e = {-1, -1, -1, -1};

    int under_in() const { return e[0]; }
    int under_out() const { return e[2]; }
    int over_in() const { return sign > 0 ? e[3] : e[1]; }
    int over_out() const { return sign > 0 ? e[1] : e[3]; }
    bool slot_incoming(int s) const { return s == 0 || s == (sign > 0 ? 3 : 1); }
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    int n_edges = 0;    // edges meeting crossings
    int n_circles = 0;  // crossing-free unknot components

    // derived by analyze()
    int n_arcs = 0;                            // crossing arcs first, then one arc per circle
    std::vector<int> edge_arc;                 // edge -> arc
    std::vector<int> circle_arc;               // circle -> arc
    int n_regions = 0;
    std::vector<std::array<int, 4>> quadrant;  // region in quadrant s (between slots s and s+1)
    std::vector<int> edge_left, edge_right;    // regions beside each edge
    std::vector<int> circle_inside;            // region bounded by each circle (left of its orientation)
    int n_components = 0;

    int under_in_arc(int c) const { return edge_arc[crossings[c].under_in()]; }
    int under_out_arc(int c) const { return edge_arc[crossings[c].under_out()]; }
    int over_arc(int c) const { return edge_arc[crossings[c].over_in()]; }

    // quadrant from which the region rule flows forward through both strands
    int source_region(int c) const { return quadrant[c][crossings[c].sign > 0 ? 0 : 1]; }

    bool has_negative_crossing() const;
    int writhe() const;

    void analyze();  // arcs, regions, Euler validation
};

// Text format, one item per line:
//   X+ a b c d   crossing, edge labels counterclockwise from the under-in slot
//   X- a b c d
//   circle       crossing-free unknot component
// '#' starts a comment.  Labels are arbitrary nonnegative integers; each must
// occur exactly twice.
LinkDiagram parse_diagram(const std::string& text);
std::string diagram_to_pd(const LinkDiagram& d);

// closure of a braid word on `strands` strands; word entries +i / -i stand
// for the i-th positive / negative generator (the strand moving rightward
// passes over)
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace disthom
