#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Vertex coloring: vertex -> color in 0..num_colors-1, every color used by
/// at least one vertex. The class-size histogram (number of classes with
/// exactly j members) lives here because several counting arguments need it.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> assignment);

    int order() const { return static_cast<int>(assignment_.size()); }
    int num_colors() const { return num_colors_; }
    int color_of(int v) const { return assignment_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& assignment() const { return assignment_; }

    std::vector<int> class_sizes() const;                 // indexed by color
    std::vector<std::vector<int>> color_classes() const;  // per color, ascending ids
    std::map<int, int> class_size_histogram() const;      // class size j -> count i_j

    bool operator==(const Coloring&) const = default;

private:
    std::vector<int> assignment_;
    int num_colors_ = 0;
};

/// A coloring together with one designated representative per color: a
/// vertex of that color adjacent to vertices of all other colors.
struct BColoringCertificate {
    Coloring coloring;
    std::vector<int> representatives;  // color -> vertex
};

/// No monochromatic edge. Throws if the assignment does not cover g's vertices.
bool is_proper(const Graph& g, const Coloring& c);

/// Per color, the set of vertices of that color whose neighborhood contains
/// every other color. Throws on an improper coloring.
std::vector<VertexSet> representatives(const Graph& g, const Coloring& c);

/// Certificate if c is proper, uses exactly b colors, and every color class
/// contains a representative (the smallest-id one is designated); nullopt
/// otherwise.
std::optional<BColoringCertificate> is_b_coloring(const Graph& g, const Coloring& c, int b);

/// Re-checks a certificate from scratch (proper, reps well-formed and rainbow).
bool validate_certificate(const Graph& g, const BColoringCertificate& cert);

}  // namespace bchrom
