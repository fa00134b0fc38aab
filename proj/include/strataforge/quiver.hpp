#pragma once

#include <string>
#include <vector>

#include "strataforge/field.hpp"

namespace strataforge {

struct Arrow {
    std::string name;
    int source = -1;
    int target = -1;
};

// Finite quiver with labelled vertices.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    int arrow_index(const std::string& name) const;
    void validate() const;
};

// A path, recorded as its traversal: arrows[0] leaves `source`, each later
// arrow continues where the previous one ended.  Empty arrow list = the
// trivial path at `source`.
struct PathWord {
    int source = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    int target(const Quiver& q) const;
    bool operator==(const PathWord& o) const { return source == o.source && arrows == o.arrows; }
    bool operator<(const PathWord& o) const;  // deglex: length, then source, then arrow sequence
    std::string to_string(const Quiver& q) const;
};

// first `inner`, then `outer`; requires inner's target == outer's source.
PathWord concat(const Quiver& q, const PathWord& outer, const PathWord& inner);

struct RelationTerm {
    Scalar coeff;
    PathWord path;
};

// A linear combination of paths, homogeneous in (source, target), every path
// of length >= 2.
using Relation = std::vector<RelationTerm>;

struct AlgebraPresentation {
    Field field;
    Quiver quiver;
    std::vector<Relation> relations;

    void validate() const;
};

}  // namespace strataforge
