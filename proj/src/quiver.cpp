#include "strataforge/quiver.hpp"

#include <set>
#include <sstream>

namespace strataforge {

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    throw MalformedError("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    throw MalformedError("unknown arrow '" + name + "'");
}

void Quiver::validate() const {
    std::set<std::string> labels;
    for (const auto& v : vertices)
        if (!labels.insert(v).second) throw MalformedError("duplicate vertex label '" + v + "'");
    std::set<std::string> anames;
    for (const auto& a : arrows) {
        if (!anames.insert(a.name).second) throw MalformedError("duplicate arrow name '" + a.name + "'");
        if (a.source < 0 || a.source >= static_cast<int>(vertices.size()) ||
            a.target < 0 || a.target >= static_cast<int>(vertices.size()))
            throw MalformedError("arrow '" + a.name + "' has an endpoint outside the vertex list");
    }
}

int PathWord::target(const Quiver& q) const {
    int at = source;
    for (int a : arrows) {
        if (q.arrows[a].source != at)
            throw MalformedError("path is not a valid traversal");
        at = q.arrows[a].target;
    }
    return at;
}

bool PathWord::operator<(const PathWord& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;
}

std::string PathWord::to_string(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertices[source];
    std::ostringstream os;
    for (size_t i = 0; i < arrows.size(); ++i) os << (i ? "." : "") << q.arrows[arrows[i]].name;
    return os.str();
}

PathWord concat(const Quiver& q, const PathWord& outer, const PathWord& inner) {
    if (inner.target(q) != outer.source) throw MalformedError("concat: endpoint mismatch");
    PathWord w;
    w.source = inner.source;
    w.arrows = inner.arrows;
    w.arrows.insert(w.arrows.end(), outer.arrows.begin(), outer.arrows.end());
    return w;
}

void AlgebraPresentation::validate() const {
    quiver.validate();
    for (const auto& rel : relations) {
        if (rel.empty()) throw MalformedError("empty relation");
        int s = rel.front().path.source;
        int t = rel.front().path.target(quiver);
        for (const auto& term : rel) {
            if (term.path.length() < 2)
                throw MalformedError("malformed relation: path '" + term.path.to_string(quiver) +
                                     "' has length < 2");
            if (term.path.source != s || term.path.target(quiver) != t)
                throw MalformedError("malformed relation: terms not homogeneous in (source, target)");
        }
    }
}

}  // namespace strataforge
