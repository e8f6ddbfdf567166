#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace chartforge {

using Id = int32_t;
constexpr Id kNone = -1;

enum class VertexKind { Black, Crossing, White, Phantom };

inline int expected_degree(VertexKind k) {
    switch (k) {
        case VertexKind::Black: return 1;
        case VertexKind::Crossing: return 4;
        case VertexKind::White: return 6;
        case VertexKind::Phantom: return 2;
    }
    return 0;
}

enum class Direction { Inward, Outward };

inline Direction opposite(Direction d) {
    return d == Direction::Inward ? Direction::Outward : Direction::Inward;
}

struct Dart {
    Id vertex = kNone;
    Id edge = kNone;
};

struct Vertex {
    VertexKind kind = VertexKind::Black;
    std::vector<Id> rotation;  // dart ids, counterclockwise
};

struct Edge {
    int label = 0;
    Id tail = kNone;  // dart outward at its vertex
    Id head = kNone;  // dart inward at its vertex
};

// Where a connected component sits on the sphere. parent_anchor names a dart
// of another component whose face orbit hosts this component; absent means the
// root region. outer_anchor is a dart of this component lying on the orbit
// that faces the host region.
struct Placement {
    std::optional<Id> parent_anchor;
    Id outer_anchor = kNone;
};

struct Chart {
    int degree_n = 2;
    std::vector<Dart> darts;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::vector<std::string> dart_names;
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;

    // component id -> placement; component ids assigned by component_of().
    std::vector<Placement> placements;

    // Face anchor of the point at infinity; absent = root region.
    std::optional<Id> infinity_anchor;

    Id twin(Id dart) const {
        const Edge& e = edges[darts[dart].edge];
        return e.tail == dart ? e.head : e.tail;
    }
    Direction dart_direction(Id dart) const {
        return edges[darts[dart].edge].tail == dart ? Direction::Outward
                                                    : Direction::Inward;
    }
    int dart_label(Id dart) const { return edges[darts[dart].edge].label; }

    Id rotation_next(Id dart) const;
    Id rotation_prev(Id dart) const;
    // Next dart along the face orbit keeping the face on the left.
    Id face_next(Id dart) const { return rotation_next(twin(dart)); }

    bool is_phantom(Id vertex) const {
        return vertices[vertex].kind == VertexKind::Phantom;
    }

    Id add_vertex(VertexKind kind, const std::string& name = "");
    Id add_dart(Id vertex, const std::string& name = "");
    // Appends darts to the vertices' rotations.
    Id add_edge(int label, Id tail_vertex, Id head_vertex,
                const std::string& name = "");
};

// Connected components of the stored graph (phantoms included).
struct Components {
    std::vector<Id> vertex_component;   // vertex -> component id
    std::vector<std::vector<Id>> members;  // component -> vertex ids
    int count() const { return static_cast<int>(members.size()); }
};

Components components(const Chart& chart);

// One face orbit of a single component's rotation system.
struct Orbit {
    std::vector<Id> darts;  // cyclic
    Id component = kNone;
};

// A face of the composed spherical embedding. Every face owns one orbit per
// boundary cycle: the defining cycle of its own component (absent for the
// root region) plus the outer cycles of the components placed in it.
struct Face {
    std::vector<Id> orbits;
    std::vector<Id> components_inside;
    bool is_root = false;
};

struct Embedding {
    Components comps;
    std::vector<Orbit> orbits;
    std::vector<Id> dart_orbit;    // dart -> orbit id
    std::vector<Id> orbit_face;    // orbit -> face id
    std::vector<Id> outer_orbit;   // component -> its outer orbit
    std::vector<Face> faces;       // face 0 is the root region
    Id infinity_face = 0;

    Id face_of_dart(Id dart) const { return orbit_face[dart_orbit[dart]]; }
};

struct EmbeddingError {
    std::string message;
};

// Builds the composed embedding; returns an error for placement cycles or
// dangling anchors.
std::optional<EmbeddingError> build_embedding(const Chart& chart,
                                              Embedding& out);
Embedding embedding_or_throw(const Chart& chart);

// (w, -f): white-vertex count and minus the free-strand count.
std::pair<int, int> complexity(const Chart& chart);

struct SubgraphView {
    int label = 0;
    std::vector<Id> edges;
    std::vector<Id> whites;
    std::vector<Id> blacks;
    std::vector<Id> crossings;  // degree-2 pass-throughs in the view
};

SubgraphView gamma(const Chart& chart, int label);

struct ChartType {
    int m = 0;
    std::vector<int> counts;
};

std::optional<ChartType> chart_type(const Chart& chart);

// Distinct labels of the chart's white vertices, and per-white label pair.
std::pair<int, int> white_labels(const Chart& chart, Id white);

int euler_vertex_count(const Chart& chart);
int euler_component_count(const Chart& chart);

}  // namespace chartforge
