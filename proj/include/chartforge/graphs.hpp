#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chartforge/chart.hpp"
#include "chartforge/strands.hpp"

namespace chartforge {

// An abstract planar multigraph with trivalent white vertices and univalent
// black vertices, carried with its rotation system and optional edge
// orientations. Used for the built-in catalog and for enumeration.
struct GraphTemplate {
    struct TVertex {
        bool white = true;
        std::vector<Id> edges_ccw;  // incident edge ids in rotation order
    };
    struct TEdge {
        Id a = kNone, b = kNone;  // vertex ids
        bool oriented = false;
        bool a_to_b = true;
    };

    std::string name;
    // When false, the rotation slot of each terminal edge at its white vertex
    // is not significant (the black-dotted-vertex abbreviation); canonical
    // forms and matching then ignore it.
    bool fixed_slots = false;
    std::vector<TVertex> vertices;
    std::vector<TEdge> edges;
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;

    bool is_terminal_edge(Id e) const {
        return !vertices[edges[e].a].white || !vertices[edges[e].b].white;
    }
    Id white_end(Id e) const {
        return vertices[edges[e].a].white ? edges[e].a : edges[e].b;
    }
    Id other_end(Id e, Id v) const {
        return edges[e].a == v ? edges[e].b : edges[e].a;
    }
    int white_count() const;
    int black_count() const;
    bool has_white_loop() const;
    bool connected() const;
    // V - E + F for the rotation system; 2 means spherical.
    int euler_characteristic() const;
};

GraphTemplate parse_graph(const std::string& text);
GraphTemplate load_graph_file(const std::string& path);
std::string render_graph(const GraphTemplate& t);

// Faces of the template's own embedding, with terminal edges removed: the
// complementary disks of the underlying component. Each face is the cyclic
// list of (vertex, edge_in, edge_out) corners.
struct TemplateFace {
    struct Corner {
        Id vertex;
        Id edge_in;
        Id edge_out;
    };
    std::vector<Corner> corners;
    std::vector<Id> distinct_whites;
    bool embedded_circle = true;  // no edge or vertex repeated on the walk
};

std::vector<TemplateFace> internal_faces(const GraphTemplate& t);

// Which internal faces meet each white vertex corner; corner k of white v is
// the wedge after edges_ccw[k] (terminal edges skipped). Used for terminal
// slot placement.
std::vector<std::vector<Id>> white_corner_faces(
    const GraphTemplate& t, const std::vector<TemplateFace>& faces);

struct ROClass {
    std::string canonical_form;
    bool operator==(const ROClass& o) const {
        return canonical_form == o.canonical_form;
    }
    bool operator<(const ROClass& o) const {
        return canonical_form < o.canonical_form;
    }
};

// Canonical byte string invariant under reflection and global orientation
// reversal; equality of forms is RO-equivalence.
ROClass ro_canonical(const GraphTemplate& t);

GraphTemplate reflect(const GraphTemplate& t);
GraphTemplate reverse_all(const GraphTemplate& t);

// Embedding of a template into gamma(chart, m).
struct TemplateEmbedding {
    std::vector<Id> vertex_to_chart;   // template white -> chart white
    std::vector<Id> edge_to_strand;    // template edge -> strand index
};

std::optional<TemplateEmbedding> contains_template(const Chart& chart, int m,
                                                   const GraphTemplate& t);
// Tries all four RO variants.
std::optional<TemplateEmbedding> contains_template_ro(const Chart& chart,
                                                      int m,
                                                      const GraphTemplate& t);

}  // namespace chartforge
