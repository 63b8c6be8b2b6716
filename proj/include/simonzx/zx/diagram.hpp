#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simonzx::zx {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2pi).
inline double canonical_phase(double phase) {
    double r = std::fmod(phase, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

/// Distance between two angles on the circle.
inline double phase_distance(double a, double b) {
    const double d = canonical_phase(a - b);
    return std::min(d, two_pi - d);
}

inline bool phase_is(double phase, double target, double tol = 1e-9) { return phase_distance(phase, target) <= tol; }

enum class VertexKind { boundary, z, x };
enum class EdgeKind { plain, hadamard };

inline EdgeKind toggled(EdgeKind k) { return k == EdgeKind::plain ? EdgeKind::hadamard : EdgeKind::plain; }

struct Vertex {
    VertexKind kind = VertexKind::z;
    double phase = 0.0;

    [[nodiscard]] bool is_spider() const noexcept { return kind != VertexKind::boundary; }
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    int a = 0;
    int b = 0;
    EdgeKind kind = EdgeKind::plain;

    [[nodiscard]] int other(int v) const { return a == v ? b : a; }
    [[nodiscard]] bool is_self_loop() const noexcept { return a == b; }
    [[nodiscard]] bool touches(int v) const noexcept { return a == v || b == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class RewriteError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Open graph of phased Z/X spiders with plain and Hadamard edges.
 *
 * Vertex and edge ids are stable across edits, so rewrites can be addressed
 * by id. Boundary vertices carry the open legs; every boundary belongs to
 * exactly one of the ordered input/output lists.
 */
class ZxDiagram {
public:
    int add_spider(VertexKind kind, double phase = 0.0) {
        if (kind == VertexKind::boundary) throw std::invalid_argument("use add_input/add_output for boundaries");
        const int id = next_vertex_++;
        vertices_.emplace(id, Vertex{kind, canonical_phase(phase)});
        return id;
    }
    int add_z(double phase = 0.0) { return add_spider(VertexKind::z, phase); }
    int add_x(double phase = 0.0) { return add_spider(VertexKind::x, phase); }

    int add_input() {
        const int id = add_boundary();
        inputs_.push_back(id);
        return id;
    }
    int add_output() {
        const int id = add_boundary();
        outputs_.push_back(id);
        return id;
    }

    int add_edge(int a, int b, EdgeKind kind = EdgeKind::plain) {
        require_vertex(a);
        require_vertex(b);
        const int id = next_edge_++;
        edges_.emplace(id, Edge{a, b, kind});
        return id;
    }

    void remove_edge(int e) {
        if (edges_.erase(e) == 0) throw std::out_of_range("no edge " + std::to_string(e));
    }

    /// Removes the vertex with its incident edges. Boundaries are dropped from the leg lists.
    void remove_vertex(int v) {
        require_vertex(v);
        std::erase_if(edges_, [v](const auto& kv) { return kv.second.touches(v); });
        vertices_.erase(v);
        std::erase(inputs_, v);
        std::erase(outputs_, v);
    }

    /// Turns a boundary into a spider in place, keeping its id and edge; removed from the leg lists.
    void close_boundary(int v, VertexKind kind, double phase = 0.0) {
        auto& vert = vertex_mut(v);
        if (vert.kind != VertexKind::boundary) throw std::invalid_argument("not a boundary");
        if (kind == VertexKind::boundary) throw std::invalid_argument("boundary must become a spider");
        vert = Vertex{kind, canonical_phase(phase)};
        std::erase(inputs_, v);
        std::erase(outputs_, v);
    }

    void set_phase(int v, double phase) { vertex_mut(v).phase = canonical_phase(phase); }
    void add_phase(int v, double delta) { set_phase(v, vertex(v).phase + delta); }
    void set_kind(int v, VertexKind kind) {
        auto& vert = vertex_mut(v);
        if (!vert.is_spider() || kind == VertexKind::boundary) throw std::invalid_argument("kind change only between spiders");
        vert.kind = kind;
    }
    void set_edge_kind(int e, EdgeKind kind) { edge_mut(e).kind = kind; }

    /// Reconnects the `from` end of edge e to `to`.
    void reattach(int e, int from, int to) {
        require_vertex(to);
        auto& edge = edge_mut(e);
        if (edge.a == from) {
            edge.a = to;
        } else if (edge.b == from) {
            edge.b = to;
        } else {
            throw std::invalid_argument("edge does not touch vertex");
        }
    }

    [[nodiscard]] bool has_vertex(int v) const { return vertices_.contains(v); }
    [[nodiscard]] bool has_edge(int e) const { return edges_.contains(e); }
    [[nodiscard]] const Vertex& vertex(int v) const {
        auto it = vertices_.find(v);
        if (it == vertices_.end()) throw std::out_of_range("no vertex " + std::to_string(v));
        return it->second;
    }
    [[nodiscard]] const Edge& edge(int e) const {
        auto it = edges_.find(e);
        if (it == edges_.end()) throw std::out_of_range("no edge " + std::to_string(e));
        return it->second;
    }

    [[nodiscard]] const std::map<int, Vertex>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::map<int, Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<int>& inputs() const noexcept { return inputs_; }
    [[nodiscard]] const std::vector<int>& outputs() const noexcept { return outputs_; }
    [[nodiscard]] std::size_t num_legs() const noexcept { return inputs_.size() + outputs_.size(); }

    /// Ids of edges touching v, in id order; a self-loop is listed once.
    [[nodiscard]] std::vector<int> incident_edges(int v) const {
        std::vector<int> out;
        for (const auto& [id, e] : edges_) {
            if (e.touches(v)) out.push_back(id);
        }
        return out;
    }

    /// Edge ends at v; self-loops count twice.
    [[nodiscard]] std::size_t degree(int v) const {
        std::size_t d = 0;
        for (const auto& [id, e] : edges_) d += static_cast<std::size_t>(e.a == v) + static_cast<std::size_t>(e.b == v);
        return d;
    }

    [[nodiscard]] std::vector<int> edges_between(int u, int v) const {
        std::vector<int> out;
        for (const auto& [id, e] : edges_) {
            if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) out.push_back(id);
        }
        return out;
    }

    [[nodiscard]] std::size_t count_spiders(VertexKind kind) const {
        return static_cast<std::size_t>(
            std::count_if(vertices_.begin(), vertices_.end(), [kind](const auto& kv) { return kv.second.kind == kind; }));
    }
    [[nodiscard]] std::size_t num_spiders() const {
        return count_spiders(VertexKind::z) + count_spiders(VertexKind::x);
    }

    [[nodiscard]] bool has_self_loops() const {
        return std::any_of(edges_.begin(), edges_.end(), [](const auto& kv) { return kv.second.is_self_loop(); });
    }

    /// Structural invariants: leg vertices are boundaries of degree one, no self-loops.
    void validate() const {
        std::size_t boundaries = 0;
        for (const auto& [id, v] : vertices_) {
            if (v.kind != VertexKind::boundary) continue;
            ++boundaries;
            if (degree(id) != 1) throw std::logic_error("boundary " + std::to_string(id) + " must have degree 1");
            const bool listed = std::find(inputs_.begin(), inputs_.end(), id) != inputs_.end() ||
                                std::find(outputs_.begin(), outputs_.end(), id) != outputs_.end();
            if (!listed) throw std::logic_error("boundary " + std::to_string(id) + " is not an input or output");
        }
        if (boundaries != num_legs()) throw std::logic_error("leg list contains a non-boundary or duplicate");
        if (has_self_loops()) throw std::logic_error("diagram contains a self-loop");
    }

    /// Restores id counters after deserialization.
    void reserve_ids(int next_vertex, int next_edge) {
        next_vertex_ = std::max(next_vertex_, next_vertex);
        next_edge_ = std::max(next_edge_, next_edge);
    }
    void insert_vertex(int id, Vertex v) {
        if (!vertices_.emplace(id, v).second) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
        vertices_.at(id).phase = canonical_phase(v.phase);
        next_vertex_ = std::max(next_vertex_, id + 1);
    }
    void set_legs(std::vector<int> inputs, std::vector<int> outputs) {
        inputs_ = std::move(inputs);
        outputs_ = std::move(outputs);
    }

    friend bool operator==(const ZxDiagram&, const ZxDiagram&) = default;

private:
    int add_boundary() {
        const int id = next_vertex_++;
        vertices_.emplace(id, Vertex{VertexKind::boundary, 0.0});
        return id;
    }
    void require_vertex(int v) const {
        if (!vertices_.contains(v)) throw std::out_of_range("no vertex " + std::to_string(v));
    }
    Vertex& vertex_mut(int v) {
        auto it = vertices_.find(v);
        if (it == vertices_.end()) throw std::out_of_range("no vertex " + std::to_string(v));
        return it->second;
    }
    Edge& edge_mut(int e) {
        auto it = edges_.find(e);
        if (it == edges_.end()) throw std::out_of_range("no edge " + std::to_string(e));
        return it->second;
    }

    std::map<int, Vertex> vertices_;
    std::map<int, Edge> edges_;
    std::vector<int> inputs_;
    std::vector<int> outputs_;
    int next_vertex_ = 0;
    int next_edge_ = 0;
};

inline const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::boundary: return "B";
        case VertexKind::z: return "Z";
        case VertexKind::x: return "X";
    }
    return "?";
}

}  // namespace simonzx::zx
