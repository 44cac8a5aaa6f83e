#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aeronav/errors.hpp"
#include "aeronav/geometry.hpp"

namespace aeronav {

using NodeId = std::uint64_t;

/// Threshold under which two trajectory graphs become connected when merged.
inline constexpr double kAdjacencyThresholdMeters = 15.0;

/// Cross-graph nodes closer than this are unified into one node on merge.
inline constexpr double kNodeDedupRadiusMeters = 0.5;

inline constexpr double kEdgeWeightTolerance = 1e-6;

struct MemoryNode {
    NodeId id = 0;
    Vec3 position;
    std::set<std::string> captions;
    std::optional<std::vector<double>> embedding;
};

/// Weighted topological graph of visited waypoints. Edges are undirected,
/// keyed by the ordered (min, max) id pair, weight = Euclidean distance
/// between the endpoints.
class MemoryGraph {
public:
    using EdgeKey = std::pair<NodeId, NodeId>;

    const std::map<NodeId, MemoryNode>& nodes() const { return nodes_; }
    const std::map<EdgeKey, double>& edges() const { return edges_; }

    bool empty() const { return nodes_.empty(); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
    const MemoryNode& node(NodeId id) const {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) throw InvalidArgument("no node with id " + std::to_string(id));
        return it->second;
    }

    void add_node(MemoryNode node) {
        if (!node.position.finite()) throw InvalidArgument("node position must be finite");
        auto [it, inserted] = nodes_.emplace(node.id, std::move(node));
        if (!inserted) throw InvalidArgument("duplicate node id " + std::to_string(it->first));
        adjacency_.emplace(it->first, std::vector<std::pair<NodeId, double>>{});
    }

    void add_edge(NodeId a, NodeId b) {
        if (a == b) throw InvalidArgument("self-loop on node " + std::to_string(a));
        const double w = distance(node(a).position, node(b).position);
        EdgeKey key = a < b ? EdgeKey{a, b} : EdgeKey{b, a};
        auto [it, inserted] = edges_.emplace(key, w);
        if (!inserted) return;  // at most one edge per unordered pair
        adjacency_[a].emplace_back(b, w);
        adjacency_[b].emplace_back(a, w);
    }

    /// Neighbors of `id` with edge weights, in insertion order.
    const std::vector<std::pair<NodeId, double>>& neighbors(NodeId id) const {
        static const std::vector<std::pair<NodeId, double>> none;
        auto it = adjacency_.find(id);
        return it == adjacency_.end() ? none : it->second;
    }

    void merge_captions(NodeId id, const std::set<std::string>& captions) {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) throw InvalidArgument("no node with id " + std::to_string(id));
        it->second.captions.insert(captions.begin(), captions.end());
    }

    NodeId max_id() const { return nodes_.empty() ? 0 : nodes_.rbegin()->first; }

private:
    std::map<NodeId, MemoryNode> nodes_;
    std::map<EdgeKey, double> edges_;
    std::map<NodeId, std::vector<std::pair<NodeId, double>>> adjacency_;
};

struct TrajectoryWaypoint {
    Vec3 position;
    std::set<std::string> captions;
};

/// Turn one trajectory into a path graph: a node per waypoint, an edge
/// between consecutive waypoints weighted by their distance.
inline MemoryGraph trajectory_to_graph(const std::vector<TrajectoryWaypoint>& waypoints) {
    if (waypoints.empty()) throw InvalidArgument("trajectory must have at least one waypoint");
    MemoryGraph g;
    for (std::size_t i = 0; i < waypoints.size(); ++i) {
        if (waypoints[i].captions.empty())
            throw InvalidArgument("trajectory waypoint " + std::to_string(i) + " has no captions");
        g.add_node(MemoryNode{static_cast<NodeId>(i), waypoints[i].position, waypoints[i].captions, std::nullopt});
    }
    for (std::size_t i = 1; i < waypoints.size(); ++i)
        g.add_edge(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
    return g;
}

/// Merge `g` into `m`. Node ids must be disjoint. Incoming nodes within the
/// dedup radius of an existing node are unified into it (captions unioned,
/// edges re-pointed); genuinely new nodes then gain an adjacency edge to
/// every existing node strictly closer than `adjacency_threshold`.
inline MemoryGraph merge(const MemoryGraph& m, const MemoryGraph& g,
                         double adjacency_threshold = kAdjacencyThresholdMeters) {
    for (const auto& [id, node] : g.nodes()) {
        if (m.has_node(id))
            throw InvalidArgument("node id collision on merge: " + std::to_string(id));
    }

    MemoryGraph out = m;
    std::map<NodeId, NodeId> remap;       // g id -> id in out
    std::vector<NodeId> inserted_ids;     // g nodes that were not unified

    for (const auto& [gid, gnode] : g.nodes()) {
        // unify against the original m nodes only; ascending id iteration
        // makes distance ties keep the lowest id
        NodeId best_id = 0;
        double best_dist = kNodeDedupRadiusMeters;
        bool found = false;
        for (const auto& [mid, mnode] : m.nodes()) {
            const double d = distance(mnode.position, gnode.position);
            if (d < best_dist) {
                best_dist = d;
                best_id = mid;
                found = true;
            }
        }
        if (found) {
            out.merge_captions(best_id, gnode.captions);
            remap[gid] = best_id;
        } else {
            out.add_node(gnode);
            remap[gid] = gid;
            inserted_ids.push_back(gid);
        }
    }

    for (const auto& [key, weight] : g.edges()) {
        const NodeId a = remap.at(key.first);
        const NodeId b = remap.at(key.second);
        if (a == b) continue;  // edge collapsed by unification
        out.add_edge(a, b);
    }

    for (const NodeId nid : inserted_ids) {
        const Vec3 p = out.node(nid).position;
        for (const auto& [mid, mnode] : m.nodes()) {
            if (distance(mnode.position, p) < adjacency_threshold) out.add_edge(mid, nid);
        }
    }
    return out;
}

/// Fold a finished trajectory into memory. Failed trajectories are ignored;
/// successful ones are re-keyed past the current max id and merged.
inline MemoryGraph record_trajectory(const MemoryGraph& m,
                                     const std::vector<TrajectoryWaypoint>& trajectory,
                                     bool success,
                                     double adjacency_threshold = kAdjacencyThresholdMeters) {
    if (!success) return m;
    MemoryGraph traj = trajectory_to_graph(trajectory);
    const NodeId base = m.empty() ? 0 : m.max_id() + 1;
    MemoryGraph rekeyed;
    for (const auto& [id, node] : traj.nodes()) {
        MemoryNode n = node;
        n.id = base + id;
        rekeyed.add_node(std::move(n));
    }
    for (const auto& [key, weight] : traj.edges())
        rekeyed.add_edge(base + key.first, base + key.second);
    return merge(m, rekeyed, adjacency_threshold);
}

/// Closest node to `position`, ties broken by smallest id. Empty graph
/// yields nullopt.
inline std::optional<std::pair<NodeId, double>> nearest_node(const MemoryGraph& m,
                                                             const Vec3& position) {
    std::optional<std::pair<NodeId, double>> best;
    for (const auto& [id, node] : m.nodes()) {
        const double d = distance(node.position, position);
        if (!best || d < best->second) best = {id, d};  // map order makes ties keep lowest id
    }
    return best;
}

// ---------------------------------------------------------------------------
// Serialization. Versioned JSON document with `nodes` and `edges` arrays.
// ---------------------------------------------------------------------------

inline constexpr int kGraphFormatVersion = 1;

inline nlohmann::json graph_to_json(const MemoryGraph& m) {
    nlohmann::json doc;
    doc["format_version"] = kGraphFormatVersion;
    auto& nodes = doc["nodes"] = nlohmann::json::array();
    for (const auto& [id, node] : m.nodes()) {
        nlohmann::json n;
        n["id"] = id;
        n["position"] = {node.position.x, node.position.y, node.position.z};
        n["captions"] = node.captions;
        if (node.embedding) n["embedding"] = *node.embedding;
        nodes.push_back(std::move(n));
    }
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const auto& [key, weight] : m.edges()) {
        edges.push_back({{"a", key.first}, {"b", key.second}, {"weight", weight}});
    }
    return doc;
}

inline std::string save_graph(const MemoryGraph& m) { return graph_to_json(m).dump(2) + "\n"; }

inline Vec3 vec3_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected a 3-element position array");
    return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline MemoryGraph graph_from_json(const nlohmann::json& doc) {
    if (!doc.contains("format_version") || doc["format_version"].get<int>() != kGraphFormatVersion)
        throw ParseError("unsupported graph format_version");
    MemoryGraph m;
    for (const auto& n : doc.value("nodes", nlohmann::json::array())) {
        MemoryNode node;
        node.id = n.at("id").get<NodeId>();
        node.position = vec3_from_json(n.at("position"));
        for (const auto& c : n.value("captions", nlohmann::json::array()))
            node.captions.insert(c.get<std::string>());
        if (n.contains("embedding")) node.embedding = n["embedding"].get<std::vector<double>>();
        m.add_node(std::move(node));
    }
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
        const NodeId a = e.at("a").get<NodeId>();
        const NodeId b = e.at("b").get<NodeId>();
        const double w = e.at("weight").get<double>();
        if (!m.has_node(a) || !m.has_node(b)) throw ParseError("edge endpoint missing from nodes");
        const double expected = distance(m.node(a).position, m.node(b).position);
        if (std::abs(w - expected) >= kEdgeWeightTolerance)
            throw ParseError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                             " weight inconsistent with endpoint positions");
        m.add_edge(a, b);
    }
    return m;
}

inline MemoryGraph load_graph(const std::string& bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph parse error: ") + e.what(),
                         static_cast<long long>(e.byte));
    }
    return graph_from_json(doc);
}

}  // namespace aeronav
