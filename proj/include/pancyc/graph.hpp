#pragma once

// Small dense graphs as fixed-width adjacency bitsets. Everything downstream
// (property checks, the rotation engine, the oracles) assumes the vertex
// count fits in one machine word, which keeps neighbourhood algebra at a few
// instructions per query.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pancyc/errors.hpp"

namespace pancyc {

inline constexpr int kMaxVertices = 64;

class Graph {
  public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool adj(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;  // ascending

    void add_edge(int u, int v);
    Graph with_edge(int u, int v) const;

    std::uint64_t vertex_mask() const;  // all n bits set

    bool operator==(const Graph&) const = default;

  private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

// Deterministic, portable generator (splitmix64). Instance i of a batch run
// is seeded with seed ^ i so streams are independent but reproducible.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1), 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Edge-list text format:
//   line 1: "n m"
//   then m lines "u v"
// '#' starts a comment, blank lines are ignored. Vertices are 0-based and
// must be < n. Self-loops are rejected; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);  // canonical: sorted "u v", u < v

// FNV-1a over the canonical serialization bytes. Stable across platforms.
std::uint64_t graph_hash(const Graph& g);

Graph generate_gnp(int n, double p, std::uint64_t seed);
// Rejection-sample G(n,p) until min degree >= min_deg (at most 10000 draws,
// consuming seed, seed+1, ... deterministically).
Graph generate_gnp_min_degree(int n, double p, std::uint64_t seed, int min_deg);
Graph generate_complete_bipartite(int a, int b);  // side A = [0,a), side B = [a,a+b)

int min_degree(const Graph& g);

struct Bipartition {
    std::vector<int> side_of;  // 0 or 1 per vertex
};

// Proper 2-colouring if one exists, otherwise a simple odd cycle as a vertex
// sequence. Works per component; a graph with no edges is bipartite.
std::variant<Bipartition, std::vector<int>> two_color(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace pancyc
