#ifndef D2TF_SEARCH_HPP
#define D2TF_SEARCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "d2tf/graph.hpp"
#include "d2tf/properties.hpp"

namespace d2tf {

struct SearchConfig {
    int n_max = 13;
    int s = 2;
    int t = 3;
    bool verify_theorems = true;  // run the degree oracles on every witness
    int workers = 1;
};

struct WitnessRecord {
    int n = 0;
    std::string graph6;  // canonical form
    int edges = 0;
    std::vector<std::pair<int, int>> degrees;  // (degree, multiplicity), ascending
    GirthClass girth = GirthClass::other;
    std::uint64_t aut_order = 1;
    int orbit_count = 1;
};

struct CensusRow {
    int n = 0;
    int edges = 0;
    std::vector<std::pair<int, int>> degrees;
    GirthClass girth = GirthClass::other;
    std::uint64_t aut_min = 1, aut_max = 1;
    int orbit_min = 1, orbit_max = 1;
    int count = 0;
};

struct SearchResult {
    std::vector<WitnessRecord> witnesses;  // sorted by (n, graph6)
    std::vector<CensusRow> census;         // grouped by (n, edges, degrees, girth)
    std::vector<int> counts_per_order;     // index n
    std::uint64_t nodes_explored = 0;
    std::uint64_t theorem_violations = 0;
};

// Isomorph-free enumeration of all (s,t)-witnesses with at most n_max
// vertices, by canonical augmentation over connected triangle-free
// K_{s,t}-free graphs.
SearchResult enumerate_witnesses(const SearchConfig& cfg);

std::vector<std::pair<int, int>> degree_multiset(const Graph& g);

// Census rows regrouped from records (used by corpus verification too).
std::vector<CensusRow> census_rows(const std::vector<WitnessRecord>& records);

// All witness-preserving single edge rotations g - uv + uw, one
// representative per isomorphism class.
std::vector<Graph> edge_rotation_neighbors(const Graph& g, int s, int t);

// All witness-preserving Ryser switches (-uv -wx +uw +vx), one
// representative per isomorphism class.
std::vector<Graph> ryser_switch_neighbors(const Graph& g, int s, int t);

struct ClosureOptions {
    bool rotations = true;
    bool switches = true;
    bool induced_subgraphs = true;  // single-vertex deletions, iterated
    int s = 2;
    int t = 3;
    std::size_t max_graphs = 100000;
    std::uint64_t max_expansions = 1000000;
};

struct ClosureResult {
    std::map<std::string, Graph> members;  // canonical form -> graph
    bool truncated = false;
};

// Breadth-first fixpoint of the chosen operations over the witness class.
ClosureResult closure(const std::vector<Graph>& seeds, const ClosureOptions& opts);

}  // namespace d2tf

#endif
