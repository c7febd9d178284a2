#ifndef D2TF_CANONICAL_HPP
#define D2TF_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "d2tf/graph.hpp"

namespace d2tf {

struct CanonicalReport {
    std::string canonical_form;  // graph6 of the canonically relabeled graph
    std::uint64_t aut_order = 1;
    int orbit_count = 1;
};

// Full output of the canonizer. `labeling` maps each vertex to its canonical
// position; `orbit` maps each vertex to the smallest vertex in its
// automorphism orbit; `generators` generate the full automorphism group.
// aut_order saturates at UINT64_MAX for pathological inputs (aut_order_exact
// then reports false); every graph in this problem domain stays far below.
struct CanonicalResult {
    std::string form;
    std::vector<int> labeling;
    std::uint64_t aut_order = 1;
    bool aut_order_exact = true;
    std::vector<int> orbit;
    int orbit_count = 1;
    std::vector<std::vector<int>> generators;

    CanonicalReport report() const { return {form, aut_order, orbit_count}; }
};

CanonicalResult canonicalize_full(const Graph& g);
CanonicalReport canonicalize(const Graph& g);

// Convenience: canonical form string only.
std::string canonical_form(const Graph& g);

}  // namespace d2tf

#endif
