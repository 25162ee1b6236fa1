#pragma once

#include <map>

#include "ddimer/graph.hpp"
#include "ddimer/pairings.hpp"
#include "ddimer/rational.hpp"

namespace ddimer {

struct EnumOptions {
    long long cap = 10'000'000;  // partial-state budget
    bool parallel = true;
};

// One double-dimer configuration: an edge multiset with internal degree 2
// and node degree 1, decomposed into node paths, doubled edges and loops.
struct DoubleDimerConfig {
    std::vector<uint8_t> multiplicity;  // per edge, 0/1/2
    Pairing pairing;                    // induced pairing on node labels
    int loops = 0;
    Rat weight;  // prod w^mult * 2^loops
};

// Weighted sum over perfect matchings; 1 for the empty graph.
Rat zd_enumerate(const EmbeddedGraph& g, const EnumOptions& opts = {});
Rat zd_enumerate_serial(const EmbeddedGraph& g, const EnumOptions& opts = {});

// One pass over all double-dimer configurations, keyed by induced pairing.
std::map<Pairing, Rat> all_pairing_sums(const EmbeddedGraph& g, const EnumOptions& opts = {});
std::map<Pairing, Rat> all_pairing_sums_serial(const EmbeddedGraph& g,
                                               const EnumOptions& opts = {});

// Weighted sum over configurations with the given node pairing.
Rat zdd_enumerate(const EmbeddedGraph& g, const Pairing& sigma, const EnumOptions& opts = {});

// Z^DD_sigma / (Z^D)^2; throws ZeroDimerPartition when Z^D = 0.
Rat pr_tilde_oracle(const EmbeddedGraph& g, const Pairing& sigma,
                    const EnumOptions& opts = {});

// Decompose an explicit multiplicity assignment (used by tests).
DoubleDimerConfig decompose_config(const EmbeddedGraph& g,
                                   const std::vector<uint8_t>& multiplicity);

}  // namespace ddimer
