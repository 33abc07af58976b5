#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1b/bundles.hpp"
#include "p1b/links.hpp"

namespace p1b {

// Classification flags of the connected automorphism group of a bundle:
// maximal (no equivariant map enlarges it), stiff (every equivariant
// birational self-map to another bundle is an isomorphism of bundles),
// superstiff (the identity is the only equivariant link). The reason tag
// names the arithmetic condition that decided the flags.
struct Verdict {
    bool maximal = false;
    bool stiff = false;
    bool superstiff = false;
    std::string reason;

    std::string glyphs() const; // " M", " M S", " M S SS" or ""
};

struct ReductionResult {
    BundleDesc target;
    std::vector<LinkStep> chain;
};

// Identify a canonical datum with a named family where possible: zero
// data are decomposable, a single constant row k with c = a*k + 2 is an
// Umemura bundle, and rows z^i over F_0 with c = b + 2 form the pull-back
// of the Schwarzenberger bundle.
std::optional<BundleDesc> recognize(const CanonicalP& p);

Verdict verdict(const BundleDesc& desc);

// Deterministic chain of forward-equivariant steps ending at a bundle
// whose group is maximal; empty chain when desc is already maximal.
ReductionResult maximal_model(const BundleDesc& desc);

struct LinkGraph {
    struct Node {
        BundleDesc desc;
        Verdict verdict;
    };
    std::vector<Node> nodes;  // sorted by descriptor
    std::vector<LinkStep> edges;

    std::string to_dot() const;
};

// All descriptors reachable from desc by at most `radius` forward-
// equivariant steps, with every forward-equivariant edge between them.
LinkGraph link_graph(const BundleDesc& desc, long radius);

// All valid descriptors of the five named families with a <= a_max,
// b <= b_max, |c| <= c_abs_max, each with its verdict, sorted by
// (family, a, b, c).
std::vector<std::pair<BundleDesc, Verdict>> enumerate_bundles(long a_max, long b_max,
                                                              long c_abs_max);

} // namespace p1b
