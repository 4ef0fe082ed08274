#pragma once

#include <string>
#include <vector>

#include "xfc/gadget.hpp"
#include "xfc/matrix.hpp"

namespace xfc {

/// Result of the gadget-based UDISJ embedding. For the template K_t, the
/// matrix N(a,b) = M(G(T[a]), S(b)) + M(smallgadget(T[a]), S(b)) built from
/// exact slack entries alpha(·) − |V(·)∩S(b)| equals (1 − |a∩b|)^2 on all
/// pairs, and in particular matches UDISJ(t) wherever |a∩b| <= 1.
struct EmbedResult {
    RatMatrix N;  // rows: nonempty a ⊆ [t]; cols: all b ⊆ [t]

    // provenance: the two slack rows and the column witness per index
    std::vector<std::vector<int>> row_gadget_vertices;  // V(G(T[a]))
    std::vector<std::vector<int>> row_small_vertices;   // V(smallgadget(T[a]))
    std::vector<std::vector<int>> col_stable_sets;      // S(b)
};

/// Constructs and verifies the embedding. Throws IdentityViolation with a
/// witness pair (a, b) on any mismatch; that signals an implementation bug.
EmbedResult embed_udisj_via_gadget(const GadgetGraph& gg);

}  // namespace xfc
