#pragma once

#include "bchrom/coloring.hpp"

namespace bchrom {

/// A generated extremal graph together with a machine-checked b-coloring
/// certificate for claimed_phi colors. The matching upper-bound theorem
/// turns the certificate into an equality proof, so no exact search is
/// needed to pin phi on these families.
struct GeneratedInstance {
    Graph graph;
    BColoringCertificate certificate;
    int claimed_phi = 0;
};

/// Chain of (t-1)(k-1)+1 copies of the gadget "center vertex whose
/// neighborhood is t-1 disjoint cliques of size k-1", consecutive copies
/// joined by a single edge between non-center vertices. Star-free for t,
/// chi = k, phi = (t-1)(k-1)+1. Requires t >= 3, k >= 2.
GeneratedInstance gen_k1t_extremal(int t, int k);

/// Three layers of k cliques A_i, B_i, C_i with |A_i| = w/(2k-1) and
/// |B_i| = |C_i| = (k-1)w/(2k-1): the A's form one clique, A-B complete,
/// A_i-C_i complete, B_i-C_j complete exactly when i != j. omega = w,
/// theta = k, phi = k^2 w/(2k-1). Requires k >= 2 and (2k-1) | w.
GeneratedInstance gen_clique_partition_extremal(int k, int w);

/// K_{p-1,p-1} minus a (p-2)-matching, plus p-2 pendant vertices attached
/// to one side: bipartite, n = 3p-4, biclique number p-1, max degree p-1,
/// phi = p. Requires p >= 3.
GeneratedInstance gen_bipartite_extremal(int p);

}  // namespace bchrom
