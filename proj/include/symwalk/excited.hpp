#pragma once

#include <vector>

#include "symwalk/numeric.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

// A skew diagram outer\inner with inner contained in outer box-wise.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in);
    int box_count() const { return outer.size() - inner.size(); }
};

// Number of standard tableaux of lambda, by the hook length formula.
Int dim(const Partition& lambda);

// Boxes of E movable by one excitation: (r,c) with (r+1,c+1) in lambda and
// none of (r+1,c), (r,c+1), (r+1,c+1) in E.
BoxSet free_boxes(const Partition& lambda, const BoxSet& seed);

// Reachability closure of the seed under excitations, deduplicated and in
// canonical order. A seed not contained in lambda has no embedding and yields
// an empty closure (so the corresponding excited sum is 0).
std::vector<BoxSet> excited_diagrams(const Partition& lambda, const BoxSet& seed);
std::vector<BoxSet> excited_diagrams(const Partition& lambda, const Partition& seed);

// S(lambda, E): sum of hook products H(lambda, D) over the closure of E.
Int excited_sum(const Partition& lambda, const BoxSet& seed);
Int excited_sum(const Partition& lambda, const Partition& seed);

// Skew dimension via the hook-product form of the Naruse formula:
// d_{lambda\mu} = d_lambda * S(lambda, mu) / n^{falling |mu|}.
// The division is asserted exact; a remainder is an internal error.
Int skew_dim_naruse(const SkewShape& shape);

// Independent oracle: counts standard tableaux of outer\inner by dynamic
// programming over the chains of partitions from inner to outer, never
// touching hook products or excited diagrams. Throws when the skew shape has
// more than `limit` boxes.
Int skew_dim_oracle(const SkewShape& shape, int limit = 20);

// Standard fillings of an arbitrary box set: bijections to 1..|E| increasing
// towards (r,c+1) and (r+1,c) whenever both boxes are present. Agrees with
// skew_dim_oracle on skew shapes; used as the second, independent oracle path
// and for slicings whose pieces are not Young diagrams.
Int standard_fillings(const BoxSet& boxes, int limit = 24);

}  // namespace symwalk
