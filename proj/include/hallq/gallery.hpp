#pragma once

#include "hallq/presentation.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

// Built-in sample algebras with their named extra relations:
//   1: chain 1 -> 2 -> 3 with the length-two composite zero
//   2: chain 1 -> ... -> n with the full composite zero (parameterized)
//   3: square 1 -> {2,3} -> 4 with the two composites identified
//   4: the same square with both composites zero
struct GalleryExample {
    int number = 0;
    int chain_length = 0; // meaningful for sample 2 only
    BoundQuiver quiver;
    std::vector<NCElement> goldens; // the expected extra relations
};

GalleryExample gallery_example(int n, int chain_length = 4);

struct GoldenCheck {
    DimVector degree;
    bool in_slice = false;  // golden lies in the span of generated relations
    bool dim_match = false; // quotient dimension matches the multiset oracle
    int quotient_dim = 0;
    long long expected_dim = 0;
};
struct GoldenReport {
    bool ok = true;
    std::vector<GoldenCheck> checks;
};

// Ideal-slice matching: each golden element must be a member of the
// generated ideal slice of its degree, and the quotient dimension in that
// degree must equal the number of positive-root multisets. Membership is
// checked up to scalar, so presentation differences in normalization or
// bracket order are immaterial.
GoldenReport match_goldens(const GalleryExample& ex, const Presentation& P);

} // namespace hallq
