#ifndef K3CI_ERRORS_HPP
#define K3CI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k3ci {

// Thrown when an ambient is constructed from an empty or non-positive
// dimension list.
struct invalid_ambient_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when two classes or bundles over different ambients are combined.
// There is no implicit promotion between Chow rings.
struct ambient_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct index_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Bundle rank exceeds the ambient dimension (no complete intersection).
struct invalid_rank_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quantity that must be even (a K3 self-intersection, a degree 2g-2)
// came out odd.
struct parity_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An exact-arithmetic identity failed. Indicates a bug in the engine,
// never a property of the input.
struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Genus below the range covered by the constructions.
struct genus_out_of_range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

} // namespace k3ci

#endif
