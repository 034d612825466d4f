#pragma once

#include "cliquex/real.hpp"

namespace cliquex::testutil {

// |got - want| / max(1, |want|), collapsed to double for Catch2 comparisons.
inline double rel_diff(const Real& got, const Real& want) {
    const Real denom = max(Real(1L, want.precision()), abs(want));
    return (abs(got - want) / denom).to_double();
}

inline double abs_diff(const Real& got, const Real& want) { return abs(got - want).to_double(); }

} // namespace cliquex::testutil
