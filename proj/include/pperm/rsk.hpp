#pragma once

#include <utility>

#include "pperm/tableaux.hpp"
#include "pperm/word.hpp"

namespace pperm {

// Row-insertion correspondence from words to pairs of equal-shape tableaux:
// P is semistandard with the content of v, Q is standard with
// Des(Q) = Des(v).
std::pair<YoungTableau, YoungTableau> rsk(const Word& v);

// Reverse row insertion in decreasing label order; the unique word v with
// rsk(v) == (p, q). Requires p semistandard, q standard, equal shapes.
Word rsk_inverse(const YoungTableau& p, const YoungTableau& q);

// Schuetzenberger evacuation of a standard tableau: shape-preserving
// involution with Des(result) = { n-i : i in Des(q) }, compatible with the
// star involution under rsk.
YoungTableau evacuation(const YoungTableau& q);

}  // namespace pperm
