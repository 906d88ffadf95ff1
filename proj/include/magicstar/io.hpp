#pragma once

#include <iosfwd>
#include <string>

#include "magicstar/verify.hpp"

namespace magicstar {

// {"family","n","N","R","roots":[{"index","kind","coords2":[...]}]};
// doubled coordinates are the wire unit.
void write_roots_json(std::ostream& os, const RootSystem& rs);

// One row per nonzero term of [basis_a, basis_b]:
// a_index,b_index,term_kind,term_index,numerator,denominator
void write_structure_csv(std::ostream& os, const Algebra& alg);

// root_index,r,s rows for plotting the star.
void write_star_csv(std::ostream& os, const RootSystem& rs);

void write_report_json(std::ostream& os, const SuiteConfig& cfg,
                       const std::vector<SuiteReport>& reports);

}  // namespace magicstar
