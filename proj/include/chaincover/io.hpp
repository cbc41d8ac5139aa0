#pragma once

#include <string>
#include <utility>

#include "chaincover/space.hpp"

namespace chaincover {

// Points CSV: header `id,x1[,x2,...]` then one row per point with exact
// decimal coordinates. Ids must be dense 0..n-1 in any order.
FiniteSpace load_points_csv(const std::string& path, int basepoint);

// Distance table JSON: {"schema":1,"n":k,"d":[[...]],"squared":false}.
// Entries are integers or exact decimal strings; floating-point literals
// are rejected, there is no way to read them back exactly.
FiniteSpace load_distance_table_json(const std::string& path, int basepoint);

// Relation JSON applied to an existing space:
//   {"schema":1,"pairs":[[i,j],...]}             explicit pairs
//   {"schema":1,"diff_intervals":[["a","b"],...]} 1-D difference intervals
Entourage load_relation_json(const std::string& path, const FiniteSpace& space);

// Relation JSON as the input itself: the space is the bare id range, so the
// file must use the pairs form and carry "n".
std::pair<FiniteSpace, Entourage> load_relation_space_json(const std::string& path,
                                                           int basepoint);

}  // namespace chaincover
