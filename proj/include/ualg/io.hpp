#ifndef UALG_IO_HPP_
#define UALG_IO_HPP_

#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/mapping.hpp"
#include "ualg/partition.hpp"

namespace ualg {

// JSON algebra format: {"size": n, "binary": [table...], "unary": [list...]}
// with 1-based entries; binary tables are row-major lists of rows.
Algebra parse_algebra_json(const std::string& text);
std::string emit_algebra_json(const Algebra& a);

// Nested-list text format, unary operations first: a flat integer list is
// a unary operation, a list of lists is a binary operation, e.g.
// [ [3, 1, 2], [ [1, 2, 3], [2, 3, 1], [3, 1, 2] ] ].
Algebra parse_algebra_gap(const std::string& text);
std::string emit_algebra_gap(const Algebra& a);

// Detects the format from the first non-space character and validates.
Algebra parse_algebra(const std::string& text);
Algebra load_algebra_file(const std::string& path);

std::string int_list_string(const std::vector<int>& v);
std::string forest_string(const Partition& p);
std::string blocks_string(const Partition& p);
std::string mapping_string(const Mapping& f);

}  // namespace ualg

#endif  // UALG_IO_HPP_
