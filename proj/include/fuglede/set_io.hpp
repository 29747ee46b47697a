#pragma once

#include <filesystem>
#include <iosfwd>

#include "fuglede/group.hpp"

namespace fuglede {

// Set file format: UTF-8 text. First significant line `p=<p> d=<d>`, then one
// comma-separated vector of d residues per line, e.g. `1,0,2,1`. Lines
// starting with `#` are comments; blank lines are ignored. Duplicate vectors
// and out-of-range residues are rejected with the offending line number.

PointSet load_point_set(std::istream& in);
PointSet load_point_set(const std::filesystem::path& path);

void save_point_set(std::ostream& out, const PointSet& s);
void save_point_set(const std::filesystem::path& path, const PointSet& s);

}  // namespace fuglede
