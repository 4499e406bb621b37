// json_io.hpp -- lossless JSON serialization of diagrams.
//
// Format: {"depth": N, "levels": [ {"vertices": [ {"name": "v2_1",
// "in": ["v1_1","v1_2"]}, ... ]}, ... ]} where "in" lists source names in
// ordinal order (index 0 = ordinal 1). Level 0 (the root) is implicit.
#pragma once

#include <string>

#include "bvtk/diagram.hpp"

namespace bvtk {

Diagram diagram_from_json(const std::string& text);
std::string diagram_to_json(const Diagram& d, int indent = 2);

Diagram load_diagram_file(const std::string& path);
void save_diagram_file(const Diagram& d, const std::string& path);

}  // namespace bvtk
