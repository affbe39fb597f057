#pragma once

#include <string>
#include <vector>

#include "fsys/catalog_io.hpp"

namespace fsys {

/// Base names; with `include_variants` the braided variants are appended.
std::vector<std::string> catalog_names(bool include_variants = false);

/// Built-in system by name. Throws SchemaError for unknown names.
SystemFile catalog(const std::string& name);

/// "catalog:<name>" or a path to a .fsys file.
SystemFile resolve_system(const std::string& ref);

/// The Fibonacci-family F data over Q(zeta_5) for a given d with d^2 = 1 + d.
FusionSystem fibonacci_family(const CycNumber& d);

}  // namespace fsys
