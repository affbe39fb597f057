#pragma once

#include <optional>
#include <string>

#include "fsys/galois_twist.hpp"

namespace fsys {

inline constexpr int kFormatVersion = 1;

struct Metadata {
  std::string provenance;
  std::string paper_section;
  friend bool operator==(const Metadata&, const Metadata&) = default;
};

/// In-memory form of a .fsys document. Fusion-only files leave `modular` false
/// and system.R / system.epsilon empty.
struct SystemFile {
  std::string name;
  ModularSystem system;
  bool modular = false;
  std::optional<Grading> grading;
  Metadata metadata;

  const FusionSystem& fusion() const { return system.base; }
  friend bool operator==(const SystemFile&, const SystemFile&) = default;
};

/// Structural validation only: labels, sizes, row/column lists, field.
/// Throws ParseError for malformed JSON and SchemaError naming the offending field.
SystemFile parse_system(const std::string& text);
std::string serialize_system(const SystemFile& f);

/// ParseError / SchemaError as above; std::runtime_error for I/O failures.
SystemFile load_system(const std::string& path);
void save_system(const SystemFile& f, const std::string& path);

}  // namespace fsys
