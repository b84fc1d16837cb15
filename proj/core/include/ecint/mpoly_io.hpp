#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ecint/mpoly.hpp"

namespace ecint {

/// Text artifact: `# key: value` header lines, then one or more named
/// sections `@poly <name>` each followed by term lines in the canonical
/// polynomial format (one term per line, `<decimal coefficient> <var>^<exp> ...`).
struct PolyArtifact {
  std::vector<std::pair<std::string, std::string>> header;  // ordered, deterministic
  std::vector<std::pair<std::string, MPoly>> polys;
};

std::string render_artifact(const PolyArtifact& a);
PolyArtifact parse_artifact(const std::string& text);

void write_artifact_file(const std::string& path, const PolyArtifact& a);
PolyArtifact read_artifact_file(const std::string& path);

}  // namespace ecint
