#include "ecint/mpoly_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ecint {

std::string render_artifact(const PolyArtifact& a) {
  std::string out;
  for (const auto& [k, v] : a.header) out += "# " + k + ": " + v + "\n";
  for (const auto& [name, p] : a.polys) {
    out += "@poly " + name + "\n";
    for (const auto& line : p.to_lines()) out += line + "\n";
  }
  return out;
}

PolyArtifact parse_artifact(const std::string& text) {
  PolyArtifact a;
  std::istringstream in(text);
  std::string line;
  std::string cur_name;
  std::string cur_body;
  auto flush = [&]() {
    if (!cur_name.empty()) {
      a.polys.emplace_back(cur_name, MPoly::parse(cur_body));
      cur_name.clear();
      cur_body.clear();
    }
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon != std::string::npos) {
        std::string k = line.substr(1, colon - 1);
        std::string v = line.substr(colon + 1);
        while (!k.empty() && k.front() == ' ') k.erase(k.begin());
        while (!k.empty() && k.back() == ' ') k.pop_back();
        while (!v.empty() && v.front() == ' ') v.erase(v.begin());
        a.header.emplace_back(k, v);
      }
      continue;
    }
    if (line.rfind("@poly ", 0) == 0) {
      flush();
      cur_name = line.substr(6);
      continue;
    }
    if (cur_name.empty()) throw std::runtime_error("artifact: term line outside @poly section");
    cur_body += line + "\n";
  }
  flush();
  return a;
}

void write_artifact_file(const std::string& path, const PolyArtifact& a) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f << render_artifact(a);
}

PolyArtifact read_artifact_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for read: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_artifact(ss.str());
}

}  // namespace ecint
