#include "hyperclique/vertex_set.hpp"

namespace hyperclique {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) out += ",";
    out += std::to_string(v);
    first_member = false;
  });
  out += "}";
  return out;
}

}  // namespace hyperclique
