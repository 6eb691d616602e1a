#include "argrank/dot.hpp"

#include <cstdio>

namespace argrank {

namespace {

std::string node_id(const std::string& label) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "n%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string escape(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const AbstractAF& af) {
  std::string out = "digraph af {\n";
  for (const std::string& label : af.labels) {
    out += "  " + node_id(label) + " [label=\"" + escape(label) + "\"];\n";
  }
  for (auto [from, to] : af.edges) {
    out += "  " + node_id(af.labels[from]) + " -> " + node_id(af.labels[to]) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace argrank
