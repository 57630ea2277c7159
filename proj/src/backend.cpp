#include "arc2rep/backend.hpp"

namespace arc2rep {

Word gen_source(const Gen& g) {
  switch (g.kind) {
    case GenKind::Y: return {g.i};
    case GenKind::Cup: return {};
    case GenKind::Cap: return {-g.i, g.i};
    case GenKind::Psi: return {g.i, g.j};
  }
  return {};
}

Word gen_target(const Gen& g) {
  switch (g.kind) {
    case GenKind::Y: return {g.i};
    case GenKind::Cup: return {-g.i, g.i};
    case GenKind::Cap: return {};
    case GenKind::Psi: return {g.j, g.i};
  }
  return {};
}

int gen_degree(const Gen& g) {
  switch (g.kind) {
    case GenKind::Y: return cartan_entry(g.i, g.i);
    case GenKind::Cup:
    case GenKind::Cap: return 1 + cartan_pairing(g.i, g.mu);
    case GenKind::Psi: return -cartan_entry(g.i, g.j);
  }
  return 0;
}

std::string gen_str(const Gen& g) {
  std::string s;
  switch (g.kind) {
    case GenKind::Y: s = "Y_" + std::to_string(g.i); break;
    case GenKind::Cup: s = "Cup_" + std::to_string(g.i); break;
    case GenKind::Cap: s = "Cap_" + std::to_string(g.i); break;
    case GenKind::Psi: s = "Psi_" + std::to_string(g.i) + "," + std::to_string(g.j); break;
  }
  return s + ";" + g.mu.str();
}

}  // namespace arc2rep
