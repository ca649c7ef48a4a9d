#include "hyperdef/gram.hpp"

namespace hyperdef {

std::string to_string(const SubdiagramClass& c) {
  switch (c.kind) {
    case SubdiagramClass::Kind::Elliptic: return "elliptic";
    case SubdiagramClass::Kind::Parabolic:
      return "parabolic(" + std::to_string(c.rank) + (c.pure ? ")" : ",mixed)");
    default: return "indefinite";
  }
}

}  // namespace hyperdef
