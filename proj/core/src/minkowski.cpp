#include "hyperdef/minkowski.hpp"

namespace hyperdef {

std::string to_string(VectorClass c) {
  switch (c) {
    case VectorClass::SpaceLike: return "space-like";
    case VectorClass::LightLike: return "light-like";
    default: return "time-like";
  }
}

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Orthogonal: return "orthogonal";
    case RelationKind::Intersecting: return "intersecting";
    case RelationKind::Tangent: return "tangent";
    case RelationKind::Ultraparallel: return "ultraparallel";
    default: return "diverging";
  }
}

char kind_code(RelationKind k) {
  switch (k) {
    case RelationKind::Orthogonal: return 'O';
    case RelationKind::Intersecting: return 'I';
    case RelationKind::Tangent: return 'T';
    case RelationKind::Ultraparallel: return 'U';
    default: return 'D';
  }
}

}  // namespace hyperdef
