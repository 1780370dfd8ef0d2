#pragma once

#include "mockgl/glform.hpp"

namespace mgl {

/// Band presentation whose mock Seifert matrix is exactly `a`.
/// Throws PreconditionError for even determinant or a matrix that is not symmetric mod 2.
BandPresentation realize(const IntMatrix& a);
inline BandPresentation realize(const MockSeifertMatrix& a) { return realize(a.entries); }

}  // namespace mgl
