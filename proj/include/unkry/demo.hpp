#pragma once

#include "unkry/io.hpp"

namespace unkry {

// Built-in demonstration instances.
// demo_compatible: H = diag(3,2,1,0,-1,-2,-3), c = (3,2,1,0,-1,-2,-3);
//   singular H, compatible system, solution (-1,-1,-1,0,-1,-1,-1).
// demo_incompatible: H = diag(5,2,1,0,-1,-2,-3), c = (3,2,1,1,-1,-2,-3);
//   c has a component on the null direction e_4, so no solution exists and
//   the minimum-residual solution is (-0.6,-1,-1,0,-1,-1,-1).
io::ProblemInstance demo_compatible();
io::ProblemInstance demo_incompatible();

}  // namespace unkry
