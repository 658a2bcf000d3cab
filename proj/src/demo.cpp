#include "unkry/demo.hpp"

namespace unkry {

io::ProblemInstance demo_compatible() {
  io::ProblemInstance p;
  p.H = make_diagonal({3.0, 2.0, 1.0, 0.0, -1.0, -2.0, -3.0});
  p.c = {3.0, 2.0, 1.0, 0.0, -1.0, -2.0, -3.0};
  p.name = "demo-compatible";
  return p;
}

io::ProblemInstance demo_incompatible() {
  io::ProblemInstance p;
  p.H = make_diagonal({5.0, 2.0, 1.0, 0.0, -1.0, -2.0, -3.0});
  p.c = {3.0, 2.0, 1.0, 1.0, -1.0, -2.0, -3.0};
  p.name = "demo-incompatible";
  return p;
}

}  // namespace unkry
