// Rebuilds the divisor Z on M_{15,9} from the degenerate-pencil class on
// M_{15,8} and checks the general-type certificate, then looks at the pencil
// of quadrics through one random 15-point blow-up.

#include <iostream>

#include "qmod/qmod.hpp"

int main() {
  using namespace qmod;

  const auto d = pic::fr_dp_class(pic::chern_pair(15, 8));
  std::cout << "D_{15,8}: lambda " << d.lambda().value << ", psi " << d.psi(1).value << ", delta_irr "
            << d.b_irr().value << "\n";

  const auto z = pic::z_class_15_9();
  std::cout << "Z_{15,9}: lambda " << z.lambda().value << ", psi " << z.psi(1).value << ", delta_irr "
            << z.b_irr().value << "\n";

  const Rational zmult(13, 66);
  const auto [x, y] = pic::solve_certificate_multipliers(zmult);
  const auto rep = pic::general_type_certificate(x, y, zmult);
  std::cout << "multipliers x = " << x << ", y = " << y << ", z = " << zmult << "\n"
            << "lambda residual " << rep.lambda_residual << ", E_irr " << rep.e_irr.value << " -> "
            << (rep.pass ? "certificate holds" : "certificate fails") << "\n";
  for (const auto& s : rep.boundary) {
    if (s.slot.i != 0 || s.slot.s > 3) continue;
    std::cout << "  delta_{0:" << s.slot.s << "}: Z coefficient >= " << s.z_bound;
    if (s.required_z_bound) std::cout << ", needs >= " << *s.required_z_bound;
    std::cout << "\n";
  }

  const PrimeField field;
  const auto run = surf::blowup_run(field, 1);
  std::cout << "blow-up: h0(H) = " << run.h0_H << ", dim I2 = " << run.i2_dimension << ", pencil "
            << (run.pencil && run.pencil->nondegenerate() ? "non-degenerate" : "degenerate") << "\n";
  return rep.pass && run.pass() ? 0 : 1;
}
