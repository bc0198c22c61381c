#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cagekit/verify.hpp"

namespace cagekit {

/// A shipped number field together with named elements from its data file.
/// Loading re-checks the defining relations of those elements.
struct BuiltinField {
  Field field;
  std::map<std::string, FieldElement> elements;

  const FieldElement& element(const std::string& name) const;
};

/// "q_sqrt2", "q_theta_i" or "q_omega_cbrt3". LookupError for anything else.
BuiltinField builtin_field(std::string_view name);
std::vector<std::string> builtin_field_names();

/// x = ±(sqrt2/2) z, y = ±(sqrt2/2) z; group products sum to x^2 + y^2 - z^2.
Cage fermat_conic_cage();
/// y_j = alpha y_0 over the four roots of alpha^4 = -1/3; variables (y1, y2, y3, y0).
Cage k3_quartic_cage();
/// z_j = -3^(-1/3) omega^k z_0; variables (z1, z2, z3, z0).
Cage fermat_cubic_cage();
/// Axis cage on {0,1}^3.
Cage cube_elliptic_cage();

struct DemoSpec {
  std::string name;
  std::string summary;
  std::function<VerificationReport()> run;
};

const std::vector<DemoSpec>& demo_registry();
/// LookupError for an unknown name.
const DemoSpec& find_demo(std::string_view name);
VerificationReport run_demo(const DemoSpec& spec);
VerificationReport run_demo(std::string_view name);

}  // namespace cagekit
