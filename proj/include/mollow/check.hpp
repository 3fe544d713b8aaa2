#ifndef MOLLOW_CHECK_HPP
#define MOLLOW_CHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mollow {

struct CheckOptions {
  std::uint64_t seed = 1;
  int triple_points = 200;   ///< residue == quadrature == oracle sample count
  int det_points = 100;      ///< determinant-identity sample count
  double triple_rel = 1e-6;  ///< pairwise relative tolerance
  double triple_abs = 1e-9;  ///< absolute floor when |chi| < 1e-3
  double quad_tol = 1e-9;    ///< tolerance handed to the quadrature paths
};

struct PropertyResult {
  std::string name;
  bool pass;
  double worst_deviation;
  std::string worst_point;  ///< parameter point of the worst deviation
  std::string detail;
};

struct CheckReport {
  CheckOptions options;
  std::vector<PropertyResult> properties;
  bool all_pass;
};

/// Run the full cross-validation suite: steady-state algebra, triplet
/// structure, determinant identity, kernel/oracle equivalence, triple
/// agreement of the chi evaluators, linear-response reduction, asymptotic
/// anchors, figure-level shape properties, and the dense-medium
/// renormalization rule. Deterministic for a fixed seed.
CheckReport run_properties(const CheckOptions& options);

/// Machine-readable JSON rendering; byte-stable for identical reports.
std::string report_to_json(const CheckReport& report);

}  // namespace mollow

#endif
