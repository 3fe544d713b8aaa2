#include "mollow/equation_map.hpp"

namespace mollow {

const std::vector<EquationMapping>& equation_map() {
  static const std::vector<EquationMapping> rows = {
      {"(b.1)", "model.steady_state"},
      {"(b.2)", "model.saturation"},
      {"(b.3)", "oracle.drift_matrix (MainZ)"},
      {"(b.4)", "oracle.drift_matrix (SatelliteX)"},
      {"(b.5)", "contour.chi_residue / contour.chi_quadrature (KerrZ)"},
      {"(b.6)", "contour.chi_residue / contour.chi_quadrature (ParametricZ)"},
      {"(b.7)", "contour.chi_residue / contour.chi_quadrature (Transverse)"},
      {"(b.8)", "spectra.build_kernel (KerrZ denominator)"},
      {"(b.9)", "spectra.build_kernel (ParametricZ denominator)"},
      {"(b.10)", "triplet.mollow_poly"},
      {"(b.11)", "spectra.build_kernel (KerrZ numerator)"},
      {"(b.12)", "spectra.build_kernel (ParametricZ numerator)"},
      {"(b.13)", "spectra.build_kernel (Transverse denominator)"},
      {"(b.14)", "spectra.build_kernel (Transverse numerator)"},
      {"(b.15)", "triplet.triplet_roots"},
      {"(b.16)", "asymptotics.chi_weak (KerrZ)"},
      {"(b.17)", "asymptotics.chi_weak (ParametricZ)"},
      {"(b.18)", "asymptotics.chi_weak (Transverse)"},
      {"(b.19)", "triplet.triplet_roots_saturation"},
      {"(b.20)", "asymptotics.chi_saturation_center (KerrZ)"},
      {"(b.21)", "asymptotics.chi_saturation_center (ParametricZ)"},
      {"(b.22)", "asymptotics.chi_saturation_sideband (KerrZ)"},
      {"(b.23)", "asymptotics.chi_saturation_sideband (ParametricZ)"},
      {"(b.29)", "asymptotics.chi_saturation_transverse"},
      {"(4.17)", "contour.sweep (Transverse tensor component)"},
      {"(4.18)", "contour (z response split: KerrZ + ParametricZ; spatial factor not propagated)"},
      {"(4.19)", "contour.chi_residue (KerrZ definition)"},
      {"(4.20)", "contour.chi_residue (ParametricZ definition)"},
      {"(4.21)", "oracle.commutator_spectrum (Transverse) + retarded transform"},
      {"(4.22)", "oracle.commutator_spectrum (KerrZ) + retarded transform"},
      {"(4.23)", "oracle.commutator_spectrum (ParametricZ) + retarded transform"},
      {"(4.24)", "oracle (generalized Fourier transform convention)"},
      {"(4.25)", "oracle.commutator_spectrum (KerrZ pairing)"},
      {"(4.26)", "oracle.commutator_spectrum (ParametricZ pairing at +-omega')"},
      {"(4.27)", "contour.chi_quadrature / oracle.chi_oracle (retarded-branch convolution)"},
      {"(4.28)", "oracle (spectral density normalization)"},
      {"(4.29)", "oracle.DiffusionMatrix::adjoint_index"},
      {"(4.30)", "oracle.DiffusionMatrix (white-noise moment rule)"},
      {"(4.31)", "oracle.diffusion_matrix (MainZ)"},
      {"(4.32)", "oracle.diffusion_matrix (SatelliteX)"},
      {"(5.1)", "model.DensityScale::from_density_lambda3"},
      {"(VI: gamma -> sqrt(eps) gamma)", "model.renormalize_dense"},
      {"(2.6)", "out of scope (light propagation)"},
      {"(3.17)-(3.26)", "out of scope (multi-atom reduction; single-atom endpoint only)"},
  };
  return rows;
}

std::string render_equation_map() {
  std::string out;
  out += "# Reference map\n\n";
  out += "Derivation tags of the underlying analysis mapped to the code that\n";
  out += "realizes them. Generated from the in-repo registry; do not edit.\n\n";
  out += "| tag | implementation |\n";
  out += "|-----|----------------|\n";
  for (const auto& row : equation_map()) {
    out += "| ";
    out += row.tag;
    out += " | ";
    out += row.target;
    out += " |\n";
  }
  return out;
}

}  // namespace mollow
