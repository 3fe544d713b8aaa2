#ifndef MOLLOW_TYPES_HPP
#define MOLLOW_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace mollow {

using Complex = std::complex<double>;

inline constexpr Complex I{0.0, 1.0};

/// Susceptibility tensor components: Kerr-type z response, parametric
/// (phase-conjugating) z response, and the transverse x/y response.
enum class Component { KerrZ, ParametricZ, Transverse };

inline const char* component_name(Component c) {
  switch (c) {
    case Component::KerrZ: return "kerr-z";
    case Component::ParametricZ: return "parametric-z";
    case Component::Transverse: return "transverse";
  }
  return "?";
}

// ---- error types ----

struct EvaluationAtPole : std::runtime_error {
  explicit EvaluationAtPole(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateContour : std::runtime_error {
  explicit DegenerateContour(const std::string& what) : std::runtime_error(what) {}
};

struct ToleranceNotReached : std::runtime_error {
  explicit ToleranceNotReached(const std::string& what) : std::runtime_error(what) {}
};

struct SingularResolvent : std::runtime_error {
  explicit SingularResolvent(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mollow

#endif
