#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "msnoise/params.hpp"
#include "msnoise/quantum.hpp"

// First-principles check of the closed-form radiation-pressure force. The
// four travelling waves at the membrane are propagated as quadrature
// coefficient vectors, the force is formed from their momentum fluxes, and
// its spectrum is rebuilt from unit-variance vacuum quadratures.
namespace msnoise::oracle {

/// Basis modes of a field: the carrier (whose coefficient is the carrier
/// amplitude D with P0 = hbar w0 D^2, in sqrt(photons/s)) and the two
/// output-port vacuum quadratures.
enum Mode : std::size_t { carrier = 0, vacuum1 = 1, vacuum2 = 2 };
inline constexpr std::size_t mode_count = 3;

/// E(t) = norm * [sum_k cos_coeffs[k] X_k] cos(w0 t) + norm * [sum_k sin_coeffs[k] X_k] sin(w0 t)
/// with X = (1, E_v1, E_v2) and norm = sqrt(hbar w0 / (A c eps0)).
///
/// The beam area A and eps0 cancel in every force and spectrum; they are set
/// to 1. The 1/sqrt(2) beam-splitter factor is folded into the coefficients.
struct QuadratureField {
  std::array<double, mode_count> cos_coeffs{};
  std::array<double, mode_count> sin_coeffs{};
  double norm = 1.0;

  /// Sum of squared coefficients over both quadratures.
  double coefficient_energy() const;
};

/// Which port the vacuum fluctuations enter through. Output-port vacuum
/// reaches the membrane anti-correlated in the two arms; input-port vacuum
/// arrives correlated and exerts no differential force.
enum class VacuumPort { output, input };

struct IncidentFields {
  QuadratureField a;
  QuadratureField b;
};

struct OutgoingFields {
  QuadratureField c;
  QuadratureField d;
};

/// The two fields arriving at the membrane from the beam splitter with P0 at
/// the beam splitter.
IncidentFields incident_fields(double power, const OpticsParams &optics,
                               VacuumPort port = VacuumPort::output);

/// Lossless symmetric membrane: transmission has zero phase, reflection a
/// pi/2 phase. C = t B + r rot(A), D = t A + r rot(B), where rot advances the
/// phase by pi/2. Throws std::invalid_argument if |r^2 + t^2 - 1| > 1e-12.
OutgoingFields membrane_scatter(const IncidentFields &in, double r, double t);

/// Linearised radiation-pressure force F = A eps0 [(<C^2> - <D^2>) - (<B^2> - <A^2>)].
struct ForceCoefficients {
  double dc = 0.0;      ///< carrier-only term, N; cancels for a symmetric membrane
  double vacuum1 = 0.0; ///< N per unit E_v1
  double vacuum2 = 0.0; ///< N per unit E_v2
};

/// Builds the quadratic form of the momentum flux from the field coefficient
/// vectors and keeps the terms linear in the vacuum modes.
ForceCoefficients rp_force_coefficients(const IncidentFields &in, const OutgoingFields &out);

/// Single-sided PSD, N^2/Hz, for unit-PSD uncorrelated vacuum quadratures.
double force_psd_from_coefficients(const ForceCoefficients &coeffs);

/// Full pipeline: incident fields, membrane scattering, force, PSD.
double force_psd(double power, double reflectance, const OpticsParams &optics);

/// Signed central finite difference of output_power() at x = 0 with step
/// lambda * 1e-6.
double slope_oracle(const QuantumNoiseInputs &in);

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;

  bool passed() const { return max_error <= tolerance; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs every oracle comparison. `draws` random parameter sets are used for
/// the randomised checks; the fixed grid checks always run in full.
VerificationReport run_verification(std::size_t draws = 100, std::uint64_t seed = 20090801);

} // namespace msnoise::oracle
