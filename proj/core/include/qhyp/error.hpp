#pragma once

#include <stdexcept>
#include <string>

namespace qhyp {

enum class errc {
  zero_leading_coefficient,
  angle_at_half_pi,
  duplicate_angle,
  degenerate_configuration,
  precondition_violation,
  unsupported_curve,
  accuracy_envelope_exceeded,
  not_hyperbolic,
};

const char* to_string(errc code) noexcept;

// Every failure the library reports is one of these; `code()` is the stable
// discriminator, `what()` carries the human-readable detail.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

inline const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case errc::angle_at_half_pi: return "AngleAtHalfPi";
    case errc::duplicate_angle: return "DuplicateAngle";
    case errc::degenerate_configuration: return "DegenerateConfiguration";
    case errc::precondition_violation: return "PreconditionViolation";
    case errc::unsupported_curve: return "UnsupportedCurve";
    case errc::accuracy_envelope_exceeded: return "AccuracyEnvelopeExceeded";
    case errc::not_hyperbolic: return "NotHyperbolic";
  }
  return "Unknown";
}

}  // namespace qhyp
