#pragma once

#include <memory>

namespace conical {

/// Pressure and its partial derivatives at a state (rho, e).
struct Pressure {
  double P = 0.0;
  double P_rho = 0.0;  // dP/drho at constant e
  double P_e = 0.0;    // dP/de at constant rho
};

/// Equation of state P = P(rho, e). The system is EOS-generic; only the
/// ideal gas law ships.
class GasModel {
 public:
  virtual ~GasModel() = default;

  /// Requires rho > 0 and e > 0; throws invalid_state_error otherwise.
  virtual Pressure pressure(double rho, double e) const = 0;

  /// Speed of sound c = sqrt(P*P_e + rho^2*P_rho) / rho.
  /// Throws invalid_state_error on a negative radicand.
  double sound_speed(double rho, double e) const;
};

/// P = (gamma - 1) rho e.
class IdealGas final : public GasModel {
 public:
  explicit IdealGas(double gamma = 1.4);

  Pressure pressure(double rho, double e) const override;

  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

}  // namespace conical
