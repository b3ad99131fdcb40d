#ifndef HGM_OPTIM_HPP
#define HGM_OPTIM_HPP

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace hgm {

using Vector = Eigen::VectorXd;

/// Multiplier h(t) applied to the base stepsize: alpha_t = alpha * h(t).
enum class Schedule { constant, inverse_sqrt };

enum class OptimizerKind { hgm, adam, rmsprop, sgd_momentum };

/// Scalar hyperparameters shared by all step rules. Defaults follow the
/// benchmark configuration used throughout the experiment harness.
struct OptimizerConfig {
  double alpha = 0.001;     ///< base stepsize, > 0
  double beta1 = 0.9;       ///< first-moment decay, in [0,1)
  double beta2 = 0.99;      ///< second-moment decay, in [0,1)
  double beta_s = 0.9;      ///< hindsight-signal smoothing, in [0,1)
  double gamma_sens = 10.0; ///< sensitivity of the hindsight scaling
  double epsilon = 1e-8;    ///< stability constant, > 0 (shared by the
                            ///< variance and cosine denominators)
  Schedule schedule = Schedule::constant;

  /// Throws std::invalid_argument when any field is out of range.
  /// |gamma_sens| is capped at 700 so exp(gamma*s) cannot overflow.
  void validate() const;
};

/// Per-run mutable state. All step rules share the layout; RMSprop leaves m
/// untouched and SGD+momentum leaves v untouched.
struct OptimizerState {
  Vector m;      ///< first moment
  Vector v;      ///< second moment, elementwise >= 0
  double s = 0;  ///< smoothed hindsight signal, stays in [-1, 1]
  long t = 0;    ///< completed steps
};

/// Observables of a single step.
struct StepDiagnostics {
  double cosine = 0;    ///< raw cosine similarity c_t
  double signal = 0;    ///< smoothed signal s_t after the update
  double eta = 0;       ///< learning rate actually applied
  double step_norm = 0; ///< l2 norm of the parameter change
};

double schedule_multiplier(Schedule schedule, long t);

/// Zeroed state for a parameter vector of the given length (dim >= 1).
OptimizerState init_state(const OptimizerConfig& config, Eigen::Index dim);

/// c = (g . m_prev) / (|g| |m_prev| + epsilon).
/// Finite for all finite inputs; exactly 0 when either vector is zero.
double cosine_similarity(Eigen::Ref<const Vector> g,
                         Eigen::Ref<const Vector> m_prev, double epsilon);

// Each step rule advances state and params in place and returns the step's
// diagnostics. Steps are pure functions of (config, state, params, grad):
// replaying a recorded gradient sequence reproduces a run exactly. A step is
// refused (std::invalid_argument, state untouched) on non-finite gradient
// entries or mismatched lengths.

/// Adam update with the learning rate modulated by exp(gamma * s_t), where
/// s_t smooths the cosine similarity between the incoming gradient and the
/// pre-update momentum. One global scalar signal over the whole vector.
StepDiagnostics hgm_step(const OptimizerConfig& config, OptimizerState& state,
                         Eigen::Ref<Vector> params,
                         Eigen::Ref<const Vector> grad);

/// Plain Adam. gamma_sens is ignored; c_t/s_t are still tracked so logs stay
/// comparable with hgm_step, but never touch the update.
StepDiagnostics adam_step(const OptimizerConfig& config, OptimizerState& state,
                          Eigen::Ref<Vector> params,
                          Eigen::Ref<const Vector> grad);

/// v_t = beta2 v_{t-1} + (1-beta2) g^2;  theta -= alpha h(t) g / (sqrt(v) + eps).
/// No momentum, no bias correction.
StepDiagnostics rmsprop_step(const OptimizerConfig& config,
                             OptimizerState& state, Eigen::Ref<Vector> params,
                             Eigen::Ref<const Vector> grad);

/// Heavy-ball form: m_t = beta1 m_{t-1} + g;  theta -= alpha h(t) m_t.
StepDiagnostics sgd_momentum_step(const OptimizerConfig& config,
                                  OptimizerState& state,
                                  Eigen::Ref<Vector> params,
                                  Eigen::Ref<const Vector> grad);

StepDiagnostics optimizer_step(OptimizerKind kind, const OptimizerConfig& config,
                               OptimizerState& state, Eigen::Ref<Vector> params,
                               Eigen::Ref<const Vector> grad);

std::string to_string(OptimizerKind kind);
std::string to_string(Schedule schedule);
OptimizerKind parse_optimizer_kind(const std::string& name);
Schedule parse_schedule(const std::string& name);

}  // namespace hgm

#endif  // HGM_OPTIM_HPP
