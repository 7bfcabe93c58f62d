#ifndef MIMHD_ERRORS_HPP
#define MIMHD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mimhd {

/// Base of everything the library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define MIMHD_DECLARE_ERROR(Name)                 \
    class Name : public Error {                   \
      public:                                     \
        using Error::Error;                       \
    };

MIMHD_DECLARE_ERROR(NonPositiveDensity)
MIMHD_DECLARE_ERROR(NonPositivePressure)
MIMHD_DECLARE_ERROR(InvalidEntropyState)
MIMHD_DECLARE_ERROR(DegenerateCharge)
MIMHD_DECLARE_ERROR(NonPositiveArgument)
MIMHD_DECLARE_ERROR(InvalidSpecies)
MIMHD_DECLARE_ERROR(UnsupportedDegree)
MIMHD_DECLARE_ERROR(InvalidDomain)
MIMHD_DECLARE_ERROR(NonFiniteWaveSpeed)
MIMHD_DECLARE_ERROR(ZeroError)
MIMHD_DECLARE_ERROR(Requires2D)
MIMHD_DECLARE_ERROR(ZeroReference)
MIMHD_DECLARE_ERROR(ConfigError)

#undef MIMHD_DECLARE_ERROR

/// Raised by the semidiscretization when a node leaves the admissible set.
class AdmissibilityLost : public Error {
  public:
    AdmissibilityLost(int element, int node, const std::string& reason)
        : Error("admissibility lost at element " + std::to_string(element) + ", node " +
                std::to_string(node) + ": " + reason),
          element_(element), node_(node), reason_(reason) {}

    int element() const { return element_; }
    int node() const { return node_; }
    const std::string& reason() const { return reason_; }

  private:
    int element_;
    int node_;
    std::string reason_;
};

/// A time loop that had to stop before t_end.
class SimulationAborted : public Error {
  public:
    SimulationAborted(long step, double time, const std::string& cause)
        : Error("simulation aborted at step " + std::to_string(step) + ", t = " +
                std::to_string(time) + ": " + cause),
          step_(step), time_(time), cause_(cause) {}

    long step() const { return step_; }
    double time() const { return time_; }
    const std::string& cause() const { return cause_; }

  private:
    long step_;
    double time_;
    std::string cause_;
};

} // namespace mimhd

#endif
