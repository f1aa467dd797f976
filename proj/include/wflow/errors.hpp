#pragma once

#include <stdexcept>
#include <string>

namespace wflow {

// Error taxonomy. Each class maps to a distinct CLI exit code (see tools/).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad sizes, bad keys, out-of-range values, malformed input.
struct ConfigError : Error {
  using Error::Error;
};

// Immersion loses rank somewhere; carries the offending node.
struct DegeneracyError : Error {
  DegeneracyError(const std::string& what, int node) : Error(what), node(node) {}
  int node = -1;
};

// A formula that assumes conformality was invoked with too large a Hopf
// residual, or a gauge iteration failed to converge.
struct GaugeError : Error {
  using Error::Error;
};

// Mobius step left the trust ball around the identity.
struct ChartError : Error {
  using Error::Error;
};

// Resampling produced a field the spectral truncation cannot represent.
struct ResolutionError : Error {
  using Error::Error;
};

// Datum fails a membership requirement of the admissible class.
struct AdmissibilityError : Error {
  using Error::Error;
};

// A runtime monitor of the flow left its configured bound.
struct FlowClassError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace wflow
