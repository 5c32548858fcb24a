#pragma once

#include <stdexcept>
#include <string>

namespace relo {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnreachablePairError : Error {
  int from, to;
  UnreachablePairError(int f, int t, const std::string& msg)
      : Error(msg), from(f), to(t) {}
};

struct FleetMismatchError : Error { using Error::Error; };
struct UnbalancedError : Error { using Error::Error; };
struct EmptySideError : Error { using Error::Error; };
struct CapacityExceededError : Error { using Error::Error; };
struct HorizonExceededError : Error { using Error::Error; };
struct NotServedError : Error { using Error::Error; };
struct NoFeasibleInsertionError : Error {
  int origin = -1, destination = -1;
  NoFeasibleInsertionError(int o, int u, const std::string& msg)
      : Error(msg), origin(o), destination(u) {}
};
struct MultipleDepotsError : Error { using Error::Error; };
struct UnlocatedRequestError : Error { using Error::Error; };
struct OddActionParityError : Error { using Error::Error; };
struct MalformedFlowError : Error { using Error::Error; };
struct ParamConflictError : Error { using Error::Error; };
struct SinkWriteError : Error { using Error::Error; };
struct InfeasibleStateError : Error {
  int station;
  long long time, value;
  InfeasibleStateError(int v, long long t, long long z, const std::string& msg)
      : Error(msg), station(v), time(t), value(z) {}
};

}  // namespace relo
