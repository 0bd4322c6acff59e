#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eqlab {

/// Base class for every numerical-contract violation raised by the library.
/// `module()` names the component that detected the violation so the CLI
/// can report where a run went out of contract.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error("[" + module + "] " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

#define EQLAB_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    using Error::Error;                                           \
  }

EQLAB_DEFINE_ERROR(DomainError);          // argument outside the operation's domain
EQLAB_DEFINE_ERROR(GridResolutionError);  // packet under-resolved or touching the edges
EQLAB_DEFINE_ERROR(BoundaryError);        // state reached the periodic boundary
EQLAB_DEFINE_ERROR(StabilityError);       // kinetic phase per step beyond the aliasing bound
EQLAB_DEFINE_ERROR(BoxTooSmallError);
EQLAB_DEFINE_ERROR(ConvergenceError);
EQLAB_DEFINE_ERROR(NoTurningPointError);  // energy is not bound
EQLAB_DEFINE_ERROR(UndersamplingError);
EQLAB_DEFINE_ERROR(IndexError);
EQLAB_DEFINE_ERROR(ConfigError);

#undef EQLAB_DEFINE_ERROR

}  // namespace eqlab
