#ifndef DYCOH_ERROR_HPP
#define DYCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dycoh {

// Single exception type for contract violations inside the engine.
// Axiom violations found by validators are *reports*, not exceptions;
// only malformed inputs, broken preconditions and internal
// inconsistencies throw.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    FieldMismatch,  // scalars/matrices over different ground fields
    Dimension,      // shape mismatch in a linear-algebra operation
    Structure,      // malformed presentation tables
    Precondition,   // documented operation precondition violated
    Budget,         // degree cap / tuple count exceeded
    Unsupported,    // valid input outside the engine's scope
    Internal,       // postcondition failed; indicates a bug
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void throw_error(Error::Kind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace dycoh

#endif
