#ifndef COMMVAR_ERROR_HPP
#define COMMVAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace commvar {

/// Caller supplied a parameter outside an operation's domain.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A construction whose existence is guaranteed mathematically failed; this
/// always indicates a bug in the library.
class ConstructionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace commvar

#endif  // COMMVAR_ERROR_HPP
