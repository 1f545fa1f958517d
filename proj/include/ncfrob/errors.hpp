#pragma once

#include <stdexcept>
#include <string>

namespace ncfrob {

/// Malformed user input: bad shapes, out-of-range indices, unparsable data.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A mathematical guarantee was violated; indicates a bug or corrupt data.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ncfrob
