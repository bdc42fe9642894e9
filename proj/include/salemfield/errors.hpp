#ifndef SALEMFIELD_ERRORS_HPP
#define SALEMFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace salemfield {

// Bad parameters or misuse of an operation (maps to CLI exit code 1).
struct value_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quantity that must be an exact integer (or an exact identity) failed its
// residual check. This signals a bug, not numerical noise (CLI exit code 2).
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive operation was requested on a domain above the configured cap
// (CLI exit code 3).
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace salemfield

#endif
