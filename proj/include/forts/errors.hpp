#ifndef FORTS_ERRORS_HPP
#define FORTS_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace forts {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (CLI exit code 1).
struct InputError : Error {
    using Error::Error;
};

// An enumeration exceeded its configured cap (CLI exit code 3).
struct CapExceeded : Error {
    std::int64_t partial_count;
    CapExceeded(const std::string& what, std::int64_t partial)
        : Error(what), partial_count(partial) {}
};

}  // namespace forts

#endif
