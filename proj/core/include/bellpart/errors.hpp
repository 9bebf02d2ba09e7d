#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bellpart {

// Requested size lies above a documented safety cap for an intentionally
// expensive algorithm. The CLI exposes --unsafe-cap to lift the cap.
class CapExceededError : public std::domain_error {
public:
    CapExceededError(const std::string& what_arg, std::size_t requested, std::size_t cap)
        : std::domain_error(what_arg), requested_(requested), cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

// An argument sequence is too short for the requested query. The message
// names the required length.
class ArgumentLengthError : public std::length_error {
public:
    ArgumentLengthError(const std::string& what_arg, std::size_t required, std::size_t actual)
        : std::length_error(what_arg), required_(required), actual_(actual) {}

    std::size_t required() const noexcept { return required_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t required_;
    std::size_t actual_;
};

// An internal exactness guarantee failed (a division that must be exact
// left a remainder). Always an implementation bug, never an input problem.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bellpart
