#pragma once

#include <stdexcept>
#include <string>

namespace l1tv {

/* Base of every error this library throws. The CLI maps all of them to
 * exit code 2 (usage / precondition). */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two masks (or a mask and a grid) disagree on geometry.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Bad stencil, bad rational literal, unknown preset name, ...
class ConfigError : public Error {
public:
    using Error::Error;
};

// A numeric parameter is outside its admissible interval.
class DomainError : public Error {
public:
    using Error::Error;
};

// Exhaustive enumeration refused because the grid is too large.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace l1tv
