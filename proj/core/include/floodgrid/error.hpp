#pragma once

#include <stdexcept>
#include <string>

namespace floodgrid {

// Base for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (raster, GeoJSON, curve, CSV, config). The message
// carries the location (line/token or feature index) where parsing stopped.
class ParseError : public Error {
  public:
    using Error::Error;
};

// A value violates a domain invariant (degenerate bbox, bad curve, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

// Run configuration violates its invariants.
class ConfigError : public Error {
  public:
    using Error::Error;
};

// Nothing to analyse: empty grid, no parcels, too few records.
class EmptyInputError : public Error {
  public:
    using Error::Error;
};

} // namespace floodgrid
