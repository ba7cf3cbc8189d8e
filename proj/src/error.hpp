#pragma once

#include <stdexcept>
#include <string>

namespace jamstring {

enum class errc {
  domain,          // argument outside the model's domain
  parse,           // malformed config / spec document
  ingestion,       // measurement data rejected; message lists offending lines
  degenerate_fit,  // not enough distinct points for a line
  calibration,     // fit cannot be inverted to a friction coefficient
  no_halving,      // lossless chain never halves
  infeasible,      // valid request, empty result
  unknown_field,   // objective or column name not known
  cap_exceeded,    // sweep grid larger than the configured cap
  io,              // file could not be read or written
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

}  // namespace jamstring
