#pragma once

#include <stdexcept>
#include <string>

namespace fuzzlat {

enum class Errc {
  Syntax,            // malformed expression or document text
  Range,             // rational literal outside [0,1]
  EmptyAtom,         // empty set literal ({} or inverted interval)
  EmptySet,          // operation requires a nonempty set
  EmptyGrade,        // strict SVFS combination produced an empty grade
  InvalidPair,       // (h1,h2) with h1 > h2 somewhere, or neither strict
  InvalidF,          // delta_f map not strict or wrong boundary values
  UniverseMismatch,  // pointwise operation on different universes
  FamilyMismatch,    // grade map applied to the wrong family
  InvalidNesting,    // cut family not antitone
  NotOnGrid,         // oracle input not a multiple of 1/n
  NotClosed,         // ClosedSubset constructed from a non-closed set
  UnknownName,       // unknown suite, diagram, embedding or set name
  Io,                // file read/write failure
  Usage,             // bad CLI invocation
  Internal,          // broken internal invariant (always a bug)
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fuzzlat
