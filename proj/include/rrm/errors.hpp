#ifndef RRM_ERRORS_HPP_
#define RRM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rrm {

  // Base for everything the library throws on purpose.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A table, literal or term that is not well formed (ragged rows, indices
  // out of range, comparable domain words, wrong arity, ...).
  class StructuralError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its domain, e.g. a meet of two elements
  // that are not left-compatible.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Enumeration or search would exceed a configured bound.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // Text or JSON input could not be read.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace rrm

#endif  // RRM_ERRORS_HPP_
