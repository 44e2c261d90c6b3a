#pragma once

#include <stdexcept>
#include <string>

namespace charkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed permutations, matrices, files or family parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured size cap (group order, vector space size) was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ContainmentError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An algorithm reached a state that the theory rules out.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A lemma that should hold unconditionally failed on concrete data.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace charkit

namespace charkit {

class NotACharacter : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace charkit
