#pragma once

#include <stdexcept>
#include <string>

namespace mec2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input outside what is supported (T2ATC with k != 2, hyperedges).
class UnsupportedInstance : public InputError {
 public:
  using InputError::InputError;
};

// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An engine declined to run because a size guard was exceeded.
class Refusal : public Error {
 public:
  Refusal(const std::string& message, std::string suggestion)
      : Error(message + (suggestion.empty() ? "" : " (try " + suggestion + ")")),
        suggestion_(std::move(suggestion)) {}

  const std::string& suggestion() const { return suggestion_; }

 private:
  std::string suggestion_;
};

}  // namespace mec2
