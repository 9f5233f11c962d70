#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgdual {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class GenusOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class NoDualFound : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace mgdual
