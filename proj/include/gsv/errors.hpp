#pragma once

#include <stdexcept>
#include <string>

namespace gsv {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
  using Error::Error;
};

class NotGmp : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, long line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

class UnsupportedFormat : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class InfeasibleSpec : public Error {
public:
  using Error::Error;
};

}  // namespace gsv
