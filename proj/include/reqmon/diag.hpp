// Source positions and the error hierarchy shared by all passes.
#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reqmon {

/* 1-based line/column. line == 0 means "no position" (errors raised
 * outside of any source text, e.g. during monitoring). */
struct SourcePos {
  int line = 0;
  int col = 0;

  bool known() const { return line > 0; }
  std::string str() const {
    return known() ? std::to_string(line) + ":" + std::to_string(col) : "?";
  }
};

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg, SourcePos pos = {})
      : std::runtime_error(pos.known() ? pos.str() + ": " + msg : msg),
        pos_(pos) {}

  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

class LexError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, SourcePos pos,
             std::vector<std::string> expected = {})
      : Error(msg, pos), expected_(std::move(expected)) {}

  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::vector<std::string> expected_;
};

// Requirement cannot be turned into a past-time monitor.
class NonMonitorableError : public Error {
public:
  using Error::Error;
};

class MissingSignalError : public Error {
public:
  explicit MissingSignalError(const std::string& name)
      : Error("missing signal '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class TypeMismatchError : public Error {
public:
  TypeMismatchError(const std::string& name, const std::string& expected,
                    const std::string& found)
      : Error("signal '" + name + "': expected " + expected + ", found " +
              found),
        name_(name), expected_(expected), found_(found) {}

  const std::string& name() const { return name_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

private:
  std::string name_, expected_, found_;
};

class BoundTooLargeError : public Error {
public:
  explicit BoundTooLargeError(std::uint32_t hi, std::uint32_t cap)
      : Error("interval bound " + std::to_string(hi) +
              " exceeds the monitor cap of " + std::to_string(cap)) {}
};

class UnsupportedConstructError : public Error {
public:
  using Error::Error;
};

class MissingParamError : public Error {
public:
  explicit MissingParamError(const std::string& placeholder)
      : Error("no parameter value for placeholder '" + placeholder + "'") {}
};

class DuplicateKeyError : public Error {
public:
  explicit DuplicateKeyError(const std::string& key, SourcePos pos = {})
      : Error("duplicate key '" + key + "'", pos) {}
};

// Malformed input file (.frt label, params, catalog, trace CSV).
class FileFormatError : public Error {
public:
  using Error::Error;
};

class EmptyInputError : public Error {
public:
  EmptyInputError() : Error("empty input") {}
};

class HeterogeneousTypesError : public Error {
public:
  HeterogeneousTypesError() : Error("values are not of one homogeneous type") {}
};

}  // namespace reqmon
