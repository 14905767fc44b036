// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_ERROR_HPP
#define TREEDOC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treedoc {

// Base of every exception thrown by the library. Document faults found while
// importing are never thrown; they are reported as Diagnostic values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A compound was built with a child count its label does not admit.
class ArityError : public Error {
 public:
  ArityError(std::string label, std::size_t expected, std::size_t actual);
  const std::string& label() const { return label_; }
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::string label_;
  std::size_t expected_;
  std::size_t actual_;
};

// A path index was out of range; depth() is the position in the path that failed.
class PathError : public Error {
 public:
  PathError(std::size_t depth, std::string what);
  std::size_t depth() const { return depth_; }

 private:
  std::size_t depth_;
};

// An edit whose recorded `old` subtree does not match the document.
class ConflictError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input. offset() is a byte index into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A node with no LaTeX mapping was handed to the exporter.
class ExportError : public Error {
 public:
  ExportError(std::string label, std::string path, const std::string& what);
  const std::string& label() const { return label_; }
  const std::string& path() const { return path_; }

 private:
  std::string label_;
  std::string path_;
};

// A fault kind that cannot be injected into the given clean source.
class InapplicableFault : public Error {
 public:
  using Error::Error;
};

}  // namespace treedoc

#endif  // TREEDOC_ERROR_HPP
