#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubeconf {

enum class ErrorKind {
  invalid_argument,
  parse,
  budget_exceeded,
  self_loop,
  unreachable,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Graph-file syntax or semantic error; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Start and goal lie in different components of the move graph.
class UnreachableError : public Error {
 public:
  UnreachableError(std::size_t start_component, std::size_t goal_component)
      : Error(ErrorKind::unreachable,
              "goal unreachable: start in component " +
                  std::to_string(start_component) + ", goal in component " +
                  std::to_string(goal_component)),
        start_component_(start_component),
        goal_component_(goal_component) {}

  std::size_t start_component() const noexcept { return start_component_; }
  std::size_t goal_component() const noexcept { return goal_component_; }

 private:
  std::size_t start_component_;
  std::size_t goal_component_;
};

}  // namespace cubeconf
