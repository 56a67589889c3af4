#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contsem {

/// Base of every error raised by the pipeline. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t position, std::string name)
      : Error("unknown identifier '" + name + "' at " + std::to_string(position)),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::size_t index)
      : Error("unbound variable #" + std::to_string(index)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class TypeMismatch : public Error {
 public:
  TypeMismatch(std::string expected, std::string found, std::string position)
      : Error("type mismatch at " + (position.empty() ? std::string("root") : position) +
              ": expected " + expected + ", found " + found),
        expected_(std::move(expected)),
        found_(std::move(found)),
        position_(std::move(position)) {}
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  const std::string& position() const { return position_; }

 private:
  std::string expected_;
  std::string found_;
  std::string position_;
};

class StepBudgetExceeded : public Error {
 public:
  explicit StepBudgetExceeded(std::size_t budget)
      : Error("reduction exceeded the step budget of " + std::to_string(budget)),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

class NotReifiable : public Error {
 public:
  NotReifiable(std::string position, const std::string& detail)
      : Error("term is not reifiable at " + (position.empty() ? std::string("root") : position) +
              ": " + detail),
        position_(std::move(position)) {}
  const std::string& position() const { return position_; }

 private:
  std::string position_;
};

class SignatureTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownWord : public Error {
 public:
  UnknownWord(std::string word, std::string profile)
      : Error("unknown word '" + word + "' in profile " + profile), word_(std::move(word)) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

class UnsupportedCategory : public Error {
 public:
  UnsupportedCategory(const std::string& category, const std::string& profile)
      : Error("category " + category + " has no template in profile " + profile) {}
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ProfileMismatch : public Error {
 public:
  ProfileMismatch(const std::string& node, const std::string& profile)
      : Error(node + " is not available in profile " + profile) {}
};

class EmptyEnvironment : public Error {
 public:
  explicit EmptyEnvironment(std::size_t site)
      : Error("sel#" + std::to_string(site) + " has no accessible referent"), site_(site) {}
  std::size_t site() const { return site_; }

 private:
  std::size_t site_;
};

/// An error located at a line of a discourse file.
class SourceError : public Error {
 public:
  SourceError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace contsem
