#pragma once

#include <stdexcept>
#include <string>

namespace aifp {

/// Input rejected by a schema, unit or invariant check.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& message, std::string file = {})
      : std::runtime_error(compose(field, message, file)),
        field_(std::move(field)),
        message_(message),
        file_(std::move(file)) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& file() const noexcept { return file_; }

 private:
  static std::string compose(const std::string& field, const std::string& message, const std::string& file) {
    std::string out;
    if (!file.empty()) out += file + ": ";
    if (!field.empty()) out += field + ": ";
    return out + message;
  }

  std::string field_;
  std::string message_;
  std::string file_;
};

/// A solver target that cannot be met inside its search bracket.
class UnreachableTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aifp
