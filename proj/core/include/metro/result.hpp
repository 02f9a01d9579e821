// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace metro {

// A coded failure. `subject` carries the code's parameter: an id, a document
// path, a "line:col" pair or a position, depending on the code.
struct Error {
  std::string code;
  std::string subject;
  std::string detail;

  friend bool operator==(const Error&, const Error&) = default;
  friend bool operator<(const Error& a, const Error& b) {
    return std::tie(a.code, a.subject, a.detail) <
           std::tie(b.code, b.subject, b.detail);
  }
};

std::string to_string(const Error& e);

// Sorts by (code, subject, detail) and drops exact duplicates.
inline void normalize(std::vector<Error>& errors) {
  std::sort(errors.begin(), errors.end());
  errors.erase(std::unique(errors.begin(), errors.end()), errors.end());
}

template <typename T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(Error error) : state_(std::vector<Error>{std::move(error)}) {}  // NOLINT
  Result(std::vector<Error> errors) : state_(std::move(errors)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T& value() & { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const std::vector<Error>& errors() const {
    return std::get<std::vector<Error>>(state_);
  }
  const Error& error() const { return errors().front(); }

 private:
  std::variant<T, std::vector<Error>> state_;
};

}  // namespace metro
