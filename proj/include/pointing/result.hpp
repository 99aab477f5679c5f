// Copyright 2026 The pointing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace pointing {

/// Machine-readable reason a frame (or one stage of it) produced no output.
enum class Reason {
  kNoFace,
  kNoHand,
  kEmptyRoi,
  kNoCluster,
  kNoGroundHit,
};

std::string_view to_string(Reason reason);

/// Value or failure reason. Used for the expected, per-frame failure modes
/// of the pipeline; contract violations throw instead.
template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(Reason reason) : reason_(reason) {}      // NOLINT(google-explicit-constructor)

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!value_) throw std::logic_error("Result::value() on failure");
    return *value_;
  }
  T&& value() && {
    if (!value_) throw std::logic_error("Result::value() on failure");
    return std::move(*value_);
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  Reason reason() const {
    if (value_) throw std::logic_error("Result::reason() on success");
    return reason_;
  }

 private:
  std::optional<T> value_;
  Reason reason_{};
};

}  // namespace pointing
