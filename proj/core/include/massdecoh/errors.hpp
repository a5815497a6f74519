// Copyright 2026 The massdecoh Authors
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

#include <stdexcept>
#include <string>
#include <utility>

namespace massdecoh {

// Root of every error raised by the library. Tools map ConfigError to exit
// code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Qubit count outside the supported range of a state or protocol.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Gate references a qubit that does not exist, or repeats one.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Circuit and state disagree on qubit count.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Kraus set fails completeness.
class ChannelError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// Empty or malformed caller input (histograms, row sets, CSV text).
class InputError : public Error {
 public:
  using Error::Error;
};

// Too few phase points to resolve the requested harmonic.
class SamplingError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config error on '" + key + "': " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace massdecoh
