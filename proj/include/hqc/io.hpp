// Copyright 2026 The hqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hqc/analysis.hpp"
#include "hqc/codes.hpp"
#include "hqc/engine.hpp"
#include "hqc/fault.hpp"
#include "hqc/lemma1.hpp"
#include "hqc/schedule.hpp"

namespace hqc::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const PauliString& p);
PauliString pauli_from_json(const Json& j);

/// A unit-coefficient Hermitian string is written as its text form, anything
/// else as a list of [pauli, re, im] terms.
Json to_json(const Operator& op, std::size_t n);
Operator operator_from_json(const Json& j, std::size_t n);

Json to_json(const SubsystemCode& c);
SubsystemCode code_from_json(const Json& j);

Json to_json(const Segment& s);
Segment segment_from_json(const Json& j, std::size_t n);

Json to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j);

Json to_json(const HolonomyReport& r);
Json to_json(const InjectResult& r);
Json to_json(const Lemma1Result& r);

/// Header plus one row per sample, numbers with 17 significant digits.
void write_csv(std::ostream& os, const SlowdownCurve& c);
SlowdownCurve read_csv(std::istream& is);
std::string format_number(double x);

/// Pretty-printed JSON with a trailing newline.
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace hqc::io
