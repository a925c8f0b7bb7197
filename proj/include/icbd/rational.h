// Copyright 2026 The ICBD Authors
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

#ifndef ICBD_RATIONAL_H_
#define ICBD_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace icbd {

// Exact rational number. Every numeric quantity in the solver, witness and
// LP layers is either an integer or one of these.
using Rational = mpq_class;

// Canonical "p/q" form, always with an explicit denominator.
std::string FormatRational(const Rational& q);

// Accepts "p/q" or an integer "p". Throws IcbdError(kParseError).
Rational ParseRational(std::string_view text);

}  // namespace icbd

#endif  // ICBD_RATIONAL_H_
