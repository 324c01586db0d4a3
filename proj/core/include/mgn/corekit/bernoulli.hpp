// Copyright 2026 The mgn Authors
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

#ifndef MGN_COREKIT_BERNOULLI_HPP_
#define MGN_COREKIT_BERNOULLI_HPP_

#include "mgn/corekit/rational.hpp"

namespace mgn {

// B_k from x/(e^x - 1) = sum B_k x^k / k!, so B_1 = -1/2.
// Values are cached process-wide; the call is thread-safe.
Rational bernoulli(unsigned k);

}  // namespace mgn

#endif  // MGN_COREKIT_BERNOULLI_HPP_
