/*
 * Copyright 2026 The lowcost-explore Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EXPLORE_COMMON_NUMBER_FORMAT_H_
#define EXPLORE_COMMON_NUMBER_FORMAT_H_

#include <optional>
#include <string>
#include <string_view>

namespace explore {

// Shortest text that parses back to exactly the same double.
std::string FormatDouble(double value);

// Strict parse of a whole string; nullopt on trailing junk or overflow.
std::optional<double> ParseDouble(std::string_view text);
std::optional<long long> ParseInt(std::string_view text);

}  // namespace explore

#endif  // EXPLORE_COMMON_NUMBER_FORMAT_H_
