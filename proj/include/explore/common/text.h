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

#ifndef EXPLORE_COMMON_TEXT_H_
#define EXPLORE_COMMON_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace explore {

// Splits on `delimiter`; empty pieces are kept unless `skip_empty`.
std::vector<std::string_view> Split(std::string_view text, char delimiter,
                                    bool skip_empty = false);

// Splits on runs of spaces and tabs.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Strips leading and trailing ASCII whitespace.
std::string_view Trim(std::string_view text);

// Removes `prefix` from the front of `*text` if present.
inline bool ConsumePrefix(std::string_view* text, std::string_view prefix) {
  if (!text->starts_with(prefix)) return false;
  text->remove_prefix(prefix.size());
  return true;
}

}  // namespace explore

#endif  // EXPLORE_COMMON_TEXT_H_
