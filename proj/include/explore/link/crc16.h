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


#ifndef EXPLORE_LINK_CRC16_H_
#define EXPLORE_LINK_CRC16_H_

#include <cstdint>
#include <span>

namespace explore::link {

// CRC-16 with polynomial 0x1021, initial value 0xFFFF, no reflection and no
// final XOR (commonly catalogued as CRC-16/CCITT-FALSE; check value 0x29B1
// for the ASCII string "123456789").
uint16_t Crc16(std::span<const uint8_t> bytes);

}  // namespace explore::link

#endif  // EXPLORE_LINK_CRC16_H_
