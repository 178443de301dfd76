// Copyright 2026 The Pauliscope Authors
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


// Two-qubit product and commutation tables in label order 1 2 3 a 4 5 6 b 7 8 9 c 10 11 12.
// Products: "0" is the identity, "i3" means i times operator 3.

#ifndef PAULISCOPE_TWO_QUBIT_TABLES_H
#define PAULISCOPE_TWO_QUBIT_TABLES_H

#include <array>
#include <string_view>

namespace pauliscope::tables {

inline constexpr std::array<std::string_view, 15> kTwoQubitLabels{"1", "2", "3", "a", "4", "5", "6", "b", "7", "8", "9", "c", "10", "11", "12"};

// Row label then 15 entries.
inline constexpr std::array<std::array<std::string_view, 16>, 15> kTwoQubitProducts{{
    {"1", "0", "i3", "-i2", "4", "a", "i6", "-i5", "7", "b", "i9", "-i8", "10", "c", "i12", "-i11"},
    {"2", "-i3", "0", "i1", "5", "-i6", "a", "i4", "8", "-i9", "b", "i7", "11", "-i12", "c", "i10"},
    {"3", "i2", "-i1", "0", "6", "i5", "-i4", "a", "9", "i8", "-i7", "b", "12", "i11", "-i10", "c"},
    {"a", "4", "5", "6", "0", "1", "2", "3", "ic", "i10", "i11", "i12", "-ib", "-i7", "-i8", "-i9"},
    {"4", "a", "i6", "-i5", "1", "0", "i3", "-i2", "i10", "ic", "-12", "11", "-i7", "-ib", "9", "-8"},
    {"5", "-i6", "a", "i4", "2", "-i3", "0", "i1", "i11", "12", "ic", "-10", "-i8", "-9", "-ib", "7"},
    {"6", "i5", "-i4", "a", "3", "i2", "-i1", "0", "i12", "-11", "10", "ic", "-i9", "8", "-7", "-ib"},
    {"b", "7", "8", "9", "-ic", "-i10", "-i11", "-i12", "0", "1", "2", "3", "ia", "i4", "i5", "i6"},
    {"7", "b", "i9", "-i8", "-i10", "-ic", "12", "-11", "1", "0", "i3", "-i2", "i4", "ia", "-6", "5"},
    {"8", "-i9", "b", "i7", "-i11", "-12", "-ic", "10", "2", "-i3", "0", "i1", "i5", "6", "ia", "-4"},
    {"9", "i8", "-i7", "b", "-i12", "11", "-10", "-ic", "3", "i2", "-i1", "0", "i6", "-5", "4", "ia"},
    {"c", "10", "11", "12", "ib", "i7", "i8", "i9", "-ia", "-i4", "-i5", "-i6", "0", "1", "2", "3"},
    {"10", "c", "i12", "-i11", "i7", "ib", "-9", "8", "-i4", "-ia", "6", "-5", "1", "0", "i3", "-i2"},
    {"11", "-i12", "c", "i10", "i8", "9", "ib", "-7", "-i5", "-6", "-ia", "4", "2", "-i3", "0", "i1"},
    {"12", "i11", "-i10", "c", "i9", "-8", "7", "ib", "-i6", "5", "-4", "-ia", "3", "i2", "-i1", "0"},
}};

inline constexpr std::array<std::string_view, 15> kTwoQubitCommutation{
    "000110011001100",  // 1
    "000101010101010",  // 2
    "000100110011001",  // 3
    "111011100000000",  // a
    "100100000110011",  // 4
    "010100001010101",  // 5
    "001100001100110",  // 6
    "111000001110000",  // b
    "100001110000011",  // 7
    "010010110000101",  // 8
    "001011010000110",  // 9
    "111000000000111",  // c
    "100001100111000",  // 10
    "010010101011000",  // 11
    "001011001101000",  // 12
};

}  // namespace pauliscope::tables

#endif
