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

#ifndef PAULISCOPE_VERTEX_SET_H
#define PAULISCOPE_VERTEX_SET_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pauliscope {

/// A packed bit-vector of members over a fixed universe {0, ..., universe-1}.
///
/// Used both as an adjacency row and as a vertex subset of a parent graph.
/// Bits past the universe are always zero, so word-wise comparisons and
/// popcounts are exact.
class VertexSet {
   public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    VertexSet() = default;
    explicit VertexSet(size_t universe);
    VertexSet(size_t universe, std::initializer_list<size_t> members);
    VertexSet(size_t universe, const std::vector<size_t> &members);

    static VertexSet full(size_t universe);

    size_t universe() const {
        return universe_;
    }
    bool test(size_t v) const {
        return (words_[v >> 6] >> (v & 63)) & 1;
    }
    void set(size_t v);
    void reset(size_t v);
    void flip(size_t v);

    size_t count() const;
    bool empty() const;
    /// First member, or npos.
    size_t first() const;
    /// Next member strictly after v, or npos.
    size_t next(size_t v) const;
    std::vector<size_t> members() const;

    bool is_subset_of(const VertexSet &other) const;
    bool intersects(const VertexSet &other) const;
    size_t intersection_count(const VertexSet &other) const;

    VertexSet &operator&=(const VertexSet &other);
    VertexSet &operator|=(const VertexSet &other);
    VertexSet &operator^=(const VertexSet &other);
    /// Removes every member of `other`.
    VertexSet &subtract(const VertexSet &other);
    VertexSet complement() const;

    bool operator==(const VertexSet &other) const = default;
    /// Lexicographic order on the sorted member lists.
    bool lex_less(const VertexSet &other) const;

    std::string str() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }

    template <typename F>
    void for_each(F &&f) const {
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t bits = words_[w];
            while (bits) {
                f((w << 6) + static_cast<size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

   private:
    void check(size_t v) const;

    size_t universe_ = 0;
    std::vector<uint64_t> words_;
};

VertexSet operator&(VertexSet a, const VertexSet &b);
VertexSet operator|(VertexSet a, const VertexSet &b);
VertexSet operator^(VertexSet a, const VertexSet &b);
VertexSet difference(VertexSet a, const VertexSet &b);

/// Sorts sets by their member lists and removes duplicates.
void canonical_sort(std::vector<VertexSet> &sets);

}  // namespace pauliscope

#endif
