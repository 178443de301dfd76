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

#include "pauliscope/vertex_set.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

using namespace pauliscope;

VertexSet::VertexSet(size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {
}

VertexSet::VertexSet(size_t universe, std::initializer_list<size_t> members) : VertexSet(universe) {
    for (size_t v : members) {
        set(v);
    }
}

VertexSet::VertexSet(size_t universe, const std::vector<size_t> &members) : VertexSet(universe) {
    for (size_t v : members) {
        set(v);
    }
}

VertexSet VertexSet::full(size_t universe) {
    VertexSet s(universe);
    for (auto &w : s.words_) {
        w = ~uint64_t{0};
    }
    if (universe & 63) {
        s.words_.back() = (uint64_t{1} << (universe & 63)) - 1;
    }
    return s;
}

void VertexSet::check(size_t v) const {
    if (v >= universe_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }
}

void VertexSet::set(size_t v) {
    check(v);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
}

void VertexSet::reset(size_t v) {
    check(v);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
}

void VertexSet::flip(size_t v) {
    check(v);
    words_[v >> 6] ^= uint64_t{1} << (v & 63);
}

size_t VertexSet::count() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t VertexSet::first() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return (w << 6) + static_cast<size_t>(std::countr_zero(words_[w]));
        }
    }
    return npos;
}

size_t VertexSet::next(size_t v) const {
    size_t start = v + 1;
    if (start >= universe_) {
        return npos;
    }
    size_t w = start >> 6;
    uint64_t bits = words_[w] & (~uint64_t{0} << (start & 63));
    while (true) {
        if (bits) {
            return (w << 6) + static_cast<size_t>(std::countr_zero(bits));
        }
        if (++w >= words_.size()) {
            return npos;
        }
        bits = words_[w];
    }
}

std::vector<size_t> VertexSet::members() const {
    std::vector<size_t> out;
    out.reserve(count());
    for_each([&](size_t v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet &other) const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w] & ~other.words_[w]) {
            return false;
        }
    }
    return true;
}

bool VertexSet::intersects(const VertexSet &other) const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w] & other.words_[w]) {
            return true;
        }
    }
    return false;
}

size_t VertexSet::intersection_count(const VertexSet &other) const {
    size_t total = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        total += static_cast<size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return total;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) {
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) {
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

VertexSet &VertexSet::operator^=(const VertexSet &other) {
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

VertexSet &VertexSet::subtract(const VertexSet &other) {
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= ~other.words_[w];
    }
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(universe_);
    out.subtract(*this);
    return out;
}

bool VertexSet::lex_less(const VertexSet &other) const {
    size_t a = first();
    size_t b = other.first();
    while (a != npos && b != npos) {
        if (a != b) {
            return a < b;
        }
        a = next(a);
        b = other.next(b);
    }
    return a == npos && b != npos;
}

std::string VertexSet::str() const {
    std::ostringstream out;
    out << '{';
    bool first_member = true;
    for_each([&](size_t v) {
        if (!first_member) {
            out << ',';
        }
        first_member = false;
        out << v;
    });
    out << '}';
    return out.str();
}

VertexSet pauliscope::operator&(VertexSet a, const VertexSet &b) {
    a &= b;
    return a;
}

VertexSet pauliscope::operator|(VertexSet a, const VertexSet &b) {
    a |= b;
    return a;
}

VertexSet pauliscope::operator^(VertexSet a, const VertexSet &b) {
    a ^= b;
    return a;
}

VertexSet pauliscope::difference(VertexSet a, const VertexSet &b) {
    a.subtract(b);
    return a;
}

void pauliscope::canonical_sort(std::vector<VertexSet> &sets) {
    std::sort(sets.begin(), sets.end(), [](const VertexSet &a, const VertexSet &b) { return a.lex_less(b); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}
