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


#include "pauliscope/exact_cover.h"

#include <algorithm>
#include <stdexcept>

using namespace pauliscope;

// Node 0 is the root header; nodes 1..num_columns are column headers.
ExactCover::ExactCover(size_t num_columns) : num_columns_(num_columns), sizes_(num_columns + 1, 0) {
    for (size_t c = 0; c <= num_columns; c++) {
        nodes_.push_back({c == 0 ? num_columns : c - 1, c == num_columns ? 0 : c + 1, c, c, c, static_cast<size_t>(-1)});
    }
}

size_t ExactCover::add_row(const std::vector<size_t> &columns) {
    if (columns.empty()) {
        throw std::invalid_argument("exact cover row must cover at least one column");
    }
    for (size_t c : columns) {
        if (c >= num_columns_) {
            throw std::out_of_range("exact cover column out of range");
        }
    }
    size_t row = row_start_.size();
    size_t first = nodes_.size();
    row_start_.push_back(first);
    for (size_t k = 0; k < columns.size(); k++) {
        size_t c = columns[k] + 1;
        size_t id = nodes_.size();
        size_t left = k == 0 ? id : id - 1;
        nodes_.push_back({left, first, nodes_[c].up, c, c, row});
        nodes_[nodes_[c].up].down = id;
        nodes_[c].up = id;
        nodes_[left].right = id;
        nodes_[first].left = id;
        sizes_[c]++;
    }
    return row;
}

void ExactCover::cover(size_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
        for (size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
            nodes_[nodes_[j].down].up = nodes_[j].up;
            nodes_[nodes_[j].up].down = nodes_[j].down;
            sizes_[nodes_[j].column]--;
        }
    }
}

void ExactCover::uncover(size_t c) {
    for (size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
        for (size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
            sizes_[nodes_[j].column]++;
            nodes_[nodes_[j].down].up = j;
            nodes_[nodes_[j].up].down = j;
        }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
}

bool ExactCover::search(const std::function<bool(const std::vector<size_t> &)> &visit, size_t &count) {
    if (nodes_[0].right == 0) {
        std::vector<size_t> solution = partial_;
        std::sort(solution.begin(), solution.end());
        count++;
        return visit(solution);
    }
    size_t best = 0;
    for (size_t c = nodes_[0].right; c != 0; c = nodes_[c].right) {
        if (best == 0 || sizes_[c] < sizes_[best]) {
            best = c;
        }
    }
    if (sizes_[best] == 0) {
        return true;
    }
    cover(best);
    bool keep_going = true;
    for (size_t r = nodes_[best].down; r != best && keep_going; r = nodes_[r].down) {
        partial_.push_back(nodes_[r].row);
        for (size_t j = nodes_[r].right; j != r; j = nodes_[j].right) {
            cover(nodes_[j].column);
        }
        keep_going = search(visit, count);
        for (size_t j = nodes_[r].left; j != r; j = nodes_[j].left) {
            uncover(nodes_[j].column);
        }
        partial_.pop_back();
    }
    uncover(best);
    return keep_going;
}

size_t ExactCover::enumerate(const std::function<bool(const std::vector<size_t> &)> &visit) {
    size_t count = 0;
    partial_.clear();
    search(visit, count);
    return count;
}

std::optional<std::vector<size_t>> ExactCover::find_first() {
    std::optional<std::vector<size_t>> out;
    enumerate([&](const std::vector<size_t> &s) {
        out = s;
        return false;
    });
    return out;
}

std::vector<std::vector<size_t>> ExactCover::all() {
    std::vector<std::vector<size_t>> out;
    enumerate([&](const std::vector<size_t> &s) {
        out.push_back(s);
        return true;
    });
    return out;
}
