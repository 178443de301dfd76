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


#ifndef PAULISCOPE_EXACT_COVER_H
#define PAULISCOPE_EXACT_COVER_H

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace pauliscope {

/// Dancing-links exact cover solver.
///
/// Columns are chosen by minimum remaining size, ties broken by lowest column
/// index, and rows are tried in insertion order, so the order in which
/// solutions are produced is fully determined by the input.
class ExactCover {
   public:
    explicit ExactCover(size_t num_columns);

    /// Adds a row covering the given (distinct) columns; returns its index.
    size_t add_row(const std::vector<size_t> &columns);
    size_t num_rows() const {
        return row_start_.size();
    }

    /// The first solution in search order, as sorted row indices.
    std::optional<std::vector<size_t>> find_first();
    /// Calls `visit` on each solution (sorted row indices) until it returns
    /// false. Returns the number of solutions visited.
    size_t enumerate(const std::function<bool(const std::vector<size_t> &)> &visit);
    std::vector<std::vector<size_t>> all();

   private:
    struct Node {
        size_t left, right, up, down, column, row;
    };
    void cover(size_t c);
    void uncover(size_t c);
    bool search(const std::function<bool(const std::vector<size_t> &)> &visit, size_t &count);

    size_t num_columns_;
    std::vector<Node> nodes_;
    std::vector<size_t> sizes_;
    std::vector<size_t> row_start_;
    std::vector<size_t> partial_;
};

}  // namespace pauliscope

#endif
