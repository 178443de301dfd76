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

#include "pauliscope/graph_search.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>

using namespace pauliscope;

namespace {

constexpr size_t kUnreached = std::numeric_limits<size_t>::max();

std::vector<size_t> bfs_distances(const Graph &g, size_t root) {
    std::vector<size_t> dist(g.size(), kUnreached);
    std::deque<size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        size_t u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](size_t w) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

/// Greedy sequential coloring of `candidates`, used as the clique-size bound.
/// Fills `order` with the candidate vertices and `bound[i]` with the number of
/// colors used up to and including order[i].
void color_sort(const Graph &g, const VertexSet &candidates, std::vector<size_t> &order, std::vector<size_t> &bound) {
    order.clear();
    bound.clear();
    VertexSet uncolored = candidates;
    size_t color = 0;
    while (!uncolored.empty()) {
        color++;
        VertexSet available = uncolored;
        for (size_t v = available.first(); v != VertexSet::npos; v = available.next(v)) {
            uncolored.reset(v);
            available.subtract(g.neighbors(v));
            order.push_back(v);
            bound.push_back(color);
        }
    }
}

/// Branch-and-bound clique search. With `collect_ties` it gathers every
/// clique of the best size; otherwise it stops improving once `target` is met.
class CliqueSearch {
   public:
    CliqueSearch(const Graph &g, bool collect_ties, size_t target)
        : g_(g), collect_ties_(collect_ties), target_(target), current_(g.size()) {
    }

    void run(const VertexSet &candidates, size_t floor) {
        best_size_ = floor;
        expand(candidates);
    }

    size_t best_size() const {
        return best_size_;
    }
    std::vector<VertexSet> &found() {
        return found_;
    }

   private:
    bool done() const {
        return !collect_ties_ && best_size_ >= target_;
    }

    void expand(VertexSet candidates) {
        std::vector<size_t> order;
        std::vector<size_t> bound;
        color_sort(g_, candidates, order, bound);
        for (size_t i = order.size(); i-- > 0;) {
            if (done()) {
                return;
            }
            size_t reach = depth_ + bound[i];
            if (collect_ties_ ? reach < best_size_ : reach <= best_size_) {
                return;
            }
            size_t v = order[i];
            current_.set(v);
            depth_++;
            VertexSet next = candidates & g_.neighbors(v);
            if (next.empty()) {
                record();
            } else {
                expand(next);
            }
            depth_--;
            current_.reset(v);
            candidates.reset(v);
        }
    }

    void record() {
        if (depth_ > best_size_) {
            best_size_ = depth_;
            found_.clear();
            found_.push_back(current_);
        } else if (collect_ties_ && depth_ == best_size_) {
            found_.push_back(current_);
        }
    }

    const Graph &g_;
    bool collect_ties_;
    size_t target_;
    VertexSet current_;
    size_t depth_ = 0;
    size_t best_size_ = 0;
    std::vector<VertexSet> found_;
};

size_t clique_number_within(const Graph &g, const VertexSet &candidates, size_t target) {
    CliqueSearch search(g, false, target);
    search.run(candidates, 0);
    return search.best_size();
}

}  // namespace

std::optional<size_t> pauliscope::girth(const Graph &g) {
    size_t best = kUnreached;
    for (size_t root = 0; root < g.size(); root++) {
        std::vector<size_t> dist(g.size(), kUnreached);
        std::vector<size_t> parent(g.size(), kUnreached);
        std::deque<size_t> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) {
                break;
            }
            g.neighbors(u).for_each([&](size_t w) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            });
        }
    }
    if (best == kUnreached) {
        return std::nullopt;
    }
    return best;
}

GraphInvariants pauliscope::invariants(const Graph &g) {
    GraphInvariants inv;
    inv.vertices = g.size();
    inv.edges = g.edge_count();
    for (size_t v = 0; v < g.size(); v++) {
        inv.degrees.push_back(g.degree(v));
    }
    inv.regular = std::adjacent_find(inv.degrees.begin(), inv.degrees.end(), std::not_equal_to<>()) == inv.degrees.end();
    inv.girth = girth(g);
    inv.connected = true;
    size_t diameter = 0;
    for (size_t root = 0; root < g.size(); root++) {
        for (size_t d : bfs_distances(g, root)) {
            if (d == kUnreached) {
                inv.connected = false;
            } else {
                diameter = std::max(diameter, d);
            }
        }
    }
    if (inv.connected) {
        inv.diameter = diameter;
    }
    return inv;
}

VertexSet pauliscope::maximum_clique(const Graph &g) {
    CliqueSearch search(g, false, kUnreached);
    search.run(g.all_vertices(), 0);
    if (search.found().empty()) {
        return VertexSet(g.size());
    }
    return search.found().front();
}

size_t pauliscope::chromatic_number(const Graph &g, size_t cap) {
    if (g.size() > cap) {
        throw CapExceeded("chromatic number refused: " + std::to_string(g.size()) + " vertices exceeds cap " + std::to_string(cap));
    }
    size_t n = g.size();
    if (n == 0) {
        return 0;
    }
    size_t lower = maximum_clique(g).count();
    size_t best = n;
    std::vector<size_t> color(n, 0);

    // Per vertex, how many colored neighbors use each color.
    std::vector<std::vector<uint16_t>> uses(n, std::vector<uint16_t>(n + 1, 0));
    std::vector<size_t> saturation(n, 0);

    auto assign = [&](size_t v, size_t c) {
        color[v] = c;
        g.neighbors(v).for_each([&](size_t w) {
            if (uses[w][c]++ == 0) {
                saturation[w]++;
            }
        });
    };
    auto unassign = [&](size_t v) {
        size_t c = color[v];
        color[v] = 0;
        g.neighbors(v).for_each([&](size_t w) {
            if (--uses[w][c] == 0) {
                saturation[w]--;
            }
        });
    };

    std::function<void(size_t, size_t)> search = [&](size_t colored, size_t used) {
        if (best == lower) {
            return;
        }
        if (colored == n) {
            best = std::min(best, used);
            return;
        }
        size_t pick = kUnreached;
        for (size_t v = 0; v < n; v++) {
            if (color[v] != 0) {
                continue;
            }
            if (pick == kUnreached || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick))) {
                pick = v;
            }
        }
        for (size_t c = 1; c <= used + 1 && c < best; c++) {
            if (uses[pick][c] != 0) {
                continue;
            }
            assign(pick, c);
            search(colored + 1, std::max(used, c));
            unassign(pick);
        }
    };
    search(0, 0);
    return best;
}

bool pauliscope::is_independent(const Graph &g, const VertexSet &s) {
    bool ok = true;
    s.for_each([&](size_t v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

bool pauliscope::is_clique(const Graph &g, const VertexSet &s) {
    bool ok = true;
    s.for_each([&](size_t v) {
        VertexSet others = s;
        others.reset(v);
        ok = ok && others.is_subset_of(g.neighbors(v));
    });
    return ok;
}

IndependentSets pauliscope::max_independent_sets(const Graph &g, bool enumerate_all, size_t cap) {
    if (g.size() > cap) {
        throw CapExceeded("independent set search refused: " + std::to_string(g.size()) + " vertices exceeds cap " + std::to_string(cap));
    }
    Graph co = complement(g);
    IndependentSets result;
    if (g.size() == 0) {
        result.witnesses.push_back(VertexSet(0));
        return result;
    }
    if (enumerate_all) {
        CliqueSearch search(co, true, kUnreached);
        search.run(co.all_vertices(), 0);
        result.size = search.best_size();
        result.witnesses = std::move(search.found());
        canonical_sort(result.witnesses);
        return result;
    }

    size_t alpha = clique_number_within(co, co.all_vertices(), kUnreached);
    result.size = alpha;

    // Build the lexicographically least witness greedily: keep v whenever the
    // remaining higher-indexed compatible vertices can still complete it.
    VertexSet chosen(g.size());
    VertexSet compatible = co.all_vertices();
    for (size_t v = 0; v < g.size() && chosen.count() < alpha; v++) {
        if (!compatible.test(v)) {
            continue;
        }
        size_t needed = alpha - chosen.count() - 1;
        VertexSet rest = compatible & co.neighbors(v);
        for (size_t u = 0; u <= v; u++) {
            if (rest.test(u)) {
                rest.reset(u);
            }
        }
        if (needed == 0 || clique_number_within(co, rest, needed) >= needed) {
            chosen.set(v);
            compatible &= co.neighbors(v);
        }
    }
    result.witnesses.push_back(chosen);
    return result;
}

std::vector<VertexSet> pauliscope::independent_sets_of_size(const Graph &g, size_t size, const VertexSet &required) {
    if (!is_independent(g, required) || required.count() > size) {
        return {};
    }
    Graph co = complement(g);
    VertexSet candidates = co.all_vertices();
    required.for_each([&](size_t v) { candidates &= co.neighbors(v); });

    std::vector<VertexSet> out;
    VertexSet current = required;
    size_t need = size - required.count();
    std::function<void(VertexSet, size_t)> grow = [&](VertexSet cand, size_t remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (cand.count() < remaining) {
            return;
        }
        std::vector<size_t> order;
        std::vector<size_t> bound;
        color_sort(co, cand, order, bound);
        if (bound.empty() || bound.back() < remaining) {
            return;
        }
        for (size_t v = cand.first(); v != VertexSet::npos; v = cand.next(v)) {
            VertexSet next = cand & co.neighbors(v);
            for (size_t u = next.first(); u != VertexSet::npos && u < v; u = next.next(u)) {
                next.reset(u);
            }
            current.set(v);
            grow(next, remaining - 1);
            current.reset(v);
        }
    };
    grow(candidates, need);
    canonical_sort(out);
    return out;
}

VertexCover pauliscope::min_vertex_cover(const Graph &g, size_t cap) {
    IndependentSets mis = max_independent_sets(g, false, cap);
    VertexCover out;
    out.cover = mis.witnesses.front().complement();
    out.induced = induced_subgraph(g, out.cover);
    return out;
}

std::vector<VertexSet> pauliscope::maximal_cliques(const Graph &g) {
    std::vector<VertexSet> out;
    VertexSet current(g.size());
    std::function<void(VertexSet, VertexSet)> bron_kerbosch = [&](VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) {
                out.push_back(current);
            }
            return;
        }
        size_t pivot = VertexSet::npos;
        size_t pivot_score = 0;
        auto consider = [&](size_t u) {
            size_t score = p.intersection_count(g.neighbors(u));
            if (pivot == VertexSet::npos || score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        };
        p.for_each(consider);
        x.for_each(consider);
        VertexSet branch = difference(p, g.neighbors(pivot));
        for (size_t v = branch.first(); v != VertexSet::npos; v = branch.next(v)) {
            current.set(v);
            bron_kerbosch(p & g.neighbors(v), x & g.neighbors(v));
            current.reset(v);
            p.reset(v);
            x.set(v);
        }
    };
    if (g.size() > 0) {
        bron_kerbosch(g.all_vertices(), VertexSet(g.size()));
    }
    canonical_sort(out);
    return out;
}

bool pauliscope::is_isomorphism(const Graph &g, const Graph &h, const std::vector<size_t> &map) {
    if (g.size() != h.size() || map.size() != g.size()) {
        return false;
    }
    std::vector<bool> hit(h.size(), false);
    for (size_t t : map) {
        if (t >= h.size() || hit[t]) {
            return false;
        }
        hit[t] = true;
    }
    for (size_t u = 0; u < g.size(); u++) {
        VertexSet image(h.size());
        g.neighbors(u).for_each([&](size_t w) { image.set(map[w]); });
        if (!(image == h.neighbors(map[u]))) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<size_t>> pauliscope::find_isomorphism(const Graph &g, const Graph &h) {
    size_t n = g.size();
    if (n != h.size() || g.edge_count() != h.edge_count()) {
        return std::nullopt;
    }
    if (n > kIsomorphismVertexCap) {
        throw CapExceeded("isomorphism test refused: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(kIsomorphismVertexCap));
    }

    // Joint color refinement over the disjoint union, so colors are comparable.
    std::vector<size_t> color(2 * n);
    for (size_t v = 0; v < n; v++) {
        color[v] = g.degree(v);
        color[n + v] = h.degree(v);
    }
    size_t classes = 0;
    while (true) {
        std::map<std::pair<size_t, std::vector<size_t>>, size_t> ids;
        std::vector<std::pair<size_t, std::vector<size_t>>> signature(2 * n);
        for (size_t v = 0; v < 2 * n; v++) {
            const Graph &src = v < n ? g : h;
            size_t offset = v < n ? 0 : n;
            std::vector<size_t> around;
            src.neighbors(v - offset).for_each([&](size_t w) { around.push_back(color[w + offset]); });
            std::sort(around.begin(), around.end());
            signature[v] = {color[v], std::move(around)};
            ids.emplace(signature[v], 0);
        }
        size_t next_id = 0;
        for (auto &entry : ids) {
            entry.second = next_id++;
        }
        for (size_t v = 0; v < 2 * n; v++) {
            color[v] = ids[signature[v]];
        }
        if (ids.size() == classes) {
            break;
        }
        classes = ids.size();
    }
    std::vector<size_t> g_hist(classes, 0);
    std::vector<size_t> h_hist(classes, 0);
    for (size_t v = 0; v < n; v++) {
        g_hist[color[v]]++;
        h_hist[color[n + v]]++;
    }
    if (g_hist != h_hist) {
        return std::nullopt;
    }

    // Search order: start in the rarest color class, then always extend with
    // the vertex having the most already-ordered neighbors.
    std::vector<size_t> order;
    std::vector<bool> placed(n, false);
    std::vector<size_t> links(n, 0);
    while (order.size() < n) {
        size_t pick = kUnreached;
        for (size_t v = 0; v < n; v++) {
            if (placed[v]) {
                continue;
            }
            if (pick == kUnreached || links[v] > links[pick] ||
                (links[v] == links[pick] && g_hist[color[v]] < g_hist[color[pick]])) {
                pick = v;
            }
        }
        placed[pick] = true;
        order.push_back(pick);
        g.neighbors(pick).for_each([&](size_t w) { links[w]++; });
    }

    std::vector<size_t> map(n, kUnreached);
    std::vector<bool> used(n, false);
    std::function<bool(size_t)> extend = [&](size_t depth) -> bool {
        if (depth == n) {
            return true;
        }
        size_t u = order[depth];
        for (size_t t = 0; t < n; t++) {
            if (used[t] || color[n + t] != color[u]) {
                continue;
            }
            bool consistent = true;
            for (size_t k = 0; k < depth && consistent; k++) {
                size_t w = order[k];
                consistent = g.adjacent(u, w) == h.adjacent(t, map[w]);
            }
            if (!consistent) {
                continue;
            }
            map[u] = t;
            used[t] = true;
            if (extend(depth + 1)) {
                return true;
            }
            used[t] = false;
            map[u] = kUnreached;
        }
        return false;
    };
    if (!extend(0)) {
        return std::nullopt;
    }
    return map;
}

bool pauliscope::is_isomorphic(const Graph &g, const Graph &h) {
    return find_isomorphism(g, h).has_value();
}
