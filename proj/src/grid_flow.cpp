#include "l1tv/grid_flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "l1tv/errors.hpp"

namespace l1tv {

namespace {

constexpr int kTerminal = -1;
constexpr int kOrphan = -2;
constexpr int kFree = -3;
constexpr int kInfiniteDist = std::numeric_limits<int>::max();

int rev(int d) { return d ^ 1; }

}  // namespace

GridFlowNetwork::GridFlowNetwork(int width, int height, std::span<const Offset> offsets,
                                 std::span<const std::int64_t> caps)
    : width_(width), height_(height), n_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height)),
      dirs_(static_cast<int>(2 * offsets.size())) {
    if (offsets.size() != caps.size()) throw ConfigError("offset/capacity count mismatch");
    if (dirs_ > 32) throw ConfigError("at most 16 stencil offsets are supported");
    std::vector<int> ddx, ddy;
    for (const Offset& o : offsets) {
        ddx.push_back(o.dx);
        ddy.push_back(o.dy);
        ddx.push_back(-o.dx);
        ddy.push_back(-o.dy);
    }
    for (int d = 0; d < dirs_; ++d)
        step_.push_back(static_cast<std::ptrdiff_t>(ddy[static_cast<std::size_t>(d)]) * width +
                        ddx[static_cast<std::size_t>(d)]);

    valid_.assign(n_, 0);
    rc_.assign(n_ * static_cast<std::size_t>(dirs_), 0);
    tr_.assign(n_, 0);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
            for (int d = 0; d < dirs_; ++d) {
                const int nx = x + ddx[static_cast<std::size_t>(d)], ny = y + ddy[static_cast<std::size_t>(d)];
                if (nx < 0 || ny < 0 || nx >= width || ny >= height) continue;
                valid_[i] |= std::uint32_t{1} << d;
                rc(i, d) = caps[static_cast<std::size_t>(d / 2)];
            }
        }
    }
}

void GridFlowNetwork::add_terminal(std::size_t node, std::int64_t source_cap, std::int64_t sink_cap) {
    if (source_cap < 0 || sink_cap < 0) throw ConfigError("terminal capacities must be nonnegative");
    const std::int64_t s = std::max<std::int64_t>(tr_[node], 0) + source_cap;
    const std::int64_t t = std::max<std::int64_t>(-tr_[node], 0) + sink_cap;
    constant_ += std::min(s, t);
    tr_[node] = s - t;
}

std::int64_t GridFlowNetwork::solve(FlowAlgorithm algorithm) {
    if (solved_) throw ConfigError("GridFlowNetwork::solve called twice");
    solved_ = true;
    if (algorithm == FlowAlgorithm::boykov_kolmogorov) run_boykov_kolmogorov();
    else run_push_relabel();
    return flow_;
}

// Augmenting paths on two search trees grown from s and t, reused between augmentations.
void GridFlowNetwork::run_boykov_kolmogorov() {
    std::vector<int> parent(n_, kFree);
    std::vector<std::uint8_t> sink(n_, 0), queued(n_, 0);
    std::vector<std::int64_t> ts(n_, 0);
    std::vector<int> dist(n_, 0);
    std::deque<std::size_t> active;
    std::deque<std::size_t> orphans;
    std::int64_t time = 0;

    auto set_active = [&](std::size_t i) {
        if (!queued[i]) {
            queued[i] = 1;
            active.push_back(i);
        }
    };
    auto make_orphan = [&](std::size_t i) {
        parent[i] = kOrphan;
        orphans.push_back(i);
    };

    for (std::size_t i = 0; i < n_; ++i) {
        if (tr_[i] == 0) continue;
        parent[i] = kTerminal;
        sink[i] = tr_[i] < 0;
        ts[i] = time;
        dist[i] = 1;
        set_active(i);
    }

    auto augment = [&](std::size_t u, int d) {
        const std::size_t v = neighbour(u, d);
        std::int64_t bottleneck = rc(u, d);
        std::size_t i = u;
        while (parent[i] != kTerminal) {
            const int p = parent[i];
            const std::size_t j = neighbour(i, p);
            bottleneck = std::min(bottleneck, rc(j, rev(p)));
            i = j;
        }
        bottleneck = std::min(bottleneck, tr_[i]);
        i = v;
        while (parent[i] != kTerminal) {
            const int p = parent[i];
            bottleneck = std::min(bottleneck, rc(i, p));
            i = neighbour(i, p);
        }
        bottleneck = std::min(bottleneck, -tr_[i]);

        rc(u, d) -= bottleneck;
        rc(v, rev(d)) += bottleneck;
        for (i = u;;) {
            const int p = parent[i];
            if (p == kTerminal) {
                tr_[i] -= bottleneck;
                if (tr_[i] == 0) make_orphan(i);
                break;
            }
            const std::size_t j = neighbour(i, p);
            rc(j, rev(p)) -= bottleneck;
            rc(i, p) += bottleneck;
            if (rc(j, rev(p)) == 0) make_orphan(i);
            i = j;
        }
        for (i = v;;) {
            const int p = parent[i];
            if (p == kTerminal) {
                tr_[i] += bottleneck;
                if (tr_[i] == 0) make_orphan(i);
                break;
            }
            const std::size_t j = neighbour(i, p);
            rc(i, p) -= bottleneck;
            rc(j, rev(p)) += bottleneck;
            if (rc(i, p) == 0) make_orphan(i);
            i = j;
        }
        flow_ += bottleneck;
        ++stats_.augmentations;
    };

    // Distance of j to its terminal along parent links, or kInfiniteDist if the chain hits an orphan.
    auto origin_distance = [&](std::size_t j) {
        int dd = 0;
        for (;;) {
            if (ts[j] == time) {
                dd += dist[j];
                break;
            }
            const int p = parent[j];
            ++dd;
            if (p == kTerminal) {
                ts[j] = time;
                dist[j] = 1;
                break;
            }
            if (p == kOrphan) return kInfiniteDist;
            j = neighbour(j, p);
        }
        return dd;
    };
    auto mark_path = [&](std::size_t j, int dd) {
        while (ts[j] != time) {
            ts[j] = time;
            dist[j] = dd--;
            j = neighbour(j, parent[j]);
        }
    };

    auto adopt = [&](std::size_t i) {
        const bool in_sink = sink[i] != 0;
        int best = kFree;
        int best_dist = kInfiniteDist;
        for (int d = 0; d < dirs_; ++d) {
            if (!has(i, d)) continue;
            const std::size_t j = neighbour(i, d);
            if ((sink[j] != 0) != in_sink || parent[j] == kFree) continue;
            const std::int64_t cap = in_sink ? rc(i, d) : rc(j, rev(d));
            if (cap <= 0) continue;
            const int dd = origin_distance(j);
            if (dd == kInfiniteDist) continue;
            if (dd < best_dist) {
                best = d;
                best_dist = dd;
            }
            mark_path(j, dd);
        }
        if (best != kFree) {
            parent[i] = best;
            ts[i] = time;
            dist[i] = best_dist + 1;
            return;
        }
        parent[i] = kFree;
        for (int d = 0; d < dirs_; ++d) {
            if (!has(i, d)) continue;
            const std::size_t j = neighbour(i, d);
            if ((sink[j] != 0) != in_sink || parent[j] == kFree) continue;
            const std::int64_t cap = in_sink ? rc(i, d) : rc(j, rev(d));
            if (cap > 0) set_active(j);
            if (parent[j] == rev(d)) make_orphan(j);
        }
    };

    std::size_t current = n_;
    for (;;) {
        std::size_t i = current;
        if (i == n_ || parent[i] == kFree) {
            i = n_;
            while (!active.empty()) {
                const std::size_t c = active.front();
                active.pop_front();
                queued[c] = 0;
                if (parent[c] != kFree) {
                    i = c;
                    break;
                }
            }
            if (i == n_) break;
        }
        current = n_;

        std::size_t mid_node = n_;
        int mid_dir = 0;
        if (!sink[i]) {
            for (int d = 0; d < dirs_; ++d) {
                if (!has(i, d) || rc(i, d) <= 0) continue;
                const std::size_t j = neighbour(i, d);
                if (parent[j] == kFree) {
                    sink[j] = 0;
                    parent[j] = rev(d);
                    ts[j] = ts[i];
                    dist[j] = dist[i] + 1;
                    set_active(j);
                } else if (sink[j]) {
                    mid_node = i;
                    mid_dir = d;
                    break;
                } else if (ts[j] <= ts[i] && dist[j] > dist[i]) {
                    parent[j] = rev(d);
                    ts[j] = ts[i];
                    dist[j] = dist[i] + 1;
                }
            }
        } else {
            for (int d = 0; d < dirs_; ++d) {
                if (!has(i, d)) continue;
                const std::size_t j = neighbour(i, d);
                if (rc(j, rev(d)) <= 0) continue;
                if (parent[j] == kFree) {
                    sink[j] = 1;
                    parent[j] = rev(d);
                    ts[j] = ts[i];
                    dist[j] = dist[i] + 1;
                    set_active(j);
                } else if (!sink[j]) {
                    mid_node = j;
                    mid_dir = rev(d);
                    break;
                } else if (ts[j] <= ts[i] && dist[j] > dist[i]) {
                    parent[j] = rev(d);
                    ts[j] = ts[i];
                    dist[j] = dist[i] + 1;
                }
            }
        }

        ++time;
        if (mid_node != n_) {
            current = i;
            augment(mid_node, mid_dir);
            while (!orphans.empty()) {
                const std::size_t o = orphans.front();
                orphans.pop_front();
                adopt(o);
            }
        }
    }
}

// FIFO push-relabel with periodic global relabelling; runs to a full flow
// (excess returned to s) so the residual-reachability cuts are valid.
void GridFlowNetwork::run_push_relabel() {
    const std::int64_t far = static_cast<std::int64_t>(n_) + 2;  // label of s
    const std::int64_t unreachable = 2 * far + 1;
    std::vector<std::int64_t> label(n_, 0), excess(n_, 0), to_sink(n_, 0), to_source(n_, 0), source_cap(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (tr_[i] > 0) {
            source_cap[i] = tr_[i];
            to_source[i] = tr_[i];
            excess[i] = tr_[i];
        } else {
            to_sink[i] = -tr_[i];
        }
    }

    std::deque<std::size_t> fifo;
    std::vector<std::uint8_t> queued(n_, 0);
    auto enqueue = [&](std::size_t i) {
        if (!queued[i] && excess[i] > 0) {
            queued[i] = 1;
            fifo.push_back(i);
        }
    };

    auto global_relabel = [&]() {
        ++stats_.global_relabels;
        std::fill(label.begin(), label.end(), unreachable);
        std::deque<std::size_t> bfs;
        auto sweep = [&](std::int64_t base, auto seeded) {
            for (std::size_t i = 0; i < n_; ++i)
                if (label[i] == unreachable && seeded(i)) {
                    label[i] = base;
                    bfs.push_back(i);
                }
            while (!bfs.empty()) {
                const std::size_t i = bfs.front();
                bfs.pop_front();
                for (int d = 0; d < dirs_; ++d) {
                    if (!has(i, d)) continue;
                    const std::size_t j = neighbour(i, d);
                    if (label[j] != unreachable || rc(j, rev(d)) <= 0) continue;
                    label[j] = label[i] + 1;
                    bfs.push_back(j);
                }
            }
        };
        sweep(1, [&](std::size_t i) { return to_sink[i] > 0; });
        sweep(far + 1, [&](std::size_t i) { return to_source[i] > 0; });
    };

    global_relabel();
    for (std::size_t i = 0; i < n_; ++i) enqueue(i);

    std::int64_t relabels_since_global = 0;
    while (!fifo.empty()) {
        const std::size_t i = fifo.front();
        fifo.pop_front();
        queued[i] = 0;
        while (excess[i] > 0) {
            if (to_sink[i] > 0 && label[i] == 1) {
                const std::int64_t f = std::min(excess[i], to_sink[i]);
                to_sink[i] -= f;
                excess[i] -= f;
                ++stats_.pushes;
                continue;
            }
            if (to_source[i] > 0 && label[i] == far + 1) {
                const std::int64_t f = std::min(excess[i], to_source[i]);
                to_source[i] -= f;
                excess[i] -= f;
                ++stats_.pushes;
                continue;
            }
            bool pushed = false;
            for (int d = 0; d < dirs_ && excess[i] > 0; ++d) {
                if (!has(i, d) || rc(i, d) <= 0) continue;
                const std::size_t j = neighbour(i, d);
                if (label[j] + 1 != label[i]) continue;
                const std::int64_t f = std::min(excess[i], rc(i, d));
                rc(i, d) -= f;
                rc(j, rev(d)) += f;
                excess[i] -= f;
                excess[j] += f;
                enqueue(j);
                pushed = true;
                ++stats_.pushes;
            }
            if (excess[i] == 0) break;
            if (pushed) continue;

            std::int64_t lowest = unreachable;
            if (to_sink[i] > 0) lowest = 0;
            if (to_source[i] > 0) lowest = std::min(lowest, far);
            for (int d = 0; d < dirs_; ++d)
                if (has(i, d) && rc(i, d) > 0) lowest = std::min(lowest, label[neighbour(i, d)]);
            label[i] = lowest + 1;
            ++stats_.relabels;
            if (++relabels_since_global > static_cast<std::int64_t>(n_)) {
                relabels_since_global = 0;
                global_relabel();
            }
        }
    }

    for (std::size_t i = 0; i < n_; ++i) {
        flow_ += source_cap[i] > 0 ? to_source[i] : 0;
        tr_[i] = source_cap[i] > 0 ? source_cap[i] - to_source[i] : -to_sink[i];
    }
}

std::vector<std::uint8_t> GridFlowNetwork::source_side(bool smallest) const {
    if (!solved_) throw ConfigError("source_side requires solve()");
    std::vector<std::uint8_t> mark(n_, 0);
    std::deque<std::size_t> bfs;
    for (std::size_t i = 0; i < n_; ++i) {
        if (smallest ? tr_[i] > 0 : tr_[i] < 0) {
            mark[i] = 1;
            bfs.push_back(i);
        }
    }
    while (!bfs.empty()) {
        const std::size_t i = bfs.front();
        bfs.pop_front();
        for (int d = 0; d < dirs_; ++d) {
            if (!has(i, d)) continue;
            const std::size_t j = neighbour(i, d);
            if (mark[j]) continue;
            // forward residual arcs from the source side, backward ones towards the sink side
            const std::int64_t cap = smallest ? rc(i, d) : rc(j, rev(d));
            if (cap <= 0) continue;
            mark[j] = 1;
            bfs.push_back(j);
        }
    }
    if (!smallest)
        for (auto& m : mark) m = !m;
    return mark;
}

}  // namespace l1tv
