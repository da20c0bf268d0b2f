#include "bptk/matching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace bptk {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::span<const WeightedEdge> edges)
    : n_(vertex_count) {
    std::vector<WeightedEdge> sorted;
    sorted.reserve(edges.size());
    for (WeightedEdge e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(std::max(e.u, e.v)) >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.weight < 0) throw std::invalid_argument("negative edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
        sorted.push_back(e);
    }
    std::sort(sorted.begin(), sorted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (const WeightedEdge& e : sorted) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
            edges_.back().weight += e.weight;
        } else {
            edges_.push_back(e);
        }
    }
    std::erase_if(edges_, [](const WeightedEdge& e) { return e.weight == 0; });
}

std::int64_t WeightedGraph::weight(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                               [](const WeightedEdge& e, const std::pair<Vertex, Vertex>& key) {
                                   return std::pair(e.u, e.v) < key;
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return it->weight;
    return 0;
}

std::int64_t WeightedGraph::max_weight() const {
    std::int64_t w = 0;
    for (const auto& e : edges_) w = std::max(w, e.weight);
    return w;
}

std::vector<std::vector<std::size_t>> WeightedGraph::incidence() const {
    std::vector<std::vector<std::size_t>> inc(n_);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        inc[static_cast<std::size_t>(edges_[k].u)].push_back(k);
        inc[static_cast<std::size_t>(edges_[k].v)].push_back(k);
    }
    return inc;
}

void Matching::add(Vertex u, Vertex v) {
    if (u == v || is_matched(u) || is_matched(v)) {
        throw std::logic_error("matching pairs must be vertex-disjoint");
    }
    mate_[static_cast<std::size_t>(u)] = v;
    mate_[static_cast<std::size_t>(v)] = u;
}

std::size_t Matching::size() const {
    std::size_t count = 0;
    for (Vertex m : mate_) count += m != kUnmatched;
    return count / 2;
}

std::vector<std::pair<Vertex, Vertex>> Matching::pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
        if (mate(v) > v) out.emplace_back(v, mate(v));
    }
    return out;
}

std::int64_t Matching::weight_in(const WeightedGraph& g) const {
    std::int64_t total = 0;
    for (auto [u, v] : pairs()) {
        std::int64_t w = g.weight(u, v);
        if (w == 0) {
            throw std::logic_error("matched pair (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") is not an edge");
        }
        total += w;
    }
    return total;
}

namespace {

// Compressed adjacency, ascending neighbour order.
struct Csr {
    std::vector<std::size_t> offset;
    std::vector<Vertex> target;

    explicit Csr(const WeightedGraph& g) : offset(g.vertex_count() + 1, 0) {
        for (const auto& e : g.edges()) {
            ++offset[static_cast<std::size_t>(e.u) + 1];
            ++offset[static_cast<std::size_t>(e.v) + 1];
        }
        for (std::size_t i = 1; i < offset.size(); ++i) offset[i] += offset[i - 1];
        target.resize(offset.back());
        std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
        for (const auto& e : g.edges()) {
            target[fill[static_cast<std::size_t>(e.u)]++] = e.v;
            target[fill[static_cast<std::size_t>(e.v)]++] = e.u;
        }
        for (std::size_t v = 0; v + 1 < offset.size(); ++v) {
            std::sort(target.begin() + static_cast<std::ptrdiff_t>(offset[v]),
                      target.begin() + static_cast<std::ptrdiff_t>(offset[v + 1]));
        }
    }
    std::span<const Vertex> neighbours(Vertex v) const {
        auto b = offset[static_cast<std::size_t>(v)], e = offset[static_cast<std::size_t>(v) + 1];
        return {target.data() + b, e - b};
    }
};

class CardinalityMatcher {
public:
    explicit CardinalityMatcher(const WeightedGraph& g)
        : n_(g.vertex_count()), adj_(g), mate_(n_, kUnmatched), label_(n_, kUnlabeled),
          parent_(n_, kUnmatched), base_(n_), stamp_(n_, 0), dead_(n_, 0) {
        for (std::size_t v = 0; v < n_; ++v) base_[v] = static_cast<Vertex>(v);
    }

    Matching run() {
        greedy();
        for (Vertex r = 0; r < static_cast<Vertex>(n_); ++r) {
            if (mate_[idx(r)] == kUnmatched && !dead_[idx(r)]) search(r);
        }
        Matching m(n_);
        for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
            if (mate_[idx(v)] > v) m.add(v, mate_[idx(v)]);
        }
        return m;
    }

private:
    static constexpr int kUnlabeled = 0, kEven = 1, kOdd = 2;
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    void greedy() {
        for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
            if (mate_[idx(v)] != kUnmatched) continue;
            for (Vertex u : adj_.neighbours(v)) {
                if (mate_[idx(u)] == kUnmatched) {
                    mate_[idx(u)] = v;
                    mate_[idx(v)] = u;
                    break;
                }
            }
        }
    }

    Vertex find(Vertex v) {
        Vertex root = v;
        while (base_[idx(root)] != root) root = base_[idx(root)];
        while (base_[idx(v)] != root) {
            Vertex next = base_[idx(v)];
            base_[idx(v)] = root;
            v = next;
        }
        return root;
    }

    void touch(Vertex v) { touched_.push_back(v); }

    Vertex lca(Vertex x, Vertex y) {
        ++clock_;
        while (true) {
            if (x != kUnmatched) {
                x = find(x);
                if (stamp_[idx(x)] == clock_) return x;
                stamp_[idx(x)] = clock_;
                x = mate_[idx(x)] == kUnmatched ? kUnmatched : parent_[idx(mate_[idx(x)])];
            }
            std::swap(x, y);
        }
    }

    void shrink(Vertex x, Vertex y, Vertex b) {
        while (find(x) != b) {
            parent_[idx(x)] = y;
            y = mate_[idx(x)];
            if (label_[idx(y)] == kOdd) {
                label_[idx(y)] = kEven;
                queue_.push_back(y);
            }
            if (find(x) == x) base_[idx(x)] = b;
            if (find(y) == y) base_[idx(y)] = b;
            x = parent_[idx(y)];
        }
    }

    void augment(Vertex y) {
        while (y != kUnmatched) {
            Vertex x = parent_[idx(y)];
            Vertex next = mate_[idx(x)];
            mate_[idx(y)] = x;
            mate_[idx(x)] = y;
            y = next;
        }
    }

    void reset(bool retire) {
        for (Vertex v : touched_) {
            if (retire) dead_[idx(v)] = 1;
            label_[idx(v)] = kUnlabeled;
            parent_[idx(v)] = kUnmatched;
            base_[idx(v)] = v;
        }
        touched_.clear();
        queue_.clear();
    }

    bool search(Vertex root) {
        label_[idx(root)] = kEven;
        touch(root);
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            Vertex x = queue_[head];
            for (Vertex y : adj_.neighbours(x)) {
                if (dead_[idx(y)] || label_[idx(y)] == kOdd || find(x) == find(y)) continue;
                if (label_[idx(y)] == kUnlabeled) {
                    touch(y);
                    parent_[idx(y)] = x;
                    if (mate_[idx(y)] == kUnmatched) {
                        augment(y);
                        reset(false);
                        return true;
                    }
                    label_[idx(y)] = kOdd;
                    Vertex z = mate_[idx(y)];
                    label_[idx(z)] = kEven;
                    touch(z);
                    queue_.push_back(z);
                } else {
                    Vertex b = lca(x, y);
                    shrink(x, y, b);
                    shrink(y, x, b);
                }
            }
        }
        // No augmenting path from root: its alternating tree never carries
        // one later either.
        reset(true);
        return false;
    }

    std::size_t n_;
    Csr adj_;
    std::vector<Vertex> mate_;
    std::vector<int> label_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t clock_ = 0;
    std::vector<char> dead_;
    std::vector<Vertex> touched_;
    std::vector<Vertex> queue_;
};

/*
 * Weighted blossom algorithm (Edmonds; Galil's O(V^3) organisation, following
 * the structure of Van Rantwijk's mwmatching). Vertices 0..V-1, blossoms
 * V..2V-1. Edge endpoints p: endpoint(2k) = u_k, endpoint(2k+1) = v_k.
 * Weights are doubled so every dual stays integral.
 */
class WeightedMatcher {
public:
    explicit WeightedMatcher(const WeightedGraph& g) : nv_(static_cast<int>(g.vertex_count())) {
        for (const auto& e : g.edges()) {
            eu_.push_back(e.u);
            ev_.push_back(e.v);
            ew_.push_back(2 * e.weight);
        }
        ne_ = static_cast<int>(eu_.size());
        endpoint_.resize(2 * static_cast<std::size_t>(ne_));
        neighbend_.assign(static_cast<std::size_t>(nv_), {});
        for (int k = 0; k < ne_; ++k) {
            endpoint_[2 * k] = eu_[k];
            endpoint_[2 * k + 1] = ev_[k];
            neighbend_[eu_[k]].push_back(2 * k + 1);
            neighbend_[ev_[k]].push_back(2 * k);
        }
        std::int64_t maxweight = 0;
        for (auto w : ew_) maxweight = std::max(maxweight, w);
        const auto nb = 2 * static_cast<std::size_t>(nv_);
        mate_.assign(static_cast<std::size_t>(nv_), -1);
        label_.assign(nb, 0);
        labelend_.assign(nb, -1);
        inblossom_.resize(static_cast<std::size_t>(nv_));
        for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
        blossomparent_.assign(nb, -1);
        blossomchilds_.assign(nb, {});
        blossombase_.assign(nb, -1);
        for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
        blossomendps_.assign(nb, {});
        bestedge_.assign(nb, -1);
        blossombestedges_.assign(nb, {});
        has_bestedges_.assign(nb, 0);
        for (int b = 2 * nv_ - 1; b >= nv_; --b) unusedblossoms_.push_back(b);
        // popped from the back: lowest free blossom id first
        std::reverse(unusedblossoms_.begin(), unusedblossoms_.end());
        dualvar_.assign(nb, 0);
        for (int v = 0; v < nv_; ++v) dualvar_[v] = maxweight;
        allowedge_.assign(static_cast<std::size_t>(ne_), 0);
    }

    Matching run() {
        Matching result(static_cast<std::size_t>(nv_));
        if (ne_ == 0) return result;
        for (int stage = 0; stage < nv_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nv_; b < 2 * nv_; ++b) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < nv_; ++v) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        std::int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = 1;
                std::int64_t delta = dualvar_[0];
                for (int v = 1; v < nv_; ++v) delta = std::min(delta, dualvar_[v]);
                int deltaedge = -1, deltablossom = -1;
                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        std::int64_t d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nv_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        std::int64_t ks = slack(bestedge_[b]);
                        if (ks % 2 != 0) throw std::logic_error("weighted matcher: odd slack");
                        std::int64_t d = ks / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 1) dualvar_[v] -= delta;
                    else if (label_[inblossom_[v]] == 2) dualvar_[v] += delta;
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) dualvar_[b] += delta;
                        else if (label_[b] == 2) dualvar_[b] -= delta;
                    }
                }
                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = eu_[deltaedge], j = ev_[deltaedge];
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    queue_.push_back(eu_[deltaedge]);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = nv_; b < 2 * nv_; ++b) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        for (int v = 0; v < nv_; ++v) {
            if (mate_[v] >= 0 && endpoint_[mate_[v]] > v) result.add(v, endpoint_[mate_[v]]);
        }
        return result;
    }

private:
    std::int64_t slack(int k) const { return dualvar_[eu_[k]] + dualvar_[ev_[k]] - 2 * ew_[k]; }

    static int wrap(int j, std::size_t len) {
        int n = static_cast<int>(len);
        return ((j % n) + n) % n;
    }

    void leaves(int b, std::vector<int>& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) leaves(t, out);
    }
    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            int base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = eu_[k], w = ev_[k];
        int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> path, endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        blossomchilds_[b] = path;
        blossomendps_[b] = endps;
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }
        std::vector<int> bestedgeto(2 * static_cast<std::size_t>(nv_), -1);
        for (int sub : path) {
            std::vector<int> candidates;
            if (!has_bestedges_[sub]) {
                for (int leaf : leaves(sub)) {
                    for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
                }
            } else {
                candidates = blossombestedges_[sub];
            }
            for (int e : candidates) {
                int i = eu_[e], j = ev_[e];
                if (inblossom_[j] == b) std::swap(i, j);
                int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 &&
                    (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj]))) {
                    bestedgeto[bj] = e;
                }
            }
            blossombestedges_[sub].clear();
            has_bestedges_[sub] = 0;
            bestedge_[sub] = -1;
        }
        blossombestedges_[b].clear();
        for (int e : bestedgeto) {
            if (e != -1) blossombestedges_[b].push_back(e);
        }
        has_bestedges_[b] = 1;
        bestedge_[b] = -1;
        for (int e : blossombestedges_[b]) {
            if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) bestedge_[b] = e;
        }
    }

    void expand_blossom(int b, bool endstage) {
        const std::vector<int> childs = blossomchilds_[b];
        for (int s : childs) {
            blossomparent_[s] = -1;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto& ch = blossomchilds_[b];
            const auto& ep = blossomendps_[b];
            const std::size_t len = ch.size();
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep, endptrick;
            if (j & 1) {
                j -= static_cast<int>(len);
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[ep[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[ep[wrap(j - endptrick, len)] / 2] = 1;
                j += jstep;
                p = ep[wrap(j - endptrick, len)] ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = ch[wrap(j, len)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[wrap(j, len)] != entrychild) {
                bv = ch[wrap(j, len)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> lv = leaves(bv);
                int v = lv.back();
                for (int leaf : lv) {
                    if (label_[leaf] != 0) {
                        v = leaf;
                        break;
                    }
                }
                if (label_[v] != 0) {
                    label_[v] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(v, 2, labelend_[v]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= nv_) augment_blossom(t, v);
        auto& ch = blossomchilds_[b];
        auto& ep = blossomendps_[b];
        const std::size_t len = ch.size();
        int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= static_cast<int>(len);
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[wrap(j, len)];
            int p = ep[wrap(j - endptrick, len)] ^ endptrick;
            if (t >= nv_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = ch[wrap(j, len)];
            if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        blossombase_[b] = blossombase_[ch[0]];
    }

    void augment_matching(int k) {
        int v = eu_[k], w = ev_[k];
        for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            while (true) {
                int bs = inblossom_[s];
                if (bs >= nv_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= nv_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int nv_;
    int ne_ = 0;
    std::vector<int> eu_, ev_;
    std::vector<std::int64_t> ew_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
    std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
    std::vector<char> has_bestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<std::int64_t> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
};

} // namespace

Matching max_cardinality_matching(const WeightedGraph& g) { return CardinalityMatcher(g).run(); }

Matching max_weight_matching(const WeightedGraph& g) { return WeightedMatcher(g).run(); }

Matching brute_force_max_weight(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kBruteForceMatchingLimit) {
        throw OracleSizeError("brute-force matching is limited to " +
                              std::to_string(kBruteForceMatchingLimit) + " vertices, got " +
                              std::to_string(n));
    }
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
    for (const auto& e : g.edges()) {
        w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.weight;
        w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.weight;
    }
    // best[mask]: optimum over matchings inside the vertex subset mask, found
    // by branching on the lowest vertex: left single, or paired with any edge.
    const std::size_t full = std::size_t{1} << n;
    std::vector<std::int64_t> best(full, 0);
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::size_t v = static_cast<std::size_t>(__builtin_ctzll(mask));
        std::size_t rest = mask & ~(std::size_t{1} << v);
        std::int64_t b = best[rest];
        for (std::size_t u = v + 1; u < n; ++u) {
            if ((rest >> u & 1) && w[v][u] > 0) b = std::max(b, w[v][u] + best[rest & ~(std::size_t{1} << u)]);
        }
        best[mask] = b;
    }
    Matching m(n);
    std::size_t mask = full - 1;
    while (mask) {
        std::size_t v = static_cast<std::size_t>(__builtin_ctzll(mask));
        std::size_t rest = mask & ~(std::size_t{1} << v);
        if (best[mask] == best[rest]) {
            mask = rest;
            continue;
        }
        for (std::size_t u = v + 1; u < n; ++u) {
            if ((rest >> u & 1) && w[v][u] > 0 &&
                best[mask] == w[v][u] + best[rest & ~(std::size_t{1} << u)]) {
                m.add(static_cast<Vertex>(v), static_cast<Vertex>(u));
                mask = rest & ~(std::size_t{1} << u);
                break;
            }
        }
    }
    return m;
}

Matching bipartite_max_cardinality(const WeightedGraph& g, const std::vector<int>& side) {
    const std::size_t n = g.vertex_count();
    if (side.size() != n) throw std::invalid_argument("side vector size mismatch");
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& e : g.edges()) {
        if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) {
            throw std::invalid_argument("graph is not bipartite under the given sides");
        }
        Vertex left = side[static_cast<std::size_t>(e.u)] == 0 ? e.u : e.v;
        adj[static_cast<std::size_t>(left)].push_back(left == e.u ? e.v : e.u);
    }
    std::vector<Vertex> mate(n, kUnmatched);
    std::vector<std::size_t> seen(n, 0);
    std::size_t round = 0;
    std::function<bool(Vertex)> try_augment = [&](Vertex l) {
        for (Vertex r : adj[static_cast<std::size_t>(l)]) {
            if (seen[static_cast<std::size_t>(r)] == round) continue;
            seen[static_cast<std::size_t>(r)] = round;
            if (mate[static_cast<std::size_t>(r)] == kUnmatched ||
                try_augment(mate[static_cast<std::size_t>(r)])) {
                mate[static_cast<std::size_t>(r)] = l;
                mate[static_cast<std::size_t>(l)] = r;
                return true;
            }
        }
        return false;
    };
    for (Vertex l = 0; l < static_cast<Vertex>(n); ++l) {
        if (side[static_cast<std::size_t>(l)] != 0) continue;
        ++round;
        try_augment(l);
    }
    Matching m(n);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (mate[static_cast<std::size_t>(v)] > v) m.add(v, mate[static_cast<std::size_t>(v)]);
    }
    return m;
}

} // namespace bptk
