// Copyright 2026 The sqtour Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "sqtour/error.hpp"
#include "sqtour/tjoin.hpp"

namespace sqtour {
namespace {

PerfectMatching subset_dp(const DistanceMatrix& d) {
  const int k = d.size();
  if (k > kSubsetDpCap) {
    throw SizeCapExceeded("subset DP matching is capped at " + std::to_string(kSubsetDpCap) + " points");
  }
  const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  std::vector<Cost> best(std::size_t{1} << k, kUnreachable);
  std::vector<std::uint16_t> last(std::size_t{1} << k, 0);
  best[0] = 0;
  // Masks reachable here are exactly those where the lowest unmatched point
  // is always taken first, so each matching is counted once.
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (best[mask] == kUnreachable) continue;
    const int i = std::countr_one(mask);
    for (int j = i + 1; j < k; ++j) {
      if (mask & (1u << j)) continue;
      const std::uint32_t next = mask | (1u << i) | (1u << j);
      const Cost w = best[mask] + d(i, j);
      if (w < best[next]) {
        best[next] = w;
        last[next] = static_cast<std::uint16_t>(i << 8 | j);
      }
    }
  }
  PerfectMatching out;
  out.weight = best[full];
  for (std::uint32_t mask = full; mask != 0;) {
    const int i = last[mask] >> 8;
    const int j = last[mask] & 0xff;
    out.pairs.push_back({i, j});
    mask &= ~((1u << i) | (1u << j));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

// Edmonds' weighted blossom algorithm with primal-dual updates, following the
// classic O(n^3) formulation: vertices carry duals, non-trivial blossoms
// carry duals, and edge k has endpoints 2k (u side) and 2k + 1 (v side).
class Blossom {
 public:
  Blossom(int n, std::span<const WeightedEdge> edges, bool max_cardinality)
      : n_(n), edges_(edges.begin(), edges.end()), max_cardinality_(max_cardinality) {}

  std::vector<int> solve();

 private:
  Cost slack(int k) const {
    const WeightedEdge& e = edges_[k];
    return dual_[e.u] + dual_[e.v] - 2 * e.weight;
  }
  int wrap(int b, int j) const {
    const int len = static_cast<int>(childs_[b].size());
    return ((j % len) + len) % len;
  }

  void leaves(int b, std::vector<int>& out) const;
  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }
  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);

  int n_;
  std::vector<WeightedEdge> edges_;
  bool max_cardinality_;

  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> childs_;
  std::vector<int> base_;
  std::vector<std::vector<int>> endps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossom_bestedges_;
  std::vector<std::uint8_t> has_bestedges_;
  std::vector<int> unused_;
  std::vector<Cost> dual_;
  std::vector<std::uint8_t> allowedge_;
  std::vector<int> queue_;
};

void Blossom::leaves(int b, std::vector<int>& out) const {
  if (b < n_) {
    out.push_back(b);
    return;
  }
  for (int t : childs_[b]) leaves(t, out);
}

void Blossom::assign_label(int w, int t, int p) {
  const int b = inblossom_[w];
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    leaves(b, queue_);
  } else if (t == 2) {
    const int base = base_[b];
    assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
  }
}

int Blossom::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = base_[b];
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

void Blossom::add_blossom(int base, int k) {
  int v = edges_[k].u;
  int w = edges_[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unused_.back();
  unused_.pop_back();
  base_[b] = base;
  parent_[b] = -1;
  parent_[bb] = b;
  std::vector<int>& path = childs_[b];
  std::vector<int>& endps = endps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    parent_[bv] = b;
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
    parent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint_[labelend_[bw]];
    bw = inblossom_[w];
  }
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = 0;
  for (int leaf : leaves(b)) {
    if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }
  std::vector<int> bestedgeto(2 * n_, -1);
  for (int child : path) {
    std::vector<std::vector<int>> lists;
    if (!has_bestedges_[child]) {
      for (int leaf : leaves(child)) {
        std::vector<int> list;
        for (int p : neighbend_[leaf]) list.push_back(p / 2);
        lists.push_back(std::move(list));
      }
    } else {
      lists.push_back(blossom_bestedges_[child]);
    }
    for (const auto& list : lists) {
      for (int kk : list) {
        int i = edges_[kk].u;
        int j = edges_[kk].v;
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
          bestedgeto[bj] = kk;
        }
      }
    }
    blossom_bestedges_[child].clear();
    has_bestedges_[child] = 0;
    bestedge_[child] = -1;
  }
  blossom_bestedges_[b].clear();
  for (int kk : bestedgeto) {
    if (kk != -1) blossom_bestedges_[b].push_back(kk);
  }
  has_bestedges_[b] = 1;
  bestedge_[b] = -1;
  for (int kk : blossom_bestedges_[b]) {
    if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }
}

void Blossom::expand_blossom(int b, bool endstage) {
  const std::vector<int> children = childs_[b];
  for (int s : children) {
    parent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      for (int leaf : leaves(s)) inblossom_[leaf] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
    int j = static_cast<int>(std::find(childs_[b].begin(), childs_[b].end(), entrychild) - childs_[b].begin());
    int jstep;
    int endptrick;
    if (j & 1) {
      j -= static_cast<int>(childs_[b].size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = 0;
      label_[endpoint_[endps_[b][wrap(b, j - endptrick)] ^ endptrick ^ 1]] = 0;
      assign_label(endpoint_[p ^ 1], 2, p);
      allowedge_[endps_[b][wrap(b, j - endptrick)] / 2] = 1;
      j += jstep;
      p = endps_[b][wrap(b, j - endptrick)] ^ endptrick;
      allowedge_[p / 2] = 1;
      j += jstep;
    }
    int bv = childs_[b][wrap(b, j)];
    label_[endpoint_[p ^ 1]] = label_[bv] = 2;
    labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (childs_[b][wrap(b, j)] != entrychild) {
      bv = childs_[b][wrap(b, j)];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      int labelled = -1;
      for (int leaf : leaves(bv)) {
        if (label_[leaf] != 0) {
          labelled = leaf;
          break;
        }
      }
      if (labelled >= 0) {
        label_[labelled] = 0;
        label_[endpoint_[mate_[base_[bv]]]] = 0;
        assign_label(labelled, 2, labelend_[labelled]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  childs_[b].clear();
  endps_[b].clear();
  base_[b] = -1;
  blossom_bestedges_[b].clear();
  has_bestedges_[b] = 0;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void Blossom::augment_blossom(int b, int v) {
  int t = v;
  while (parent_[t] != b) t = parent_[t];
  if (t >= n_) augment_blossom(t, v);
  const int i = static_cast<int>(std::find(childs_[b].begin(), childs_[b].end(), t) - childs_[b].begin());
  int j = i;
  int jstep;
  int endptrick;
  if (i & 1) {
    j -= static_cast<int>(childs_[b].size());
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = childs_[b][wrap(b, j)];
    const int p = endps_[b][wrap(b, j - endptrick)] ^ endptrick;
    if (t >= n_) augment_blossom(t, endpoint_[p]);
    j += jstep;
    t = childs_[b][wrap(b, j)];
    if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(childs_[b].begin(), childs_[b].begin() + i, childs_[b].end());
  std::rotate(endps_[b].begin(), endps_[b].begin() + i, endps_[b].end());
  base_[b] = base_[childs_[b][0]];
}

void Blossom::augment_matching(int k) {
  const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
  for (const auto& [start, first_p] : ends) {
    int s = start;
    int p = first_p;
    while (true) {
      const int bs = inblossom_[s];
      if (bs >= n_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = endpoint_[labelend_[bs]];
      const int bt = inblossom_[t];
      s = endpoint_[labelend_[bt]];
      const int j = endpoint_[labelend_[bt] ^ 1];
      if (bt >= n_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> Blossom::solve() {
  const int m = static_cast<int>(edges_.size());
  if (n_ == 0) return {};
  Cost max_weight = 0;
  for (const WeightedEdge& e : edges_) max_weight = std::max(max_weight, e.weight);
  endpoint_.resize(2 * m);
  neighbend_.assign(n_, {});
  for (int k = 0; k < m; ++k) {
    endpoint_[2 * k] = edges_[k].u;
    endpoint_[2 * k + 1] = edges_[k].v;
    neighbend_[edges_[k].u].push_back(2 * k + 1);
    neighbend_[edges_[k].v].push_back(2 * k);
  }
  mate_.assign(n_, -1);
  label_.assign(2 * n_, 0);
  labelend_.assign(2 * n_, -1);
  inblossom_.resize(n_);
  for (int v = 0; v < n_; ++v) inblossom_[v] = v;
  parent_.assign(2 * n_, -1);
  childs_.assign(2 * n_, {});
  base_.assign(2 * n_, -1);
  for (int v = 0; v < n_; ++v) base_[v] = v;
  endps_.assign(2 * n_, {});
  bestedge_.assign(2 * n_, -1);
  blossom_bestedges_.assign(2 * n_, {});
  has_bestedges_.assign(2 * n_, 0);
  unused_.clear();
  for (int b = 2 * n_ - 1; b >= n_; --b) unused_.push_back(b);
  std::reverse(unused_.begin(), unused_.end());
  dual_.assign(2 * n_, 0);
  for (int v = 0; v < n_; ++v) dual_[v] = max_weight;
  allowedge_.assign(m, 0);

  for (int stage = 0; stage < n_; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      blossom_bestedges_[b].clear();
      has_bestedges_[b] = 0;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          Cost kslack = 0;
          if (!allowedge_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allowedge_[k] = 1;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = scan_blossom(v, w);
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
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int delta_type = -1;
      Cost delta = 0;
      int delta_edge = -1;
      int delta_blossom = -1;
      if (!max_cardinality_) {
        delta_type = 1;
        delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const Cost d = slack(bestedge_[v]);
          if (delta_type == -1 || d < delta) {
            delta = d;
            delta_type = 2;
            delta_edge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const Cost kslack = slack(bestedge_[b]);
          if (kslack % 2 != 0) throw InvariantViolation("odd slack between outer blossoms");
          const Cost d = kslack / 2;
          if (delta_type == -1 || d < delta) {
            delta = d;
            delta_type = 3;
            delta_edge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 && (delta_type == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          delta_type = 4;
          delta_blossom = b;
        }
      }
      if (delta_type == -1) {
        delta_type = 1;
        delta = std::max<Cost>(0, *std::min_element(dual_.begin(), dual_.begin() + n_));
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dual_[v] -= delta;
        } else if (label_[inblossom_[v]] == 2) {
          dual_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }
      if (delta_type == 1) {
        break;
      } else if (delta_type == 2) {
        allowedge_[delta_edge] = 1;
        int i = edges_[delta_edge].u;
        if (label_[inblossom_[i]] == 0) i = edges_[delta_edge].v;
        queue_.push_back(i);
      } else if (delta_type == 3) {
        allowedge_[delta_edge] = 1;
        queue_.push_back(edges_[delta_edge].u);
      } else {
        expand_blossom(delta_blossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n_; b < 2 * n_; ++b) {
      if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) expand_blossom(b, true);
    }
  }
  std::vector<int> mate(n_, -1);
  for (int v = 0; v < n_; ++v) {
    if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
  }
  return mate;
}

PerfectMatching blossom_perfect(const DistanceMatrix& d) {
  const int k = d.size();
  const Cost ceiling = d.max_entry() + 1;
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.push_back({i, j, 2 * (ceiling - d(i, j))});
  }
  const std::vector<int> mate = max_weight_matching(k, edges, true);
  PerfectMatching out;
  for (int i = 0; i < k; ++i) {
    if (mate[i] < 0) throw InvariantViolation("blossom matching is not perfect");
    if (i < mate[i]) {
      out.pairs.push_back({i, mate[i]});
      out.weight += d(i, mate[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<int> max_weight_matching(int node_count, std::span<const WeightedEdge> edges, bool max_cardinality) {
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count || e.u == e.v) {
      throw InvalidInput("bad matching edge");
    }
  }
  return Blossom(node_count, edges, max_cardinality).solve();
}

PerfectMatching min_weight_perfect_matching(const DistanceMatrix& d, MatchingEngine engine) {
  const int k = d.size();
  if (k % 2 != 0) throw InvalidInput("perfect matching needs an even number of points");
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (d(i, j) < 0 || d(i, j) != d(j, i)) throw InvalidInput("distance matrix must be symmetric and nonnegative");
    }
  }
  if (k == 0) return {};
  if (engine == MatchingEngine::kAuto) {
    engine = k <= kSubsetDpCap ? MatchingEngine::kSubsetDp : MatchingEngine::kBlossom;
  }
  return engine == MatchingEngine::kSubsetDp ? subset_dp(d) : blossom_perfect(d);
}

}  // namespace sqtour
