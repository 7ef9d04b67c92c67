#include "bidding/turn_based.hpp"

#include <algorithm>
#include <deque>

namespace bidding {

int TurnBasedParityGame::add_vertex(Owner o, int p, bool is_sink) {
  owner.push_back(o);
  priority.push_back(p);
  succ.emplace_back();
  sink.push_back(is_sink);
  return size() - 1;
}

std::size_t TurnBasedParityGame::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ) n += s.size();
  return n;
}

std::vector<std::string> validate_turn_based(const TurnBasedParityGame& game) {
  std::vector<std::string> issues;
  const int n = game.size();
  if (static_cast<int>(game.priority.size()) != n ||
      static_cast<int>(game.succ.size()) != n || static_cast<int>(game.sink.size()) != n) {
    issues.push_back("per-vertex tables differ in length");
    return issues;
  }
  for (int v = 0; v < n; ++v) {
    if (game.priority[v] < 0) issues.push_back("negative priority at " + std::to_string(v));
    if (game.sink[v]) {
      if (game.priority[v] % 2 == 0) issues.push_back("even sink priority at " + std::to_string(v));
      continue;
    }
    if (game.succ[v].empty()) issues.push_back("dead end at " + std::to_string(v));
    for (int w : game.succ[v]) {
      if (w < 0 || w >= n) issues.push_back("edge out of range at " + std::to_string(v));
    }
  }
  return issues;
}

namespace {

using Mask = std::vector<char>;

// Player 0 is the protagonist (odd), player 1 the antagonist (even).
class Zielonka {
 public:
  explicit Zielonka(const TurnBasedParityGame& game)
      : game_(game), n_(game.size()), succ_(n_), pred_(n_), strategy_(n_, -1),
        winner_(n_, 0), count_(n_, 0) {
    for (int v = 0; v < n_; ++v) {
      succ_[v] = game.sink[v] ? std::vector<int>{v} : game.succ[v];
      for (int w : succ_[v]) pred_[w].push_back(v);
    }
  }

  TurnBasedSolution run() {
    solve(Mask(n_, 1));
    TurnBasedSolution out;
    out.protagonist_wins.resize(n_);
    out.strategy.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      out.protagonist_wins[v] = winner_[v] == 0;
      if (!game_.sink[v]) out.strategy[v] = strategy_[v] >= 0 ? strategy_[v] : succ_[v].front();
    }
    return out;
  }

 private:
  int owner(int v) const { return game_.owner[v] == Owner::kProtagonist ? 0 : 1; }

  int first_successor_in(int v, const Mask& in) const {
    for (int w : succ_[v]) {
      if (in[w]) return w;
    }
    return -1;
  }

  // Vertices of `in` from which `player` forces a visit to `target`.
  Mask attractor(const Mask& in, const std::vector<int>& target, int player) {
    Mask attr(n_, 0);
    std::deque<int> queue;
    for (int t : target) {
      attr[t] = 1;
      queue.push_back(t);
    }
    std::vector<int> touched;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int p : pred_[x]) {
        if (!in[p] || attr[p]) continue;
        if (owner(p) == player) {
          strategy_[p] = x;
        } else {
          if (count_[p] == 0) {
            touched.push_back(p);
            for (int w : succ_[p]) count_[p] += in[w] ? 1 : 0;
          }
          if (--count_[p] > 0) continue;
        }
        attr[p] = 1;
        queue.push_back(p);
      }
    }
    for (int p : touched) count_[p] = 0;
    return attr;
  }

  void solve(Mask in) {
    for (;;) {
      int d = -1;
      for (int v = 0; v < n_; ++v) {
        if (in[v]) d = std::max(d, game_.priority[v]);
      }
      if (d < 0) return;
      const int alpha = d % 2 == 1 ? 0 : 1;
      std::vector<int> top;
      for (int v = 0; v < n_; ++v) {
        if (in[v] && game_.priority[v] == d) top.push_back(v);
      }
      const Mask a = attractor(in, top, alpha);
      for (int u : top) {
        if (owner(u) == alpha) strategy_[u] = first_successor_in(u, in);
      }
      Mask sub(n_, 0);
      for (int v = 0; v < n_; ++v) sub[v] = in[v] && !a[v];
      solve(sub);
      std::vector<int> lost;
      for (int v = 0; v < n_; ++v) {
        if (sub[v] && winner_[v] != alpha) lost.push_back(v);
      }
      if (lost.empty()) {
        for (int v = 0; v < n_; ++v) {
          if (in[v]) winner_[v] = alpha;
        }
        return;
      }
      const Mask b = attractor(in, lost, 1 - alpha);
      for (int v = 0; v < n_; ++v) {
        if (b[v]) {
          winner_[v] = 1 - alpha;
          in[v] = 0;
        }
      }
    }
  }

  const TurnBasedParityGame& game_;
  const int n_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> strategy_;
  std::vector<int> winner_;
  std::vector<int> count_;
};

}  // namespace

TurnBasedSolution solve_turn_based_parity(const TurnBasedParityGame& game) {
  return Zielonka(game).run();
}

}  // namespace bidding
