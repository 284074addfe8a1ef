#pragma once

#include <memory>
#include <vector>

#include "osbb/bound_change.hpp"

namespace osbb {

// Why the node under an offshoot's dive is settled. kOpen marks non-terminal
// offshoots (depth-limited dives and split tops) whose bottom node lives on
// as a separate pool entry.
enum class TerminalKind : std::uint8_t { kInfeasible, kCutoff, kOpen };

// A top node (bound-change set F, top bound z*) plus the unordered set D of
// dive bound changes that reach a prunable node. A pool entry with an empty D
// is an open node: selecting it dives instead of branching.
struct Offshoot {
  int id = -1;
  long insertion_seq = -1;

  std::vector<BoundChange> top_changes;    // F
  std::vector<BoundChange> dive_changes;   // D, original chronological order
  double top_bound = -kInf;                // z*
  bool top_bound_stale = false;            // set after branching from the top
  Basis top_basis;
  std::vector<double> top_primal;          // kept for open entries (dive start)

  TerminalKind terminal = TerminalKind::kOpen;
  std::vector<double> dual_info;           // r of the terminal pruned node
  double cutoff_at_terminal = kInf;        // cutoff when the terminal was pruned
  bool disturbed = false;                  // processed out of order or trimmed
  bool trimmed = false;                    // trim already attempted (lazy, once)

  bool is_open_node() const { return dive_changes.empty(); }
};

// Best feasible point seen so far; its objective is the cutoff source.
struct Incumbent {
  std::vector<double> point;
  double objective = kInf;
  long node_id = -1;  // provenance: LP-processed node that produced it
  bool valid() const { return !point.empty(); }
};

enum class NodeSelection : std::uint8_t { kBestBound, kDepthFirst };

// Open offshoots, selected by best top bound (FIFO on ties) or LIFO for the
// depth-first emulation mode.
class OffshootPool {
 public:
  Offshoot& push(Offshoot shoot) {
    shoot.insertion_seq = next_seq_++;
    entries_.push_back(std::make_unique<Offshoot>(std::move(shoot)));
    return *entries_.back();
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  Offshoot* select(NodeSelection mode) {
    if (entries_.empty()) throw ContractViolation("select on an empty pool");
    Offshoot* best = entries_.front().get();
    for (const auto& e : entries_) {
      if (mode == NodeSelection::kBestBound) {
        if (e->top_bound < best->top_bound ||
            (e->top_bound == best->top_bound &&
             e->insertion_seq < best->insertion_seq)) {
          best = e.get();
        }
      } else {
        if (e->insertion_seq > best->insertion_seq) best = e.get();
      }
    }
    return best;
  }

  void remove(const Offshoot* shoot) {
    for (auto it = entries_.begin(); it != entries_.end(); ++it) {
      if (it->get() == shoot) {
        entries_.erase(it);
        return;
      }
    }
    throw ContractViolation("removing an offshoot that is not pooled");
  }

  // Drops every entry whose top bound is no better than the cutoff.
  // Returns the number removed.
  int purge_dominated(double cutoff) {
    int removed = 0;
    for (auto it = entries_.begin(); it != entries_.end();) {
      if ((*it)->top_bound >= cutoff - tol::kCutoff) {
        it = entries_.erase(it);
        ++removed;
      } else {
        ++it;
      }
    }
    return removed;
  }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& e : entries_) f(*e);
  }

 private:
  std::vector<std::unique_ptr<Offshoot>> entries_;
  long next_seq_ = 0;
};

}  // namespace osbb
