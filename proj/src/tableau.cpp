#include "dlorder/tableau.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

namespace dlorder {

std::string toText(SatOutcome o) {
  switch (o) {
    case SatOutcome::Satisfiable: return "Satisfiable";
    case SatOutcome::Unsatisfiable: return "Unsatisfiable";
    case SatOutcome::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

constexpr std::uint32_t kBottomCode = 1;  // ¬⊤

// Completion-tree search with an undo trail. Every mutation of the tree is
// logged so that returning to a choice point is a matter of replaying the
// trail backwards.
class Tableau {
 public:
  Tableau(const OrderedDag& d, std::uint64_t budget) : d_(d), dag_(d.dag()), budget_(budget) {
    words_ = (dag_.size() * 2 + 63) / 64;
    roleOf_.resize(dag_.size(), 0);
    std::map<std::string, std::uint32_t> roles;
    for (VertexId v = 0; v < dag_.size(); ++v) {
      const auto& vertex = dag_.vertex(v);
      if (vertex.op == VertexOp::All) {
        roleOf_[v] = roles.emplace(vertex.name, static_cast<std::uint32_t>(roles.size())).first->second;
      }
    }
  }

  SatResult run(VertexRef target) {
    newNode(-1, 0);
    if (!add(0, target.code())) return finish(SatOutcome::Unsatisfiable);
    if (dag_.gciConstraint()) {
      if (!tick()) return finish(SatOutcome::BudgetExceeded);
      if (!add(0, dag_.gciConstraint()->code())) return finish(SatOutcome::Unsatisfiable);
    }

    while (true) {
      Choice choice;
      switch (expand(choice)) {
        case Status::Complete:
          return finish(SatOutcome::Satisfiable);
        case Status::Budget:
          return finish(SatOutcome::BudgetExceeded);
        case Status::Choice:
          ++result_.branchPoints;
          choices_.push_back({trail_.size(), choice.node, choice.vertex, 0});
          [[fallthrough]];
        case Status::Clash:
          switch (nextAlternative()) {
            case Status::Budget: return finish(SatOutcome::BudgetExceeded);
            case Status::Clash: return finish(SatOutcome::Unsatisfiable);
            default: break;
          }
          break;
      }
    }
  }

 private:
  enum class Status { Clash, Budget, Choice, Complete };

  struct Node {
    std::vector<std::uint32_t> label;
    std::vector<std::uint64_t> bits;
    std::uint32_t cursor = 0;
    std::int32_t parent = -1;
    std::uint32_t role = 0;
    std::uint32_t depth = 0;
    std::vector<std::uint32_t> successors;
    std::vector<std::uint32_t> disjunctions;
    std::uint32_t disjunctionsDone = 0;
    std::vector<std::uint32_t> existentials;
    std::uint32_t existentialsDone = 0;
    std::int8_t blocked = -1;  // unknown until the node is up for generation
  };

  enum class Undo : std::uint8_t { Label, Cursor, PushDisj, DisjDone, PushSome, SomeDone, NewNode, Blocked };

  struct TrailEntry {
    Undo kind;
    std::uint32_t node;
    std::uint32_t old;
  };

  struct ChoicePoint {
    std::size_t trailMark;
    std::uint32_t node;
    VertexId vertex;
    std::uint32_t next;
  };

  struct Choice {
    std::uint32_t node = 0;
    VertexId vertex = 0;
  };

  bool has(const Node& n, std::uint32_t code) const { return (n.bits[code >> 6] >> (code & 63)) & 1; }

  bool tick() { return ++result_.steps < budget_; }

  void newNode(std::int32_t parent, std::uint32_t role) {
    Node n;
    n.bits.assign(words_, 0);
    n.parent = parent;
    n.role = role;
    n.depth = parent < 0 ? 0 : nodes_[parent].depth + 1;
    result_.maxDepth = std::max<std::size_t>(result_.maxDepth, n.depth);
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(std::move(n));
    if (parent >= 0) nodes_[parent].successors.push_back(id);
    trail_.push_back({Undo::NewNode, id, 0});
  }

  // False on clash.
  bool add(std::uint32_t node, std::uint32_t code) {
    auto& n = nodes_[node];
    if (has(n, code)) return true;
    if (code == kBottomCode || has(n, code ^ 1)) return false;
    n.bits[code >> 6] |= std::uint64_t{1} << (code & 63);
    n.label.push_back(code);
    trail_.push_back({Undo::Label, node, 0});
    return true;
  }

  void undoTo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto e = trail_.back();
      trail_.pop_back();
      auto& n = nodes_[e.node];
      switch (e.kind) {
        case Undo::Label: {
          auto code = n.label.back();
          n.label.pop_back();
          n.bits[code >> 6] &= ~(std::uint64_t{1} << (code & 63));
          break;
        }
        case Undo::Cursor: n.cursor = e.old; break;
        case Undo::PushDisj: n.disjunctions.pop_back(); break;
        case Undo::DisjDone: n.disjunctionsDone = e.old; break;
        case Undo::PushSome: n.existentials.pop_back(); break;
        case Undo::SomeDone: n.existentialsDone = e.old; break;
        case Undo::Blocked: n.blocked = static_cast<std::int8_t>(e.old); break;
        case Undo::NewNode:
          if (n.parent >= 0) nodes_[n.parent].successors.pop_back();
          nodes_.pop_back();
          break;
      }
    }
  }

  Status nextAlternative() {
    while (!choices_.empty()) {
      auto& cp = choices_.back();
      undoTo(cp.trailMark);
      const auto& alternatives = d_.orderedChildren(cp.vertex);
      if (cp.next >= alternatives.size()) {
        choices_.pop_back();
        continue;
      }
      auto disjunct = alternatives[cp.next++].negate();
      if (!tick()) return Status::Budget;
      if (add(cp.node, disjunct.code())) return Status::Choice;
    }
    return Status::Clash;
  }

  Status process(std::uint32_t node, std::uint32_t code) {
    auto ref = VertexRef::fromCode(code);
    const auto& v = dag_.vertex(ref.id);
    switch (v.op) {
      case VertexOp::Top:
        break;
      case VertexOp::Atomic:
        if (!ref.negated) {
          for (const auto& def : dag_.positiveUnfolding(ref.id)) {
            if (!tick()) return Status::Budget;
            if (!add(node, def.code())) return Status::Clash;
          }
        } else if (const auto& def = dag_.negativeUnfolding(ref.id)) {
          if (!tick()) return Status::Budget;
          if (!add(node, def->code())) return Status::Clash;
        }
        break;
      case VertexOp::And:
        if (!ref.negated) {
          if (!tick()) return Status::Budget;
          for (const auto& e : d_.orderedChildren(ref.id)) {
            if (!add(node, e.code())) return Status::Clash;
          }
        } else {
          nodes_[node].disjunctions.push_back(code);
          trail_.push_back({Undo::PushDisj, node, 0});
        }
        break;
      case VertexOp::All:
        if (!ref.negated) {
          auto filler = v.children.front().code();
          auto role = roleOf_[ref.id];
          // Index loop: successors never change while rules are applied.
          for (std::size_t i = 0; i < nodes_[node].successors.size(); ++i) {
            auto s = nodes_[node].successors[i];
            if (nodes_[s].role != role) continue;
            if (!tick()) return Status::Budget;
            if (!add(s, filler)) return Status::Clash;
          }
        } else {
          nodes_[node].existentials.push_back(code);
          trail_.push_back({Undo::PushSome, node, 0});
        }
        break;
    }
    return Status::Complete;
  }

  bool disjunctionSatisfied(const Node& n, VertexId v) const {
    for (const auto& e : dag_.vertex(v).children) {
      if (has(n, e.negate().code())) return true;
    }
    return false;
  }

  bool isBlocked(std::uint32_t node) {
    auto& n = nodes_[node];
    if (n.blocked >= 0) return n.blocked != 0;
    bool blocked = false;
    for (auto a = n.parent; a >= 0 && !blocked; a = nodes_[a].parent) {
      const auto& anc = nodes_[a];
      blocked = std::all_of(n.label.begin(), n.label.end(), [&](auto c) { return has(anc, c); });
    }
    trail_.push_back({Undo::Blocked, node, static_cast<std::uint32_t>(n.blocked)});
    n.blocked = blocked ? 1 : 0;
    return blocked;
  }

  Status generate(std::uint32_t node, std::uint32_t code) {
    auto ref = VertexRef::fromCode(code);
    auto role = roleOf_[ref.id];
    auto filler = dag_.vertex(ref.id).children.front().negate().code();
    for (auto s : nodes_[node].successors) {
      if (nodes_[s].role == role && has(nodes_[s], filler)) return Status::Complete;
    }
    if (!tick()) return Status::Budget;
    newNode(static_cast<std::int32_t>(node), role);
    auto child = static_cast<std::uint32_t>(nodes_.size() - 1);
    if (!add(child, filler)) return Status::Clash;
    // Index loop: `add` on the child never touches the parent's label.
    for (std::size_t i = 0; i < nodes_[node].label.size(); ++i) {
      auto c = nodes_[node].label[i];
      auto r = VertexRef::fromCode(c);
      const auto& v = dag_.vertex(r.id);
      if (r.negated || v.op != VertexOp::All || roleOf_[r.id] != role) continue;
      if (!tick()) return Status::Budget;
      if (!add(child, v.children.front().code())) return Status::Clash;
    }
    if (dag_.gciConstraint()) {
      if (!tick()) return Status::Budget;
      if (!add(child, dag_.gciConstraint()->code())) return Status::Clash;
    }
    return Status::Complete;
  }

  Status expand(Choice& choice) {
    while (true) {
      // Deterministic rules. Labels only grow forward (own node or
      // successors), so one ascending pass saturates the tree.
      for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        while (nodes_[i].cursor < nodes_[i].label.size()) {
          auto& n = nodes_[i];
          trail_.push_back({Undo::Cursor, i, n.cursor});
          auto code = n.label[n.cursor++];
          auto st = process(i, code);
          if (st != Status::Complete) return st;
        }
      }

      for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        auto& n = nodes_[i];
        while (n.disjunctionsDone < n.disjunctions.size()) {
          auto code = n.disjunctions[n.disjunctionsDone];
          trail_.push_back({Undo::DisjDone, i, n.disjunctionsDone});
          ++n.disjunctionsDone;
          auto v = VertexRef::fromCode(code).id;
          if (disjunctionSatisfied(n, v)) continue;
          choice = {i, v};
          return Status::Choice;
        }
      }

      bool generated = false;
      for (std::uint32_t i = 0; i < nodes_.size() && !generated; ++i) {
        if (nodes_[i].existentialsDone >= nodes_[i].existentials.size()) continue;
        if (isBlocked(i)) continue;
        auto& n = nodes_[i];
        auto code = n.existentials[n.existentialsDone];
        trail_.push_back({Undo::SomeDone, i, n.existentialsDone});
        ++n.existentialsDone;
        auto st = generate(i, code);
        if (st != Status::Complete) return st;
        generated = true;
      }
      if (!generated) return Status::Complete;
    }
  }

  std::size_t modelSize() const {
    std::vector<const Node*> live;
    for (const auto& n : nodes_) {
      if (n.blocked != 1) live.push_back(&n);
    }
    auto subset = [](const Node* a, const Node* b) {
      for (std::size_t w = 0; w < a->bits.size(); ++w) {
        if (a->bits[w] & ~b->bits[w]) return false;
      }
      return true;
    };
    std::size_t count = 0;
    for (std::size_t i = 0; i < live.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < live.size() && !dominated; ++j) {
        if (i == j || !subset(live[i], live[j])) continue;
        // Equal labels: keep the first copy only.
        dominated = !subset(live[j], live[i]) || j < i;
      }
      if (!dominated) ++count;
    }
    return count;
  }

  SatResult finish(SatOutcome outcome) {
    result_.outcome = outcome;
    if (outcome == SatOutcome::Satisfiable) result_.modelSize = modelSize();
    return result_;
  }

  const OrderedDag& d_;
  const Dag& dag_;
  std::uint64_t budget_;
  std::size_t words_ = 0;
  std::vector<std::uint32_t> roleOf_;
  std::vector<Node> nodes_;
  std::vector<TrailEntry> trail_;
  std::vector<ChoicePoint> choices_;
  SatResult result_;
};

}  // namespace

SatResult isSatisfiable(const OrderedDag& d, VertexRef target, std::uint64_t budget) {
  return Tableau(d, std::max<std::uint64_t>(budget, 1)).run(target);
}

SatResult checkTBoxConsistency(const OrderedDag& d, std::uint64_t budget) {
  return isSatisfiable(d, {Dag::kTop, false}, budget);
}

SweepResult satisfiabilitySweep(const OrderedDag& d, std::uint64_t budgetPerTest, std::uint64_t totalBudget) {
  auto start = std::chrono::steady_clock::now();
  SweepResult sweep;
  auto runOne = [&](VertexRef target) {
    auto remaining = totalBudget - sweep.totalSteps;
    auto r = isSatisfiable(d, target, std::min(budgetPerTest, remaining));
    sweep.totalSteps += r.steps;
    if (r.outcome == SatOutcome::BudgetExceeded) sweep.timedOut = true;
    return r;
  };
  sweep.consistency = runOne({Dag::kTop, false});
  if (!sweep.timedOut) {
    for (const auto& [name, id] : d.dag().atoms()) {
      sweep.perClass.emplace(name, runOne({id, false}));
      if (sweep.timedOut) break;
    }
  }
  sweep.elapsedMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sweep;
}

}  // namespace dlorder
