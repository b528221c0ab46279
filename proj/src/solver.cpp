#include "ramsey/solver.hpp"

#include <utility>
#include <vector>

namespace ramsey {

namespace {

// Literal codes: 2 * (var - 1) + negated.
using Lit = int;

constexpr Lit encode_lit(const Literal& l) noexcept { return 2 * (l.var - 1) + (l.negated ? 1 : 0); }
constexpr Lit negate(Lit l) noexcept { return l ^ 1; }
constexpr int var_of(Lit l) noexcept { return l >> 1; }

enum : std::int8_t { kFalse = 0, kTrue = 1, kUnassigned = 2 };

class Dpll {
 public:
  Dpll(const CnfFormula& f, std::uint64_t budget)
      : num_vars_(f.num_vars),
        budget_(budget),
        values_(static_cast<std::size_t>(f.num_vars), kUnassigned),
        watches_(2 * static_cast<std::size_t>(f.num_vars)) {
    for (const Clause& c : f.clauses) {
      if (c.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      if (c.size() == 1) {
        units_.push_back(encode_lit(c.front()));
        continue;
      }
      std::vector<Lit> lits;
      lits.reserve(c.size());
      for (const Literal& l : c) lits.push_back(encode_lit(l));
      const auto index = clauses_.size();
      watches_[static_cast<std::size_t>(lits[0])].push_back(index);
      watches_[static_cast<std::size_t>(lits[1])].push_back(index);
      clauses_.push_back(std::move(lits));
    }
  }

  SolveResult run() {
    SolveResult result;
    result.status = search();
    result.stats = stats_;
    if (result.status == SolveStatus::Sat) {
      result.model.resize(static_cast<std::size_t>(num_vars_));
      for (int v = 0; v < num_vars_; ++v) result.model[static_cast<std::size_t>(v)] = values_[static_cast<std::size_t>(v)] == kTrue;
    }
    return result;
  }

 private:
  std::int8_t value(Lit l) const noexcept {
    const std::int8_t v = values_[static_cast<std::size_t>(var_of(l))];
    return v == kUnassigned ? v : static_cast<std::int8_t>(v ^ (l & 1));
  }

  void assign(Lit l) {
    values_[static_cast<std::size_t>(var_of(l))] = (l & 1) ? kFalse : kTrue;
    trail_.push_back(l);
  }

  // Returns false on conflict.
  bool enqueue(Lit l) {
    const auto v = value(l);
    if (v == kFalse) return false;
    if (v == kUnassigned) assign(l);
    return true;
  }

  bool propagate() {
    while (queue_head_ < trail_.size()) {
      const Lit false_lit = negate(trail_[queue_head_++]);
      ++stats_.propagations;
      auto& watchers = watches_[static_cast<std::size_t>(false_lit)];
      std::size_t keep = 0;
      std::size_t i = 0;
      bool conflict = false;
      for (; i < watchers.size(); ++i) {
        const std::size_t ci = watchers[i];
        auto& c = clauses_[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) == kTrue) {
          watchers[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != kFalse) {
            std::swap(c[1], c[k]);
            watches_[static_cast<std::size_t>(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watchers[keep++] = ci;
        if (value(c[0]) == kFalse) {
          conflict = true;
          ++i;
          break;
        }
        assign(c[0]);
      }
      for (; i < watchers.size(); ++i) watchers[keep++] = watchers[i];
      watchers.resize(keep);
      if (conflict) return false;
    }
    return true;
  }

  void new_level(bool flipped) {
    level_start_.push_back(trail_.size());
    flipped_.push_back(flipped);
  }

  void cancel_to(std::size_t level) {
    if (level_start_.size() <= level) return;
    const std::size_t start = level_start_[level];
    for (std::size_t i = start; i < trail_.size(); ++i) {
      const int v = var_of(trail_[i]);
      values_[static_cast<std::size_t>(v)] = kUnassigned;
      if (v < next_var_) next_var_ = v;
    }
    trail_.resize(start);
    queue_head_ = start;
    level_start_.resize(level);
    flipped_.resize(level);
  }

  // Undo decisions until one whose second branch is still open, then take it.
  bool backtrack() {
    while (!level_start_.empty()) {
      const std::size_t level = level_start_.size() - 1;
      const Lit decision = trail_[level_start_[level]];
      const bool was_flipped = flipped_[level];
      cancel_to(level);
      if (!was_flipped) {
        new_level(/*flipped=*/true);
        assign(negate(decision));
        return true;
      }
    }
    return false;
  }

  SolveStatus search() {
    if (trivially_unsat_) return SolveStatus::Unsat;
    for (Lit l : units_) {
      if (!enqueue(l)) return SolveStatus::Unsat;
    }
    for (;;) {
      if (!propagate()) {
        ++stats_.conflicts;
        if (!backtrack()) return SolveStatus::Unsat;
        continue;
      }
      while (next_var_ < num_vars_ && values_[static_cast<std::size_t>(next_var_)] != kUnassigned) ++next_var_;
      if (next_var_ == num_vars_) return SolveStatus::Sat;
      if (stats_.decisions >= budget_) return SolveStatus::BudgetExceeded;
      ++stats_.decisions;
      new_level(/*flipped=*/false);
      assign(2 * next_var_);
    }
  }

  int num_vars_;
  std::uint64_t budget_;
  bool trivially_unsat_ = false;
  std::vector<std::int8_t> values_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<Lit> units_;
  std::vector<Lit> trail_;
  std::size_t queue_head_ = 0;
  std::vector<std::size_t> level_start_;
  std::vector<bool> flipped_;
  int next_var_ = 0;
  SolveStats stats_;
};

}  // namespace

SolveResult solve(const CnfFormula& f, std::uint64_t budget) {
  validate(f);
  return Dpll(f, budget).run();
}

}  // namespace ramsey
