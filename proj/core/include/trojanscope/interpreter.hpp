#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trojanscope/elaborate.hpp"

namespace trojanscope {

/// Two-valued cycle-accurate reference interpreter for flattened designs
/// with signal widths <= 64.
///
/// Step model: combinational items settle to fixpoint, then every
/// edge-triggered block fires once (one clock edge per step) with
/// nonblocking assignments latched atomically. Async-reset edges therefore
/// behave as synchronous; the oracle compares designs under identical
/// semantics, which is what the behavior-preservation checks need.
/// Division/modulo by zero and out-of-range bit selects read as 0.
class Interpreter {
 public:
  explicit Interpreter(const FlatDesign& design);

  void set(const std::string& name, std::uint64_t value);
  std::uint64_t get(const std::string& name) const;

  /// Settle combinational items; throws Error(combinational_loop) if no
  /// fixpoint is reached within the iteration cap.
  void settle();
  void tick_stage();
  void tick_commit();
  void tick() {
    tick_stage();
    tick_commit();
  }

  std::map<std::string, std::uint64_t> outputs() const;

  std::uint64_t eval(const Expr& e) const;
  /// Write through an elaborated lvalue; returns true if any bit changed.
  bool poke_lvalue(const Expr& lhs, std::uint64_t value);

  const FlatDesign& design() const { return *design_; }

 private:
  struct Staged {
    int signal;
    std::uint64_t mask;
    std::uint64_t bits;
  };

  int index_of(const std::string& name) const;
  std::uint64_t mask_of(int idx) const;
  bool exec_body(const std::vector<Stmt>& body, bool in_edge_block);
  bool exec_assign(const Expr& lhs, std::uint64_t value, bool nonblocking, bool in_edge_block);

  const FlatDesign* design_;
  std::vector<std::uint64_t> values_;
  std::vector<const HdlItem*> comb_items_;
  std::vector<const AlwaysBlock*> edge_blocks_;
  std::vector<Staged> staged_;
};

/// Drive a flattened design with one map of input values per cycle and
/// record the outputs observed after each cycle's combinational settle
/// (before the clock edge).
std::vector<std::map<std::string, std::uint64_t>> run_trace(
    const FlatDesign& design, const std::vector<std::map<std::string, std::uint64_t>>& inputs);

/// Hierarchical co-simulator: interprets each module instance separately
/// and exchanges port values at settle time, composing behavior without
/// ever flattening. Serves as the pre-elaboration baseline the flattened
/// interpretation must match.
class HierSim {
 public:
  HierSim(const std::vector<HdlModule>& modules, const std::string& top);
  ~HierSim();
  HierSim(HierSim&&) noexcept;

  void set(const std::string& name, std::uint64_t value);
  void settle();
  void tick_stage();
  void tick_commit();
  std::map<std::string, std::uint64_t> outputs() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<std::map<std::string, std::uint64_t>> run_trace_hier(
    const std::vector<HdlModule>& modules, const std::string& top,
    const std::vector<std::map<std::string, std::uint64_t>>& inputs);

}  // namespace trojanscope
