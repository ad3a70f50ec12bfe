#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace trojanscope {

/// The closed set of 32 node types: 1 constant tag + 3 signal tags + 28
/// operation tags. The column order is frozen; checkpoints record
/// kTagsetVersion and refuse to load against a different set.
enum class NodeTag : std::uint8_t {
  numeric = 0,
  input,
  output,
  signal,
  op_and,
  op_or,
  op_xor,
  op_xnor,
  op_not,
  op_nand,
  op_nor,
  op_logical_and,
  op_logical_or,
  op_logical_not,
  op_reduce_or,
  op_reduce_xor,
  op_eq,
  op_neq,
  op_lt,
  op_gt,
  op_le,
  op_ge,
  op_plus,
  op_minus,
  op_times,
  op_divide,
  op_mod,
  op_shift_left,
  op_shift_right,
  op_concat,
  op_part_select,
  op_branch,
};

inline constexpr int kTagCount = 32;
inline constexpr std::string_view kTagsetVersion = "1";

std::string_view tag_name(NodeTag t);
std::optional<NodeTag> tag_from_name(std::string_view name);

}  // namespace trojanscope
