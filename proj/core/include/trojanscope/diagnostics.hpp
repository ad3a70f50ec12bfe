#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace trojanscope {

/// Location of a token or construct in an HDL source file.
/// Lines and columns are 1-based.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;

  std::string str() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }

  bool operator==(const SourceSpan&) const = default;
};

enum class Errc {
  lex_error,
  parse_error,
  unsupported_construct,
  unknown_module,
  recursive_instantiation,
  port_arity_mismatch,
  width_mismatch,
  elaboration_error,
  unassigned_signal,
  empty_graph,
  unknown_operator,
  keyword_collision,
  unknown_scope_name,
  non_termination,
  shape_mismatch,
  tagset_mismatch,
  divergence,
  length_mismatch,
  param_out_of_range,
  missing_tap_role,
  combinational_loop,
  io_error,
  usage_error,
  internal_error,
};

const char* errc_name(Errc code);

/// Every failure in the pipeline surfaces as an Error carrying a machine
/// code and, when available, the source span it refers to. Diagnostics
/// render as "file:line:col: message".
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, SourceSpan span, std::string message)
      : std::runtime_error(std::move(message)), code_(code), span_(std::move(span)) {}

  Errc code() const { return code_; }
  const std::optional<SourceSpan>& span() const { return span_; }

  std::string diagnostic() const {
    if (span_) return span_->str() + ": " + what();
    return std::string("error: ") + what();
  }

 private:
  Errc code_;
  std::optional<SourceSpan> span_;
};

struct Warning {
  SourceSpan span;
  std::string message;

  std::string diagnostic() const { return span.str() + ": warning: " + message; }
};

}  // namespace trojanscope
