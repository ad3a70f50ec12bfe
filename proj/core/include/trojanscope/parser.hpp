#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trojanscope/ast.hpp"
#include "trojanscope/lexer.hpp"

namespace trojanscope {

/// Parse a token stream into one AST per `module ... endmodule`.
///
/// The grammar is the synthesizable subset: module/port/net/parameter
/// declarations, continuous assigns, edge-triggered and @(*) always blocks
/// with if/case/casex statements, instantiations with named or positional
/// connections, and the expression operator set used for node tagging.
/// Anything else raises UnsupportedConstruct; malformed syntax raises
/// ParseError; the first error aborts the file.
std::vector<HdlModule> parse(const std::vector<Token>& tokens);

/// tokenize + parse in one step.
std::vector<HdlModule> parse_source(std::string_view source, const std::string& file);

/// Read a list of .v files and parse them all into one module list.
std::vector<HdlModule> parse_files(const std::vector<std::string>& paths);

}  // namespace trojanscope
