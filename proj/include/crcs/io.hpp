#pragma once

#include <string>

#include "crcs/core.hpp"
#include "crcs/problems.hpp"

namespace crcs::io {

struct NclInstance {
    NclMachine machine;
    NclOrientation cs;
    NclOrientation ct;
};

/// Format keyword of the header line ("crcs", "ts", "svr" or "ncl").
/// Throws ParseError if the first item is not a known `<kind> 1` header.
std::string detect_format(const std::string& text);

// Parsers throw ParseError (with line and column) for syntax and range
// problems and ValidationError for well-formed but invalid content.
Instance parse_crcs(const std::string& text);
TokenSlidingInstance parse_ts(const std::string& text);
SVRInstance parse_svr(const std::string& text);
NclInstance parse_ncl(const std::string& text);

// Canonical text: fixed item order, edges sorted.
std::string format_crcs(const Instance& instance);
std::string format_ts(const TokenSlidingInstance& ts);
std::string format_svr(const SVRInstance& svr);
std::string format_ncl(const NclInstance& ncl);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace crcs::io
