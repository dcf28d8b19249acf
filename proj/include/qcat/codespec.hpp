#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcat/classical.hpp"

namespace qcat {

// A code definition read from a file: either a block generator matrix or a
// convolutional polynomial matrix.
struct ParsedCode {
  std::string name;
  std::variant<classical::BlockCode, classical::ConvolutionalCode> code;
  bool is_block() const { return std::holds_alternative<classical::BlockCode>(code); }
  const classical::BlockCode& block() const {
    return std::get<classical::BlockCode>(code);
  }
  const classical::ConvolutionalCode& conv() const {
    return std::get<classical::ConvolutionalCode>(code);
  }
};

// Line-oriented format, '#' starts a comment.
//
//   name: my-code          name: seven-five
//   type: block            type: conv
//   rows:                  k: 1
//   110                    n: 2
//   011                    g: 111 101
//
// Block rows are 0/1 strings of uniform length. Convolutional g takes k
// lines of n coefficient strings; the leftmost bit of each string is the
// coefficient of D^0. Errors carry 1-based line numbers.
ParsedCode parse_code_spec(std::istream& in);
ParsedCode parse_code_spec_file(const std::string& path);

// Built-in catalog: repetition 1..8, parity 3..8, hamming74, and their duals
// (suffix "-dual"), in that order.
std::vector<std::string> builtin_names();
std::optional<classical::BlockCode> builtin_code(const std::string& name);

// A built-in name, else a path to a code definition file.
ParsedCode resolve_code(const std::string& name_or_path);

}  // namespace qcat
