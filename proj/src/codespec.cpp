#include "qcat/codespec.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace qcat {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Line {
  int number;
  std::string text;
};

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

bool is_bit_string(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c != '0' && c != '1') return false;
  return true;
}

int parse_positive(const Line& line, const std::string& value, const char* key) {
  try {
    const int v = std::stoi(value);
    if (v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string(key) + " must be a positive integer, got '" +
                                      value + "'");
  }
}

}  // namespace

ParsedCode parse_code_spec(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string text = strip(raw);
    if (!text.empty()) lines.push_back(Line{number, text});
  }

  std::string name, type;
  int k = 0, n = 0;
  std::vector<Line> rows;        // block rows
  std::vector<Line> poly_lines;  // convolutional g rows
  bool in_rows = false, in_g = false;

  for (const Line& line : lines) {
    const auto colon = line.text.find(':');
    const std::string key =
        colon == std::string::npos ? "" : strip(line.text.substr(0, colon));
    const std::string value =
        colon == std::string::npos ? "" : strip(line.text.substr(colon + 1));

    if (key == "name") {
      name = value;
      in_rows = in_g = false;
    } else if (key == "type") {
      type = value;
      in_rows = in_g = false;
    } else if (key == "k") {
      k = parse_positive(line, value, "k");
      in_rows = in_g = false;
    } else if (key == "n") {
      n = parse_positive(line, value, "n");
      in_rows = in_g = false;
    } else if (key == "rows") {
      in_rows = true;
      in_g = false;
      if (!value.empty()) rows.push_back(Line{line.number, value});
    } else if (key == "g") {
      in_g = true;
      in_rows = false;
      if (!value.empty()) poly_lines.push_back(Line{line.number, value});
    } else if (in_rows) {
      rows.push_back(line);
    } else if (in_g) {
      poly_lines.push_back(line);
    } else {
      throw ParseError(line.number, "unexpected line '" + line.text + "'");
    }
  }

  if (type.empty()) throw ParseError(1, "missing 'type:' (block or conv)");
  if (name.empty()) name = "unnamed";

  if (type == "block") {
    if (rows.empty()) throw ParseError(1, "block code needs a 'rows:' section");
    std::vector<std::string> bits;
    for (const Line& r : rows) {
      const auto tokens = split_tokens(r.text);
      for (const auto& t : tokens) {
        if (!is_bit_string(t))
          throw ParseError(r.number, "generator row '" + t + "' is not a 0/1 string");
        if (!bits.empty() && t.size() != bits.front().size())
          throw ParseError(r.number, "row length " + std::to_string(t.size()) +
                                         " differs from " +
                                         std::to_string(bits.front().size()));
        bits.push_back(t);
      }
    }
    try {
      return ParsedCode{name, classical::from_generator(name, bits)};
    } catch (const std::invalid_argument& e) {
      throw ParseError(rows.front().number, e.what());
    }
  }

  if (type == "conv") {
    if (k == 0 || n == 0) throw ParseError(1, "conv code needs 'k:' and 'n:'");
    if (poly_lines.size() != static_cast<std::size_t>(k))
      throw ParseError(poly_lines.empty() ? 1 : poly_lines.back().number,
                       "expected " + std::to_string(k) + " polynomial row(s) after 'g:', got " +
                           std::to_string(poly_lines.size()));
    std::vector<std::vector<gf2::BitVector>> gpoly;
    for (const Line& row : poly_lines) {
      const auto tokens = split_tokens(row.text);
      if (tokens.size() != static_cast<std::size_t>(n))
        throw ParseError(row.number, "expected " + std::to_string(n) +
                                         " coefficient strings, got " +
                                         std::to_string(tokens.size()));
      std::vector<gf2::BitVector> polys;
      for (const auto& t : tokens) {
        if (!is_bit_string(t))
          throw ParseError(row.number, "coefficient string '" + t + "' is not 0/1");
        polys.push_back(gf2::BitVector::from_string(t));
      }
      gpoly.push_back(std::move(polys));
    }
    try {
      return ParsedCode{name, classical::ConvolutionalCode(
                                  name, static_cast<std::size_t>(k),
                                  static_cast<std::size_t>(n), std::move(gpoly))};
    } catch (const std::invalid_argument& e) {
      throw ParseError(poly_lines.front().number, e.what());
    }
  }

  throw ParseError(1, "unknown type '" + type + "' (expected block or conv)");
}

ParsedCode parse_code_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file '" + path + "'");
  return parse_code_spec(in);
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 8; ++n) names.push_back("repetition-" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) names.push_back("parity-" + std::to_string(n));
  names.push_back("hamming74");
  const std::size_t primaries = names.size();
  for (std::size_t i = 0; i < primaries; ++i) names.push_back(names[i] + "-dual");
  return names;
}

std::optional<classical::BlockCode> builtin_code(const std::string& name) {
  std::string base = name;
  bool dual = false;
  if (const auto pos = name.rfind("-dual"); pos != std::string::npos &&
                                            pos + 5 == name.size()) {
    base = name.substr(0, pos);
    dual = true;
  }

  std::optional<classical::BlockCode> code;
  if (base.rfind("repetition-", 0) == 0) {
    const int n = std::atoi(base.c_str() + 11);
    if (n >= 1 && n <= 8) code = classical::make_repetition(static_cast<std::size_t>(n));
  } else if (base.rfind("parity-", 0) == 0) {
    const int n = std::atoi(base.c_str() + 7);
    if (n >= 3 && n <= 8) code = classical::make_parity(static_cast<std::size_t>(n));
  } else if (base == "hamming74") {
    code = classical::make_hamming74();
  }
  if (!code) return std::nullopt;
  if (dual) return code->dual();
  return code;
}

ParsedCode resolve_code(const std::string& name_or_path) {
  if (auto builtin = builtin_code(name_or_path))
    return ParsedCode{name_or_path, std::move(*builtin)};
  return parse_code_spec_file(name_or_path);
}

}  // namespace qcat
