#include "ucube/family_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ucube {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

SetFamily parse_family(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  int d = -1;

  while (d < 0 && std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 2) != "d=") fail(line_no, "expected header 'd=<n>'");
    std::string_view digits = trim(line.substr(2));
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      fail(line_no, "malformed dimension '" + std::string(digits) + "'");
    }
    d = std::stoi(std::string(digits));
    if (d < 1 || d > kMaxDimension) {
      fail(line_no, "dimension " + std::to_string(d) + " outside 1.." + std::to_string(kMaxDimension));
    }
  }
  if (d < 0) throw ParseError("missing header 'd=<n>'");

  SetFamily family(d);
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.size() != static_cast<std::size_t>(d)) {
      fail(line_no, "expected " + std::to_string(d) + " characters, got " + std::to_string(line.size()));
    }
    Mask x = 0;
    for (int k = 0; k < d; ++k) {
      char c = line[static_cast<std::size_t>(k)];
      if (c == '1') {
        x |= bit(k);
      } else if (c != '0') {
        fail(line_no, "invalid character '" + std::string(1, c) + "'");
      }
    }
    if (family.contains(x)) fail(line_no, "duplicate member '" + std::string(line) + "'");
    family.insert(x);
  }
  return family;
}

SetFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

SetFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file '" + path.string() + "'");
  try {
    return parse_family(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<SetFamily> parse_family_list(std::istream& in) {
  std::vector<SetFamily> out;
  std::string line, block;
  bool content = false;  // block holds more than blanks and comments
  auto flush = [&] {
    if (content) out.push_back(parse_family(block));
    block.clear();
    content = false;
  };
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.substr(0, 2) == "d=") flush();
    if (!t.empty() && t.front() != '#') content = true;
    block += line;
    block += '\n';
  }
  flush();
  return out;
}

std::string format_point(Mask x, int d) {
  std::string s(static_cast<std::size_t>(d), '0');
  for (int k = 0; k < d; ++k) {
    if (has_bit(x, k)) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

std::string format_set(Mask x) {
  std::string s = "{";
  bool first = true;
  for (int k = 0; x >> k; ++k) {
    if (!has_bit(x, k)) continue;
    if (!first) s += ',';
    s += std::to_string(k + 1);
    first = false;
  }
  return s + "}";
}

void write_family(std::ostream& out, const SetFamily& family) {
  out << "d=" << family.dimension() << '\n';
  family.for_each([&](Mask x) { out << format_point(x, family.dimension()) << '\n'; });
}

std::string format_family(const SetFamily& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

WeightVector parse_weights(std::string_view text) {
  std::vector<Rational> p;
  std::string_view rest = trim(text);
  if (rest.empty()) throw ParseError("empty weight list");
  while (true) {
    auto comma = rest.find(',');
    p.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (p.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw ParseError("too many weights (" + std::to_string(p.size()) + ")");
  }
  try {
    return WeightVector(std::move(p));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

WeightVector read_weights(std::string_view arg) {
  std::error_code ec;
  std::filesystem::path path{std::string(arg)};
  if (std::filesystem::is_regular_file(path, ec)) {
    std::ifstream in(path);
    std::string line, content;
    while (std::getline(in, line)) {
      std::string_view t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      content = std::string(t);
      break;
    }
    return parse_weights(content);
  }
  return parse_weights(arg);
}

std::string format_weights(const WeightVector& w) {
  std::string s;
  for (int i = 0; i < w.dimension(); ++i) {
    if (i) s += ',';
    s += to_string(w.p(i));
  }
  return s;
}

}  // namespace ucube
