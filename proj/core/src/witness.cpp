#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ucube/family_io.hpp"
#include "ucube/verify.hpp"

namespace ucube {

std::string format_witness(const VerificationReport& report, const SetFamily& family,
                           const std::optional<WeightVector>& weights) {
  std::ostringstream out;
  out << "# theorem: " << report.theorem << '\n';
  out << "# hypothesis: " << to_string(report.hypothesis) << '\n';
  out << "# conclusion: " << to_string(report.conclusion) << '\n';
  if (weights) out << "# weights: " << format_weights(*weights) << '\n';
  if (report.hitting_set) out << "# hitting set: " << format_set(*report.hitting_set) << '\n';
  for (const auto& [name, value] : report.quantities) out << "# " << name << " = " << to_string(value) << '\n';
  for (const auto& note : report.notes) out << "# note: " << note << '\n';
  for (const auto& v : report.values) {
    out << "# coordinate " << v.coordinate + 1 << ": lhs=" << to_string(v.lhs) << " rhs=" << to_string(v.rhs)
        << " margin=" << to_string(v.margin) << '\n';
  }
  write_family(out, family);
  return out.str();
}

std::filesystem::path write_witness(const std::filesystem::path& dir, const VerificationReport& report,
                                    const SetFamily& family, const std::optional<WeightVector>& weights) {
  const std::string text = format_witness(report, family, weights);

  std::uint64_t hash = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::string stem = report.theorem;
  for (char& c : stem) {
    if (c == '/') c = '_';
  }
  std::ostringstream name;
  name << stem << '-' << std::hex << std::setw(16) << std::setfill('0') << hash << ".txt";

  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / name.str();
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write witness file " + path.string());
  file << text;
  return path;
}

}  // namespace ucube
