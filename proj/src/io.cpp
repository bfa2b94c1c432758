#include "qmds/io.hpp"

#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace qmds {

namespace {

template <class T>
T required_uint(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidCode(std::string("descriptor is missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InvalidCode(std::string("descriptor field \"") + key + "\" must be a nonnegative integer");
  return static_cast<T>(v.get<std::int64_t>());
}

}  // namespace

Json code_to_json(const QuantumMdsCode& code) {
  const auto& p = code.params();
  Json j;
  j["q"] = p.q;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.d;
  Json alphas = Json::array();
  for (const auto& a : code.alphas()) alphas.push_back(a.value());
  j["alphas"] = std::move(alphas);
  return j;
}

QuantumMdsCode code_from_json(const Json& descriptor) {
  if (!descriptor.is_object()) throw InvalidCode("code descriptor must be a JSON object");
  CodeParams p;
  p.q = required_uint<std::uint32_t>(descriptor, "q");
  p.n = required_uint<std::size_t>(descriptor, "n");
  p.k = required_uint<std::size_t>(descriptor, "k");
  p.d = required_uint<std::size_t>(descriptor, "d");
  if (!descriptor.contains("alphas")) return QuantumMdsCode::construct(p);

  const auto& arr = descriptor.at("alphas");
  if (!arr.is_array()) throw InvalidCode("descriptor field \"alphas\" must be an array");
  std::vector<std::int64_t> alphas;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw InvalidCode("alphas must be integers");
    alphas.push_back(v.get<std::int64_t>());
  }
  return QuantumMdsCode::construct(p, alphas);
}

Json profile_to_json(const EntropyProfile& profile) {
  Json code;
  code["q"] = profile.params.q;
  code["n"] = profile.params.n;
  code["k"] = profile.params.k;
  code["d"] = profile.params.d;
  code["alphas"] = profile.alphas;

  Json entries = Json::array();
  for (const auto& e : profile.entries) {
    Json row;
    row["subsystem"] = e.subsystem.names();
    row["size"] = e.size;
    row["entropy"] = e.entropy;
    row["expected"] = e.expected;
    row["match"] = e.match;
    entries.push_back(std::move(row));
  }
  for (const auto& e : profile.extended) {
    Json row;
    row["subsystem"] = e.names();
    row["size"] = e.size;
    row["entropy"] = e.entropy;
    row["expected"] = nullptr;
    row["match"] = nullptr;
    entries.push_back(std::move(row));
  }

  Json j;
  j["code"] = std::move(code);
  j["entries"] = std::move(entries);
  return j;
}

std::string profile_to_csv(const EntropyProfile& profile) {
  std::set<std::pair<std::size_t, std::size_t>> rows;
  for (const auto& e : profile.entries) rows.emplace(e.size, e.entropy);
  std::ostringstream os;
  os << "size,entropy\n";
  for (const auto& [size, h] : rows) os << size << ',' << h << '\n';
  return os.str();
}

std::string figure_csv(std::size_t k, std::size_t d) {
  if (k < 1) throw InvalidCode("k must be >= 1");
  if (d < 2) throw InvalidCode("d must be >= 2");
  const std::size_t top = 2 * (k + d - 1);
  std::ostringstream os;
  os << "size,entropy\n";
  for (std::size_t s = 0; s <= top; ++s) os << s << ',' << theorem1_expected(s, k, d) << '\n';
  return os.str();
}

}  // namespace qmds
