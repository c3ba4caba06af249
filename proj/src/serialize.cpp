#include "dyckal/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace dyckal {

namespace {

nlohmann::json parse(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON field \"") + key + "\": " +
                                e.what());
  }
}

}  // namespace

std::string to_json(const DyckPath& p) {
  nlohmann::json j;
  j["n"] = p.semilength();
  j["word"] = p.word();
  return j.dump();
}

DyckPath path_from_json(std::string_view text) {
  auto j = parse(text);
  auto n = field<int>(j, "n");
  auto word = field<std::string>(j, "word");
  auto p = DyckPath::from_word(word);
  if (p.semilength() != n)
    throw std::invalid_argument("JSON path: n=" + std::to_string(n) +
                                " does not match word of semilength " +
                                std::to_string(p.semilength()));
  return p;
}

std::string to_json(int n, const Composition& c) {
  nlohmann::json j;
  j["n"] = n;
  j["parts"] = c.parts;
  return j.dump();
}

Composition composition_from_json(std::string_view text) {
  auto j = parse(text);
  auto n = field<int>(j, "n");
  Composition c{field<std::vector<int>>(j, "parts")};
  for (int part : c.parts)
    if (part <= 0) throw std::invalid_argument("JSON composition: nonpositive part");
  if (c.total() != n)
    throw std::invalid_argument("JSON composition: parts sum to " +
                                std::to_string(c.total()) + ", not n=" +
                                std::to_string(n));
  return c;
}

std::string to_json(const CrossingSet& c) {
  nlohmann::json j;
  j["abscissas"] = c.abscissas;
  return j.dump();
}

CrossingSet crossing_from_json(std::string_view text) {
  auto j = parse(text);
  return CrossingSet{field<std::vector<int>>(j, "abscissas")};
}

std::string to_json(const IntervalAntichain& f) {
  nlohmann::json j;
  j["n"] = f.n;
  auto arr = nlohmann::json::array();
  for (const auto& iv : f.intervals) arr.push_back({iv.lo, iv.hi});
  j["intervals"] = arr;
  return j.dump();
}

IntervalAntichain antichain_from_json(std::string_view text) {
  auto j = parse(text);
  auto n = field<int>(j, "n");
  auto raw = field<std::vector<std::vector<int>>>(j, "intervals");
  std::vector<Interval> ivs;
  for (const auto& pair : raw) {
    if (pair.size() != 2)
      throw std::invalid_argument("JSON antichain: each interval needs two entries");
    ivs.push_back({pair[0], pair[1]});
  }
  return IntervalAntichain::make(n, std::move(ivs));
}

std::string to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["checked"] = r.checked;
  auto arr = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json jf;
    jf["input"] = f.input;
    jf["expected"] = f.expected;
    jf["got"] = f.got;
    arr.push_back(jf);
  }
  j["failures"] = arr;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump();
}

}  // namespace dyckal
