#include "rainbow/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rainbow/catalog.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

int to_int(const std::string& s, const std::string& whole) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in '" + whole + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Reads the "n=<n>" header and the remaining non-empty, non-comment lines.
int read_header(std::istream& in, std::vector<std::string>& lines, const char* what) {
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) throw ParseError(std::string(what) + ": expected 'n=<n>' header");
      n = to_int(trim(line.substr(2)), line);
      continue;
    }
    lines.push_back(line);
  }
  if (n < 0) throw ParseError(std::string(what) + ": missing 'n=<n>' header");
  return n;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

SetFamily read_family(std::istream& in) {
  std::vector<std::string> lines;
  const int n = read_header(in, lines, "family");
  if (n < 0 || n > kMaxGround) throw ParseError("family: n out of range");
  std::vector<Mask> members;
  for (const auto& line : lines) {
    try {
      std::size_t used = 0;
      members.push_back(std::stoull(line, &used, 16));
      if (used != line.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("family: bad hex mask '" + line + "'");
    }
  }
  try {
    return SetFamily(n, std::move(members));
  } catch (const BadRange& e) {
    throw ParseError(std::string("family: ") + e.what());
  }
}

void write_family(std::ostream& out, const SetFamily& family) {
  out << "n=" << family.ground_size() << "\n";
  for (Mask m : family) out << to_hex(m) << "\n";
}

Coloring read_coloring(std::istream& in) {
  std::vector<std::string> lines;
  const int n = read_header(in, lines, "coloring");
  if (n < 0 || n > Coloring::kMaxGround) throw ParseError("coloring: n out of range");
  if (lines.size() != (std::size_t{1} << n)) {
    throw ParseError("coloring: expected " + std::to_string(std::size_t{1} << n) + " ids, got " +
                     std::to_string(lines.size()));
  }
  std::vector<ColorId> raw;
  raw.reserve(lines.size());
  for (const auto& line : lines) raw.push_back(to_int(line, line));
  return Coloring::normalized(n, raw);
}

void write_coloring(std::ostream& out, const Coloring& coloring) {
  out << "n=" << coloring.ground_size() << "\n";
  for (ColorId c : coloring.colors()) out << c << "\n";
}

Json poset_to_json(const Poset& poset) {
  Json covers = Json::array();
  for (auto [p, q] : hasse(poset).arcs) covers.push_back({p, q});
  return Json{{"n", poset.size()}, {"covers", covers}, {"labels", poset.labels()}};
}

Poset poset_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > Poset::kMaxSize) throw ParseError("poset: n out of range");
    std::vector<Relation> rel;
    for (const auto& c : j.at("covers")) {
      if (c.size() != 2) throw ParseError("poset: each cover is a pair");
      rel.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
      throw ParseError("poset: label count differs from n");
    }
    return Poset::from_relations(n, rel, labels);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poset: ") + e.what());
  }
}

Json family_to_json(const SetFamily& family) {
  Json members = Json::array();
  for (Mask m : family) members.push_back(to_hex(m));
  return Json{{"n", family.ground_size()}, {"size", family.size()}, {"members", members}};
}

Json embedding_to_json(const CopyEmbedding& embedding) {
  Json images = Json::object();
  for (int p = 0; p < embedding.poset.size(); ++p) {
    images[embedding.poset.label(p)] = to_hex(embedding.images[p]);
  }
  return Json{{"poset", poset_to_json(embedding.poset)},
              {"mode", to_string(embedding.mode)},
              {"images", images}};
}

Json partition_to_json(const ShadowPartition& partition) {
  Json out{{"epsilon", partition.epsilon},
           {"k", partition.k},
           {"f1", partition.f1.size()},
           {"f2", partition.f2.size()},
           {"f3", partition.f3.size()}};
  for (auto [name, cls] : {std::pair{"f1_slices", ShadowClass::kF1}, {"f2_slices", ShadowClass::kF2}}) {
    Json slices = Json::array();
    for (const auto& s : slice_sizes(partition, cls)) slices.push_back({{"j", s.j}, {"count", s.count}});
    out[name] = slices;
  }
  return out;
}

Poset resolve_poset(const std::string& spec) {
  if (looks_like_catalog_id(spec)) return catalog(spec);
  std::ifstream in = open(spec);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("poset file '" + spec + "': " + e.what());
  }
  return poset_from_json(j);
}

SetFamily resolve_family(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 3 && parts[0] == "layer") {
    return layer(to_int(parts[1], spec), to_int(parts[2], spec));
  }
  if (parts.size() == 3 && parts[0] == "middle") {
    return middle_layers(to_int(parts[1], spec), to_int(parts[2], spec));
  }
  if (parts.size() == 2 && parts[0] == "full") {
    const int n = to_int(parts[1], spec);
    if (n < 0 || n > 24) throw BadParams("full family needs n <= 24");
    return full_family(n);
  }
  if (parts.size() == 2 && parts[0] == "kt") return katona_tarjan_family(to_int(parts[1], spec));
  std::ifstream in = open(spec);
  return read_family(in);
}

Coloring resolve_coloring(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (!parts.empty() && parts[0] == "lowertriv" && spec.size() > 10) {
    return lowertriv_coloring(resolve_family(spec.substr(10)));
  }
  if (parts.size() == 2 && parts[0] == "butterfly") return butterfly_coloring(to_int(parts[1], spec));
  if (parts.size() == 3 && parts[0] == "broom") {
    return broom_chain_coloring(to_int(parts[1], spec), to_int(parts[2], spec));
  }
  if (parts.size() == 3 && parts[0] == "antichain") {
    return antichain_chain_coloring(to_int(parts[1], spec), to_int(parts[2], spec));
  }
  if (parts.size() == 2 && (parts[0] == "mono" || parts[0] == "distinct")) {
    const int n = to_int(parts[1], spec);
    if (n < 0 || n > Coloring::kMaxGround) throw BadParams("coloring needs n <= 24");
    return parts[0] == "mono" ? Coloring::monochromatic(n) : Coloring::all_distinct(n);
  }
  std::ifstream in = open(spec);
  return read_coloring(in);
}

}  // namespace rainbow
