#include "rainbow/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "rainbow/errors.hpp"
#include "rainbow/mask.hpp"

namespace rainbow {
namespace {

struct KindInfo {
  CatalogKind kind;
  const char* name;
  int param_count;
};

constexpr KindInfo kKinds[] = {
    {CatalogKind::kChain, "chain", 1},         {CatalogKind::kAntichain, "antichain", 1},
    {CatalogKind::kFork, "fork", 1},           {CatalogKind::kBroom, "broom", 1},
    {CatalogKind::kDiamond, "diamond", 0},     {CatalogKind::kButterfly, "butterfly", 0},
    {CatalogKind::kCrown, "crown", 1},         {CatalogKind::kPathPoset, "path_poset", 1},
    {CatalogKind::kSpider, "spider", 2},       {CatalogKind::kBoolean, "boolean", 1},
    {CatalogKind::kXPoset, "x_poset", 0},
};

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table = {
      {"x", "x_poset"}, {"path", "path_poset"}, {"bowtie", "butterfly"},
      {"vee", "fork"},  {"wedge", "broom"},
  };
  return table;
}

const KindInfo& info(CatalogKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw BadParams("unknown catalog kind");
}

int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("bad integer '" + s + "' in catalog id '" + whole + "'");
  }
  return std::stoi(s);
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw BadParams(message);
}

Poset make_crown(int k) {
  require(k >= 2, "crown requires k >= 2");
  require(2 * k <= Poset::kMaxSize, "crown too large");
  auto labels = numbered("a", k);
  auto b = numbered("b", k);
  labels.insert(labels.end(), b.begin(), b.end());
  std::vector<Relation> rel;
  for (int i = 0; i < k; ++i) {
    rel.emplace_back(i, k + i);
    rel.emplace_back((i + 1) % k, k + i);
  }
  return Poset::from_relations(2 * k, rel, labels);
}

Poset make_spider(int leg_length, int legs) {
  require(leg_length >= 1 && legs >= 1, "spider requires k >= 1 and l >= 1");
  const int size = leg_length * legs + 1;
  require(size <= Poset::kMaxSize, "spider too large");
  // A vertex at distance t from the centre is maximal iff k - t is even, so
  // the leaves (t = k) are maximal.
  auto is_max = [&](int t) { return (leg_length - t) % 2 == 0; };
  std::vector<std::string> labels{"m"};
  std::vector<Relation> rel;
  for (int leg = 0; leg < legs; ++leg) {
    int prev = 0;
    for (int t = 1; t <= leg_length; ++t) {
      const int v = 1 + leg * leg_length + (t - 1);
      labels.push_back("v" + std::to_string(leg + 1) + "_" + std::to_string(t));
      if (is_max(t)) {
        rel.emplace_back(prev, v);
      } else {
        rel.emplace_back(v, prev);
      }
      prev = v;
    }
  }
  return Poset::from_relations(size, rel, labels);
}

}  // namespace

std::string CatalogId::to_string() const {
  std::string out = info(kind).name;
  if (kind == CatalogKind::kSpider) {
    return out + ":" + std::to_string(params.at(0)) + "x" + std::to_string(params.at(1));
  }
  for (int p : params) out += ":" + std::to_string(p);
  return out;
}

bool looks_like_catalog_id(const std::string& text) {
  try {
    parse_catalog_id(text);
    return true;
  } catch (const Error&) {
    return false;
  }
}

CatalogId parse_catalog_id(const std::string& text) {
  std::string name = text;
  std::string rest;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    rest = text.substr(colon + 1);
  }
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (auto it = aliases().find(name); it != aliases().end()) name = it->second;
  for (const auto& k : kKinds) {
    if (name != k.name) continue;
    CatalogId id{k.kind, {}};
    if (k.param_count == 0) {
      if (!rest.empty()) throw ParseError("catalog id '" + text + "' takes no parameters");
    } else if (k.kind == CatalogKind::kSpider) {
      auto x = rest.find('x');
      if (x == std::string::npos) throw ParseError("spider id must look like spider:KxL");
      id.params = {parse_int(rest.substr(0, x), text), parse_int(rest.substr(x + 1), text)};
    } else {
      id.params = {parse_int(rest, text)};
    }
    return id;
  }
  throw ParseError("unknown catalog poset '" + text + "'");
}

Poset catalog(const CatalogId& id) {
  const auto& p = id.params;
  switch (id.kind) {
    case CatalogKind::kChain: {
      require(p[0] >= 1 && p[0] <= Poset::kMaxSize, "chain requires 1 <= k <= 64");
      std::vector<Relation> rel;
      for (int i = 0; i + 1 < p[0]; ++i) rel.emplace_back(i, i + 1);
      return Poset::from_relations(p[0], rel, numbered("c", p[0]));
    }
    case CatalogKind::kAntichain:
      require(p[0] >= 1 && p[0] <= Poset::kMaxSize, "antichain requires 1 <= k <= 64");
      return Poset::from_relations(p[0], {}, numbered("a", p[0]));
    case CatalogKind::kFork: {
      require(p[0] >= 1 && p[0] < Poset::kMaxSize, "fork requires 1 <= s <= 63");
      std::vector<std::string> labels{"a"};
      auto b = numbered("b", p[0]);
      labels.insert(labels.end(), b.begin(), b.end());
      std::vector<Relation> rel;
      for (int i = 1; i <= p[0]; ++i) rel.emplace_back(0, i);
      return Poset::from_relations(p[0] + 1, rel, labels);
    }
    case CatalogKind::kBroom: {
      require(p[0] >= 1 && p[0] < Poset::kMaxSize, "broom requires 1 <= s <= 63");
      auto labels = numbered("c", p[0]);
      labels.push_back("d");
      std::vector<Relation> rel;
      for (int i = 0; i < p[0]; ++i) rel.emplace_back(i, p[0]);
      return Poset::from_relations(p[0] + 1, rel, labels);
    }
    case CatalogKind::kDiamond: {
      const Relation rel[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
      return Poset::from_relations(4, rel, {"a", "b", "c", "d"});
    }
    case CatalogKind::kButterfly:
      return make_crown(2);
    case CatalogKind::kCrown:
      return make_crown(p[0]);
    case CatalogKind::kPathPoset: {
      const int k = p[0];
      require(k >= 2 && 2 * k - 1 <= Poset::kMaxSize, "path_poset requires 2 <= k <= 32");
      auto labels = numbered("a", k);
      auto b = numbered("b", k - 1);
      labels.insert(labels.end(), b.begin(), b.end());
      std::vector<Relation> rel;
      for (int i = 0; i + 1 < k; ++i) {
        rel.emplace_back(i, k + i);
        rel.emplace_back(i + 1, k + i);
      }
      return Poset::from_relations(2 * k - 1, rel, labels);
    }
    case CatalogKind::kSpider:
      return make_spider(p[0], p[1]);
    case CatalogKind::kBoolean: {
      const int d = p[0];
      require(d >= 0 && d <= 6, "boolean requires 0 <= d <= 6");
      const int size = 1 << d;
      std::vector<std::string> labels;
      std::vector<Relation> rel;
      for (int a = 0; a < size; ++a) {
        labels.push_back(to_set_string(static_cast<Mask>(a)));
        for (int b = 0; b < size; ++b) {
          if (a != b && is_subset(static_cast<Mask>(a), static_cast<Mask>(b))) rel.emplace_back(a, b);
        }
      }
      return Poset::from_relations(size, rel, labels);
    }
    case CatalogKind::kXPoset: {
      const Relation rel[] = {{0, 2}, {1, 2}, {2, 3}, {2, 4}};
      return Poset::from_relations(5, rel, {"a1", "a2", "c", "b1", "b2"});
    }
  }
  throw BadParams("unknown catalog kind");
}

Poset catalog(const std::string& text) { return catalog(parse_catalog_id(text)); }

std::vector<CatalogId> catalog_ids_up_to(int max_size) {
  std::vector<CatalogId> out;
  using K = CatalogKind;
  for (int k = 1; k <= max_size; ++k) out.push_back({K::kChain, {k}});
  for (int k = 1; k <= max_size; ++k) out.push_back({K::kAntichain, {k}});
  for (int s = 1; s + 1 <= max_size; ++s) out.push_back({K::kFork, {s}});
  for (int s = 1; s + 1 <= max_size; ++s) out.push_back({K::kBroom, {s}});
  if (max_size >= 4) {
    out.push_back({K::kDiamond, {}});
    out.push_back({K::kButterfly, {}});
  }
  for (int k = 2; 2 * k <= max_size; ++k) out.push_back({K::kCrown, {k}});
  for (int k = 2; 2 * k - 1 <= max_size; ++k) out.push_back({K::kPathPoset, {k}});
  for (int k = 1; k + 1 <= max_size; ++k) {
    for (int l = 1; k * l + 1 <= max_size; ++l) out.push_back({K::kSpider, {k, l}});
  }
  for (int d = 0; d <= 6 && (1 << d) <= max_size; ++d) out.push_back({K::kBoolean, {d}});
  if (max_size >= 5) out.push_back({K::kXPoset, {}});
  return out;
}

}  // namespace rainbow
