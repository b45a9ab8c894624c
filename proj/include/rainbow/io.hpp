#pragma once

// Text and JSON formats.
//
//   family file:   "n=<n>" then one hex mask per line
//   coloring file: "n=<n>" then one color id per mask, in mask order
//   poset JSON:    {"n": size, "covers": [[p, q], ...], "labels": [...]}
//
// Anything that takes a poset also takes a catalog id; families and colorings
// also accept short generator specs such as "middle:12:2" or "butterfly:4".

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rainbow/coloring.hpp"
#include "rainbow/copy_detect.hpp"
#include "rainbow/family.hpp"
#include "rainbow/poset.hpp"
#include "rainbow/shadow_partition.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

SetFamily read_family(std::istream& in);
void write_family(std::ostream& out, const SetFamily& family);

Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& coloring);

Json poset_to_json(const Poset& poset);
Poset poset_from_json(const Json& j);

Json family_to_json(const SetFamily& family);
// {"poset": ..., "mode": ..., "images": {label: hex}}
Json embedding_to_json(const CopyEmbedding& embedding);
Json partition_to_json(const ShadowPartition& partition);

// Catalog id, or a path to a poset JSON file.
Poset resolve_poset(const std::string& spec);
// "layer:N:K", "middle:N:H", "full:N", "kt:N", or a family file.
SetFamily resolve_family(const std::string& spec);
// "butterfly:N", "broom:N:S", "antichain:N:K", "mono:N", "distinct:N",
// "lowertriv:<family spec>", or a coloring file.
Coloring resolve_coloring(const std::string& spec);

}  // namespace rainbow
