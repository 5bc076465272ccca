// Copyright 2026 The topocat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "topocat/complete.hpp"
#include "topocat/logic.hpp"
#include "topocat/loops.hpp"
#include "topocat/rel.hpp"
#include "topocat/relseq.hpp"
#include "topocat/report.hpp"
#include "topocat/space.hpp"
#include "topocat/synt.hpp"

namespace topocat::io {

// Every reader takes the JSON value and the directory that relative file
// references are resolved against. A reference is either an inline object
// or a string naming a file; space references may also name a builtin
// space: "point", "sierpinski", "discrete:n", "indiscrete:n", "chain:n".
// Malformed input throws Error(InvalidInput) or the library error of the
// failing constructor.

using Path = std::filesystem::path;

Json read_json_file(const Path& path);
/// Resolves a string reference to (parsed file, its directory); an object
/// is returned unchanged with `base`.
std::pair<Json, Path> resolve(const Json& ref, const Path& base);

FiniteSpace read_space(const Json& ref, const Path& base);
/// {"points": [...], "opens": [[...]]}
Json space_to_json(const FiniteSpace& x);

/// A subset as an array of indices or point names.
PointSet read_subset(const Json& j, const FiniteSpace& x);

/// {"source": ref, "target": ref, "pairs": [[i, j], ...], "functional": bool}
Relation read_relation(const Json& ref, const Path& base);
Json relation_to_json(const Relation& r);
/// A relation file marked functional, or {"values": [...]} with null outside
/// the domain when the spaces are supplied by the caller.
PartialMap read_partial_map(const Json& ref, const Path& base);
PartialMap read_partial_map(const Json& ref, const Path& base, const FiniteSpace& source, const FiniteSpace& target);

/// A loop file is either a certificate {"op": "empty" | "insert_id" |
/// "concat" | "conjugate" | "product", ...} or a raw loop
/// {"op": "raw", "anchor": ref, "rels": [relation refs]}.
bool is_raw_loop(const Json& j);
LoopExpr read_loop_expr(const Json& ref, const Path& base);
Loop read_raw_loop(const Json& ref, const Path& base);
Json loop_to_json(const Loop& loop);

/// {"stages": [[names]], "steps": [[indices]], "rels": {"i,j": [[p, q]]}};
/// a missing "i,i" entry defaults to the identity.
RelSeq read_sequence(const Json& ref, const Path& base);
Json sequence_to_json(const RelSeq& s);
Json colimit_to_json(const Colimit& c);
/// {"maps": [[indices] per stage]}
SeqMorphism read_morphism(const Json& ref, const Path& base);

/// Reads a bundle file (layout in README).
Bundle read_bundle(const Json& ref, const Path& base);
Json family_to_json(const Bundle& b, const RelFamily& family);
Json trace_to_json(const Bundle& b, const std::vector<TraceEntry>& trace);

/// {"objects": [{"name", "space", "pred"}], "maps": [{"from", "to", "map"}]}
/// or {"exhaustive": [space refs]}.
SyntUniverse read_universe(const Json& ref, const Path& base);

/// {"sorts": {...}, "functions": {...}, "predicates": {...}}
Interpretation read_model(const Json& ref, const Path& base);

}  // namespace topocat::io
