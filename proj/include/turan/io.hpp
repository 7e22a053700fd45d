#pragma once

// Hypergraph file formats.
//
// Text (DIMACS-like):
//   c optional comments
//   p hg <n> <r>
//   e v1 v2 ... vr        (0-indexed, one line per edge)
//
// JSON: {"n": 6, "r": 3, "edges": [[0,1,2], [3,4,5]]}

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "turan/hypergraph.hpp"

namespace turan {

Hypergraph read_hypergraph_text(std::istream& in);
void write_hypergraph_text(std::ostream& out, const Hypergraph& h);

Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json hypergraph_to_json(const Hypergraph& h);

// Sniffs the format: leading '{' means JSON, otherwise text.
Hypergraph read_hypergraph_any(std::istream& in);

std::string to_text_string(const Hypergraph& h);

}
