#pragma once

/**
 * @file io.hpp
 * @brief JSON documents for rings, ideals, groupoids, graphs, pi-functions,
 *        monomials, lassos and algebra elements.
 *
 * Every reader throws ParseError whose message starts with the JSON pointer
 * of the offending field, e.g. "/entries/2/ideal/gen: expected an integer".
 * Every writer emits a document that the matching reader accepts and maps
 * back to an equal value.
 */

#include "idlat/graph.hpp"
#include "idlat/groupoid.hpp"
#include "idlat/lpa_ideals.hpp"
#include "idlat/pi_function.hpp"
#include "idlat/ring_ideals.hpp"
#include "idlat/steinberg.hpp"

#include <json.hpp>

#include <string>

namespace idlat::io {

using Json = nlohmann::ordered_json;

// Reads a file (ParseError with line and column on malformed JSON).
Json read_file(const std::string& path);
Json parse_text(const std::string& text, const std::string& origin);
// A file path, or inline JSON if the argument starts with '{' or '['.
Json read_file_or_inline(const std::string& arg);

RingSpec ring_from_json(const Json& j, const std::string& at = "");
Json to_json(const RingSpec& spec);

RIdeal ideal_from_json(const RingSpec& spec, const Json& j, const std::string& at = "");
Json to_json(const RingSpec& spec, const RIdeal& ideal);

RingElement element_from_json(const RingSpec& spec, const Json& j, const std::string& at = "");
Json to_json(const RingSpec& spec, const RingElement& e);

GroupoidTable groupoid_from_json(const Json& j, const std::string& at = "");
Json to_json(const GroupoidTable& t);

GraphDoc graph_from_json(const Json& j, const std::string& at = "");
Json to_json(const GraphDoc& d);

// The ring is read from the document's "ring" field; entries must cover
// every nonempty carrier member exactly once.
PiFunction pi_from_json(const CarrierPtr& carrier, const Json& j, const std::string& at = "");
Json to_json(const PiFunction& p);

Monomial monomial_from_json(const Graph& g, const RingSpec& ring, const Json& j, const std::string& at = "");
Json to_json(const Graph& g, const RingSpec& ring, const Monomial& m);

LassoPath lasso_from_json(const Graph& g, const Json& j, const std::string& at = "");
Json to_json(const Graph& g, const LassoPath& x);

AlgebraElement algebra_element_from_json(const AlgebraPtr& alg, const Json& j, const std::string& at = "");
Json to_json(const AlgebraElement& f);

AlgebraIdeal algebra_ideal_from_json(const AlgebraPtr& alg, const Json& j, const std::string& at = "");
Json to_json(const AlgebraIdeal& i);

} // namespace idlat::io
