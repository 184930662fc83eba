#pragma once

#include <string>

#include "beic/clutter.hpp"
#include "beic/engine.hpp"

namespace beic {

/// Clutter file format: {"vertices": ["1", ...], "edges": [["1", "2"], ...]}.
/// Reading is order-insensitive; writing emits canonical order. Throws
/// Error(ParseError) on malformed input and the usual construction errors on
/// invalid clutters.
Clutter clutter_from_json(const std::string& text);
std::string clutter_to_json(const Clutter& c);

/// One line per generator, "x{i}*y{j} - x{j}*y{i}" with i before j in label
/// order, lines sorted; empty clutters give empty output.
std::string generators_text(const Clutter& c);

/// Verdict as JSON: {status, unmixed, dim, depth, certificate: [{rule,
/// paper_result, note, children}, ...]} with depth null when unknown.
std::string verdict_to_json(const Verdict& v);

}  // namespace beic
