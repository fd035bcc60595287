#pragma once

#include <optional>
#include <string>

#include "deltahall/checks.hpp"

namespace deltahall {

// {"vertices": n, "arrows": [[s,t], ...]} with 0-based indices; rejects
// loops and malformed documents with config_error.
Quiver quiver_from_json(const std::string& text);
Quiver load_quiver_file(const std::string& path);

// {"T": [[...]]}; must be vertex_count x vertex_count integers.
TwistForm twist_from_json(const std::string& text, int vertex_count);
TwistForm load_twist_file(const std::string& path, int vertex_count);

// {"a": "num/den", "b": "num/den"}, canonical lowest terms on output.
std::string quad_to_json(const QuadNumber& x);
QuadNumber quad_from_json(const std::string& text, long q);

// Ordered class list with dimension vectors and representative matrices
// (row-major residue arrays, one per arrow).
std::string catalog_to_json(const Catalog& catalog);

enum class TableKind { hall, delta, derived, ext, twisted };
TableKind table_kind_from_name(const std::string& name);

// Structure constants over every basis pair within the catalog bound, in
// canonical (a, b, m) order; byte-identical output for any worker count.
// `twist` only matters for TableKind::twisted (defaults to the semi-derived
// form).
std::string table_to_json(TableKind kind, const HallTables& tables,
                          const std::optional<TwistForm>& twist = std::nullopt,
                          int jobs = 1);

std::string report_to_json(const CheckReport& report,
                           const HallTables& tables);

}  // namespace deltahall
