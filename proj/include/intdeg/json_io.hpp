#pragma once

/* Input documents: JSON schemas for orders, subrings, monic polynomials,
 * semigroup extensions, inseparable towers, element supports, and degree
 * certificates. Schema problems raise schema_error with a location;
 * mathematical precondition failures surface as math_error from the
 * domain constructors. */

#include <string>

#include <json.hpp>

#include "intdeg/fieldtowers.hpp"
#include "intdeg/poly_degree.hpp"
#include "intdeg/semigroups.hpp"
#include "intdeg/symbolic.hpp"

namespace intdeg {

using ordered_json = nlohmann::ordered_json;

/// Exact integers from JSON: integral numbers or decimal strings.
Int json_to_int(const ordered_json& j, const std::string& where);
/// Exact integers to JSON: a number when it fits in 64 bits, else a string.
ordered_json int_to_json(const Int& v);

ordered_json load_json_file(const std::string& path);

OrderAlgebra parse_order(const ordered_json& j, const std::string& where);
/// Loads, schema-validates, and runs validate_algebra.
OrderAlgebra load_order(const std::string& path);

/// Built-in orders addressable by id in "order" references:
/// dedekind-cubic, gaussian, eisenstein, zeta6, sqrt23.
std::optional<OrderAlgebra> builtin_order(const std::string& id);

struct SubringFile {
    OrderAlgebra algebra;  // resolved from the "order" reference
    IntMatrix basis;
    std::string order_path;
};

/// The "order" field is resolved relative to the subring file's directory.
SubringFile load_subring(const std::string& path);

struct PolyFile {
    OrderAlgebra algebra;
    MonicPoly poly;
    std::string order_path;
};

PolyFile load_poly(const std::string& path);

SemigroupExtension load_semigroup_extension(const std::string& path);

InseparableTower load_tower(const std::string& path);

TowerElementSupport load_element_support(const std::string& path);

/// Certificates carry one term list per lower coefficient; each term is
/// {"coeff": c, "symbols": [exponents per module generator], "t": e}.
Certificate parse_certificate(const ordered_json& j, std::size_t nsyms,
                              const std::string& where);
Certificate load_certificate(const std::string& path, std::size_t nsyms);
ordered_json certificate_to_json(const Certificate& cert);

ordered_json int_vec_to_json(const IntVec& v);
ordered_json matrix_to_json(const IntMatrix& m);

} // namespace intdeg
