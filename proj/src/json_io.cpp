#include "intdeg/json_io.hpp"

#include "intdeg/catalog.hpp"

#include <filesystem>
#include <fstream>

namespace intdeg {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw schema_error(where + ": " + what);
}

const ordered_json& field(const ordered_json& j, const std::string& key,
                          const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) bad(where, "missing field \"" + key + "\"");
    return *it;
}

void expect_kind(const ordered_json& j, const std::string& kind,
                 const std::string& where) {
    if (!j.is_object()) bad(where, "document must be a JSON object");
    const ordered_json& k = field(j, "kind", where);
    if (!k.is_string() || k.get<std::string>() != kind)
        bad(where, "expected kind \"" + kind + "\", got " + k.dump());
}

unsigned long json_to_ulong(const ordered_json& j, const std::string& where) {
    Int v = json_to_int(j, where);
    if (v < 0 || !v.fits_ulong_p()) bad(where, "expected a small non-negative integer");
    return v.get_ui();
}

IntVec parse_int_vec(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of integers");
    IntVec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(json_to_int(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

IntMatrix parse_matrix(const ordered_json& j, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.empty()) bad(where, "expected a non-empty array of rows");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        IntVec row = parse_int_vec(j[i], where + "[" + std::to_string(i) + "]");
        if (row.size() != cols)
            bad(where + "[" + std::to_string(i) + "]",
                "row has length " + std::to_string(row.size()) + ", expected " +
                    std::to_string(cols));
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows, cols);
}

std::string resolve_reference(const std::string& ref, const std::string& from_path) {
    fs::path p(ref);
    if (p.is_absolute() || fs::exists(p)) return ref;
    fs::path sibling = fs::path(from_path).parent_path() / p;
    if (fs::exists(sibling)) return sibling.string();
    return ref;  // let the open fail with a precise message
}

} // namespace

Int json_to_int(const ordered_json& j, const std::string& where) {
    if (j.is_number_unsigned())
        return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad(where, "string is not a decimal integer: " + j.dump());
        }
    }
    bad(where, "expected an integer (number or decimal string), got " + j.dump());
}

ordered_json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error(path + ": cannot open file");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw schema_error(path + ": " + e.what());
    }
}

OrderAlgebra parse_order(const ordered_json& j, const std::string& where) {
    expect_kind(j, "order", where);
    OrderAlgebra o;
    o.rank = json_to_ulong(field(j, "rank", where), where + ".rank");
    if (o.rank == 0 || o.rank > 16) bad(where + ".rank", "rank must be in 1..16");
    const ordered_json& names = field(j, "basis_names", where);
    if (!names.is_array() || names.size() != o.rank)
        bad(where + ".basis_names", "expected an array of rank strings");
    for (const auto& n : names) {
        if (!n.is_string()) bad(where + ".basis_names", "names must be strings");
        o.basis_names.push_back(n.get<std::string>());
    }
    o.unit = parse_int_vec(field(j, "unit", where), where + ".unit");
    if (o.unit.size() != o.rank) bad(where + ".unit", "unit must have rank entries");
    const ordered_json& table = field(j, "table", where);
    if (!table.is_array() || table.size() != o.rank)
        bad(where + ".table", "expected rank x rank x rank integers");
    for (std::size_t i = 0; i < o.rank; ++i) {
        if (!table[i].is_array() || table[i].size() != o.rank)
            bad(where + ".table", "expected rank x rank x rank integers");
        std::vector<IntVec> row;
        for (std::size_t k = 0; k < o.rank; ++k) {
            IntVec e = parse_int_vec(table[i][k], where + ".table[" + std::to_string(i) +
                                                      "][" + std::to_string(k) + "]");
            if (e.size() != o.rank)
                bad(where + ".table", "each product must have rank coordinates");
            row.push_back(std::move(e));
        }
        o.table.push_back(std::move(row));
    }
    if (j.contains("assert")) {
        const ordered_json& a = j["assert"];
        if (!a.is_object()) bad(where + ".assert", "expected an object of flags");
        if (a.contains("fraction_field_is_field")) {
            if (!a["fraction_field_is_field"].is_boolean())
                bad(where + ".assert.fraction_field_is_field", "expected a boolean");
            o.assert_fraction_field_is_field = a["fraction_field_is_field"].get<bool>();
        }
        if (a.contains("integrally_closed")) {
            if (!a["integrally_closed"].is_boolean())
                bad(where + ".assert.integrally_closed", "expected a boolean");
            o.assert_integrally_closed = a["integrally_closed"].get<bool>();
        }
    }
    return o;
}

OrderAlgebra load_order(const std::string& path) {
    OrderAlgebra o = parse_order(load_json_file(path), path);
    validate_algebra(o);
    return o;
}

std::optional<OrderAlgebra> builtin_order(const std::string& id) {
    if (id == "dedekind-cubic") return dedekind_cubic();
    if (id == "gaussian") return gaussian_integers();
    if (id == "eisenstein") return eisenstein_integers();
    if (id == "zeta6") return zeta6_order();
    if (id == "sqrt23") return sqrt23_order();
    return std::nullopt;
}

namespace {

// "order" references accept a builtin id or a path
OrderAlgebra resolve_order_reference(const std::string& ref, const std::string& from,
                                     std::string& resolved_path) {
    if (auto o = builtin_order(ref)) {
        resolved_path = "builtin:" + ref;
        return *o;
    }
    resolved_path = resolve_reference(ref, from);
    return load_order(resolved_path);
}

} // namespace

SubringFile load_subring(const std::string& path) {
    ordered_json j = load_json_file(path);
    expect_kind(j, "subring", path);
    const ordered_json& ref = field(j, "order", path);
    if (!ref.is_string()) bad(path + ".order", "expected a path string");
    SubringFile out;
    out.algebra = resolve_order_reference(ref.get<std::string>(), path, out.order_path);
    out.basis = parse_matrix(field(j, "basis", path), out.algebra.rank, path + ".basis");
    return out;
}

PolyFile load_poly(const std::string& path) {
    ordered_json j = load_json_file(path);
    expect_kind(j, "poly", path);
    const ordered_json& ref = field(j, "order", path);
    if (!ref.is_string()) bad(path + ".order", "expected a path string");
    PolyFile out;
    out.algebra = resolve_order_reference(ref.get<std::string>(), path, out.order_path);
    const ordered_json& coeffs = field(j, "coeffs", path);
    if (!coeffs.is_array() || coeffs.empty())
        bad(path + ".coeffs", "expected a non-empty array (degree must be >= 1)");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        IntVec c = parse_int_vec(coeffs[i], path + ".coeffs[" + std::to_string(i) + "]");
        if (c.size() != out.algebra.rank)
            bad(path + ".coeffs", "each coefficient needs rank coordinates");
        out.poly.coeffs.push_back(std::move(c));
    }
    return out;
}

SemigroupExtension load_semigroup_extension(const std::string& path) {
    ordered_json j = load_json_file(path);
    expect_kind(j, "semigroup-extension", path);
    auto gens = [&](const char* key) {
        const ordered_json& arr = field(j, key, path);
        if (!arr.is_array() || arr.empty())
            bad(path + "." + key, "expected a non-empty array of generators");
        std::vector<unsigned long> out;
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.push_back(
                json_to_ulong(arr[i], path + "." + key + "[" + std::to_string(i) + "]"));
        return out;
    };
    return SemigroupExtension(NumericalSemigroup(gens("A")), NumericalSemigroup(gens("B")));
}

InseparableTower load_tower(const std::string& path) {
    ordered_json j = load_json_file(path);
    expect_kind(j, "tower", path);
    InseparableTower t;
    t.p = json_to_int(field(j, "p", path), path + ".p");
    const ordered_json& exps = field(j, "exponents", path);
    if (!exps.is_array() || exps.empty())
        bad(path + ".exponents", "expected a non-empty array");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        unsigned long e =
            json_to_ulong(exps[i], path + ".exponents[" + std::to_string(i) + "]");
        if (e > 30) bad(path + ".exponents", "exponent too large");
        t.exponents.push_back(static_cast<unsigned>(e));
    }
    validate_tower(t);
    return t;
}

TowerElementSupport load_element_support(const std::string& path) {
    ordered_json j = load_json_file(path);
    expect_kind(j, "element", path);
    const ordered_json& terms = field(j, "terms", path);
    if (!terms.is_array()) bad(path + ".terms", "expected an array of exponent vectors");
    TowerElementSupport s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        IntVec a = parse_int_vec(terms[i], path + ".terms[" + std::to_string(i) + "]");
        s.terms.push_back(std::vector<Int>(a.begin(), a.end()));
    }
    return s;
}

Certificate parse_certificate(const ordered_json& j, std::size_t nsyms,
                              const std::string& where) {
    expect_kind(j, "certificate", where);
    Certificate cert;
    unsigned long n = json_to_ulong(field(j, "n", where), where + ".n");
    if (n == 0) bad(where + ".n", "certificate degree must be positive");
    cert.n = static_cast<unsigned>(n);
    const ordered_json& lcs = field(j, "lower_coeffs", where);
    if (!lcs.is_array()) bad(where + ".lower_coeffs", "expected an array");
    for (std::size_t i = 0; i < lcs.size(); ++i) {
        const std::string ctx = where + ".lower_coeffs[" + std::to_string(i) + "]";
        if (!lcs[i].is_array()) bad(ctx, "expected an array of terms");
        SymbolicElement elt = SymbolicElement::zero(nsyms);
        for (std::size_t k = 0; k < lcs[i].size(); ++k) {
            const ordered_json& t = lcs[i][k];
            const std::string tctx = ctx + "[" + std::to_string(k) + "]";
            if (!t.is_object()) bad(tctx, "expected a term object");
            Int coeff = json_to_int(field(t, "coeff", tctx), tctx + ".coeff");
            const ordered_json& syms = field(t, "symbols", tctx);
            if (!syms.is_array() || syms.size() != nsyms)
                bad(tctx + ".symbols",
                    "expected " + std::to_string(nsyms) + " exponents (one per module "
                    "generator)");
            std::vector<unsigned> exp;
            for (std::size_t s = 0; s < syms.size(); ++s)
                exp.push_back(static_cast<unsigned>(
                    json_to_ulong(syms[s], tctx + ".symbols[" + std::to_string(s) + "]")));
            unsigned long te = json_to_ulong(field(t, "t", tctx), tctx + ".t");
            elt = elt + SymbolicElement::term(nsyms, coeff, std::move(exp), te);
        }
        cert.lower_coeffs.push_back(std::move(elt));
    }
    return cert;
}

Certificate load_certificate(const std::string& path, std::size_t nsyms) {
    return parse_certificate(load_json_file(path), nsyms, path);
}

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["kind"] = "certificate";
    j["n"] = cert.n;
    ordered_json lcs = ordered_json::array();
    for (const SymbolicElement& a : cert.lower_coeffs) {
        ordered_json terms = ordered_json::array();
        for (const SymTerm& t : a.terms()) {
            ordered_json term;
            term["coeff"] = int_to_json(t.coeff);
            term["symbols"] = t.sym_exp;
            term["t"] = t.t_exp;
            terms.push_back(std::move(term));
        }
        lcs.push_back(std::move(terms));
    }
    j["lower_coeffs"] = std::move(lcs);
    return j;
}

ordered_json int_vec_to_json(const IntVec& v) {
    ordered_json arr = ordered_json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(int_vec_to_json(m.row(i)));
    return arr;
}

} // namespace intdeg
